#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <vector>

#include "fdalg/scalar.hpp"

namespace fdalg {

using Vec = std::vector<Scalar>;

/// Dense row-major matrix of scalars sharing one field.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, const Field& field);
    /// Throws ShapeMismatch if `entries.size() != rows * cols`, FieldMismatch
    /// if an entry is not in `field`.
    Matrix(std::size_t rows, std::size_t cols, const Field& field, std::vector<Scalar> entries);

    static Matrix identity(std::size_t n, const Field& field);
    static Matrix from_rows(const std::vector<Vec>& rows, const Field& field);
    static Matrix column(std::span<const Scalar> v, const Field& field);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    const Field& field() const noexcept { return field_; }

    Scalar& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    const Scalar& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

    std::span<const Scalar> entries() const noexcept { return entries_; }
    std::span<const Scalar> row(std::size_t r) const { return {entries_.data() + r * cols_, cols_}; }
    Vec col(std::size_t c) const;

    Matrix transpose() const;
    Matrix operator-() const;

    friend Matrix operator+(const Matrix& a, const Matrix& b);
    friend Matrix operator-(const Matrix& a, const Matrix& b);
    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend Matrix operator*(const Scalar& s, const Matrix& m);
    friend bool operator==(const Matrix& a, const Matrix& b);

    Vec apply(std::span<const Scalar> v) const;

    /// [a | b]
    static Matrix hstack(const Matrix& a, const Matrix& b);
    /// a stacked above b
    static Matrix vstack(const Matrix& a, const Matrix& b);

    bool is_zero() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    Field field_ = Field::rational();
    std::vector<Scalar> entries_;
};

std::ostream& operator<<(std::ostream& os, const Matrix& m);

Vec zero_vec(std::size_t n, const Field& field);
Vec operator+(const Vec& a, const Vec& b);
Vec operator-(const Vec& a, const Vec& b);
Vec operator*(const Scalar& s, const Vec& v);
bool is_zero(std::span<const Scalar> v);

} // namespace fdalg
