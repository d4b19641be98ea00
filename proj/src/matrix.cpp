#include "fdalg/matrix.hpp"

#include <ostream>

#include "fdalg/error.hpp"

namespace fdalg {

Matrix::Matrix(std::size_t rows, std::size_t cols, const Field& field)
    : rows_(rows), cols_(cols), field_(field), entries_(rows * cols, Scalar::zero(field)) {}

Matrix::Matrix(std::size_t rows, std::size_t cols, const Field& field, std::vector<Scalar> entries)
    : rows_(rows), cols_(cols), field_(field), entries_(std::move(entries)) {
    if (entries_.size() != rows * cols)
        throw ShapeMismatch("matrix entries do not match " + std::to_string(rows) + "x" + std::to_string(cols));
    for (const auto& e : entries_)
        if (e.field() != field) throw FieldMismatch("matrix entry outside " + field.name());
}

Matrix Matrix::identity(std::size_t n, const Field& field) {
    Matrix m(n, n, field);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar::one(field);
    return m;
}

Matrix Matrix::from_rows(const std::vector<Vec>& rows, const Field& field) {
    std::size_t cols = rows.empty() ? 0 : rows.front().size();
    std::vector<Scalar> entries;
    entries.reserve(rows.size() * cols);
    for (const auto& r : rows) {
        if (r.size() != cols) throw ShapeMismatch("ragged matrix rows");
        entries.insert(entries.end(), r.begin(), r.end());
    }
    return Matrix(rows.size(), cols, field, std::move(entries));
}

Matrix Matrix::column(std::span<const Scalar> v, const Field& field) {
    return Matrix(v.size(), 1, field, Vec(v.begin(), v.end()));
}

Vec Matrix::col(std::size_t c) const {
    Vec v;
    v.reserve(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v.push_back((*this)(r, c));
    return v;
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_, field_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

Matrix Matrix::operator-() const {
    Matrix m = *this;
    for (auto& e : m.entries_) e = -e;
    return m;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw ShapeMismatch("matrix sum shape");
    Matrix m = a;
    for (std::size_t i = 0; i < m.entries_.size(); ++i) m.entries_[i] += b.entries_[i];
    return m;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw ShapeMismatch("matrix difference shape");
    Matrix m = a;
    for (std::size_t i = 0; i < m.entries_.size(); ++i) m.entries_[i] -= b.entries_[i];
    return m;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw ShapeMismatch("matrix product shape");
    if (a.field_ != b.field_) throw FieldMismatch("matrix product across fields");
    Matrix m(a.rows_, b.cols_, a.field_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Scalar& aik = a(i, k);
            if (aik.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) m(i, j) += aik * b(k, j);
        }
    return m;
}

Matrix operator*(const Scalar& s, const Matrix& m) {
    Matrix r = m;
    for (auto& e : r.entries_) e = s * e;
    return r;
}

bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.field_ == b.field_ && a.entries_ == b.entries_;
}

Vec Matrix::apply(std::span<const Scalar> v) const {
    if (v.size() != cols_) throw ShapeMismatch("matrix-vector shape");
    Vec out(rows_, Scalar::zero(field_));
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) {
            const Scalar& e = (*this)(r, c);
            if (!e.is_zero()) out[r] += e * v[c];
        }
    return out;
}

Matrix Matrix::hstack(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_) throw ShapeMismatch("hstack row count");
    if (a.field_ != b.field_) throw FieldMismatch("hstack across fields");
    Matrix m(a.rows_, a.cols_ + b.cols_, a.field_);
    for (std::size_t r = 0; r < a.rows_; ++r) {
        for (std::size_t c = 0; c < a.cols_; ++c) m(r, c) = a(r, c);
        for (std::size_t c = 0; c < b.cols_; ++c) m(r, a.cols_ + c) = b(r, c);
    }
    return m;
}

Matrix Matrix::vstack(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.cols_) throw ShapeMismatch("vstack column count");
    if (a.field_ != b.field_) throw FieldMismatch("vstack across fields");
    std::vector<Scalar> entries = a.entries_;
    entries.insert(entries.end(), b.entries_.begin(), b.entries_.end());
    return Matrix(a.rows_ + b.rows_, a.cols_, a.field_, std::move(entries));
}

bool Matrix::is_zero() const { return fdalg::is_zero(entries_); }

std::ostream& operator<<(std::ostream& os, const Matrix& m) {
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) os << (c ? " " : "") << m(r, c);
        os << '\n';
    }
    return os;
}

Vec zero_vec(std::size_t n, const Field& field) { return Vec(n, Scalar::zero(field)); }

Vec operator+(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw ShapeMismatch("vector sum length");
    Vec r = a;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
    return r;
}

Vec operator-(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw ShapeMismatch("vector difference length");
    Vec r = a;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
    return r;
}

Vec operator*(const Scalar& s, const Vec& v) {
    Vec r = v;
    for (auto& e : r) e = s * e;
    return r;
}

bool is_zero(std::span<const Scalar> v) {
    for (const auto& e : v)
        if (!e.is_zero()) return false;
    return true;
}

} // namespace fdalg
