#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "fdalg/matrix.hpp"

namespace fdalg {

struct RrefResult {
    Matrix reduced;
    std::size_t rank = 0;
    std::vector<std::size_t> pivot_cols;
};

/// Gauss-Jordan elimination. Pivots are the first nonzero entry found scanning
/// columns left to right and rows top to bottom, so the result is the unique
/// reduced row-echelon form.
RrefResult rref(const Matrix& m);

std::size_t rank(const Matrix& m);

/// Basis of {x : m x = 0}: one vector per free column (ascending), with the
/// free variable set to 1.
std::vector<Vec> nullspace_basis(const Matrix& m);

struct Solution {
    /// cols(m) x cols(rhs); free variables are zero.
    Matrix particular;
    std::vector<Vec> nullspace;
};

/// Solves m x = rhs. Returns std::nullopt iff rank([m | rhs]) > rank(m).
std::optional<Solution> solve(const Matrix& m, const Matrix& rhs);

/// Inverse of a square matrix, std::nullopt if singular.
std::optional<Matrix> inverse(const Matrix& m);

/// Subspace of F^n held as the nonzero rows of a reduced row-echelon basis.
/// Two subspaces are equal iff their reduced bases are equal.
class Subspace {
public:
    Subspace(std::size_t ambient_dim, const Field& field);
    /// Span of `vectors` (each of length `ambient_dim`).
    static Subspace span(std::size_t ambient_dim, const Field& field, const std::vector<Vec>& vectors);

    std::size_t ambient_dim() const noexcept { return ambient_dim_; }
    std::size_t dim() const noexcept { return basis_.size(); }
    const Field& field() const noexcept { return field_; }
    const std::vector<Vec>& basis() const noexcept { return basis_; }

    bool contains(const Vec& v) const;
    bool contains(const Subspace& other) const;
    bool is_full() const noexcept { return dim() == ambient_dim_; }

    Subspace operator+(const Subspace& other) const;
    Subspace with(const Vec& v) const;

    friend bool operator==(const Subspace& a, const Subspace& b) = default;

private:
    std::size_t ambient_dim_;
    Field field_;
    std::vector<Vec> basis_;
};

} // namespace fdalg
