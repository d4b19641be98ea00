#include "fdalg/linalg.hpp"

#include <utility>

#include "fdalg/error.hpp"

namespace fdalg {

RrefResult rref(const Matrix& m) {
    RrefResult out{m, 0, {}};
    Matrix& a = out.reduced;
    const std::size_t rows = a.rows();
    const std::size_t cols = a.cols();

    std::size_t pivot_row = 0;
    for (std::size_t c = 0; c < cols && pivot_row < rows; ++c) {
        std::size_t r = pivot_row;
        while (r < rows && a(r, c).is_zero()) ++r;
        if (r == rows) continue;

        if (r != pivot_row)
            for (std::size_t k = 0; k < cols; ++k) std::swap(a(r, k), a(pivot_row, k));

        const Scalar inv = a(pivot_row, c).inverse();
        for (std::size_t k = c; k < cols; ++k) a(pivot_row, k) *= inv;

        for (std::size_t i = 0; i < rows; ++i) {
            if (i == pivot_row || a(i, c).is_zero()) continue;
            const Scalar factor = a(i, c);
            for (std::size_t k = c; k < cols; ++k)
                if (!a(pivot_row, k).is_zero()) a(i, k) -= factor * a(pivot_row, k);
        }
        out.pivot_cols.push_back(c);
        ++pivot_row;
    }
    out.rank = pivot_row;
    return out;
}

std::size_t rank(const Matrix& m) { return rref(m).rank; }

namespace {

std::vector<Vec> nullspace_from_rref(const RrefResult& r, std::size_t cols) {
    const Field& field = r.reduced.field();
    std::vector<bool> is_pivot(cols, false);
    for (auto c : r.pivot_cols) is_pivot[c] = true;

    std::vector<Vec> basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        Vec v = zero_vec(cols, field);
        v[free] = Scalar::one(field);
        for (std::size_t i = 0; i < r.pivot_cols.size(); ++i) v[r.pivot_cols[i]] = -r.reduced(i, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

} // namespace

std::vector<Vec> nullspace_basis(const Matrix& m) { return nullspace_from_rref(rref(m), m.cols()); }

std::optional<Solution> solve(const Matrix& m, const Matrix& rhs) {
    if (rhs.rows() != m.rows()) throw ShapeMismatch("rhs rows must equal matrix rows");
    const std::size_t n = m.cols();
    const RrefResult aug = rref(Matrix::hstack(m, rhs));

    // A pivot in the rhs block means rank([m|rhs]) > rank(m).
    std::size_t coeff_rank = 0;
    for (auto c : aug.pivot_cols) {
        if (c >= n) return std::nullopt;
        ++coeff_rank;
    }

    Matrix particular(n, rhs.cols(), m.field());
    for (std::size_t i = 0; i < coeff_rank; ++i)
        for (std::size_t j = 0; j < rhs.cols(); ++j) particular(aug.pivot_cols[i], j) = aug.reduced(i, n + j);

    // The coefficient block of rref([m|rhs]) is rref(m).
    RrefResult coeff{Matrix(), coeff_rank, aug.pivot_cols};
    Matrix reduced(m.rows(), n, m.field());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < n; ++j) reduced(i, j) = aug.reduced(i, j);
    coeff.reduced = std::move(reduced);

    return Solution{std::move(particular), nullspace_from_rref(coeff, n)};
}

std::optional<Matrix> inverse(const Matrix& m) {
    if (m.rows() != m.cols()) throw ShapeMismatch("inverse of a non-square matrix");
    auto sol = solve(m, Matrix::identity(m.rows(), m.field()));
    if (!sol || !sol->nullspace.empty()) return std::nullopt;
    return std::move(sol->particular);
}

Subspace::Subspace(std::size_t ambient_dim, const Field& field) : ambient_dim_(ambient_dim), field_(field) {}

Subspace Subspace::span(std::size_t ambient_dim, const Field& field, const std::vector<Vec>& vectors) {
    Subspace s(ambient_dim, field);
    if (vectors.empty()) return s;
    for (const auto& v : vectors)
        if (v.size() != ambient_dim) throw ShapeMismatch("span vector length");
    RrefResult r = rref(Matrix::from_rows(vectors, field));
    for (std::size_t i = 0; i < r.rank; ++i) {
        auto row = r.reduced.row(i);
        s.basis_.emplace_back(row.begin(), row.end());
    }
    return s;
}

bool Subspace::contains(const Vec& v) const { return with(v).dim() == dim(); }

bool Subspace::contains(const Subspace& other) const { return (*this + other).dim() == dim(); }

Subspace Subspace::operator+(const Subspace& other) const {
    if (other.ambient_dim_ != ambient_dim_) throw ShapeMismatch("subspace ambient dimensions differ");
    std::vector<Vec> all = basis_;
    all.insert(all.end(), other.basis_.begin(), other.basis_.end());
    return span(ambient_dim_, field_, all);
}

Subspace Subspace::with(const Vec& v) const {
    std::vector<Vec> all = basis_;
    all.push_back(v);
    return span(ambient_dim_, field_, all);
}

} // namespace fdalg
