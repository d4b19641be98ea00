#pragma once

#include <cstddef>
#include <vector>

#include "fdalg/algebra.hpp"

namespace fdalg {

/// Linear map between algebras, held by its coordinate matrix: f(x)^i = f^i_j x^j.
/// The matrix is target-dim x source-dim.
class LinearMap {
public:
    LinearMap(AlgebraPtr source, AlgebraPtr target, Matrix coords);

    static LinearMap identity(const AlgebraPtr& alg);
    static LinearMap zero(const AlgebraPtr& source, const AlgebraPtr& target);
    /// E^k_l: sends e_l to e_k, every other basis vector to 0.
    static LinearMap elementary(const AlgebraPtr& source, const AlgebraPtr& target, std::size_t k, std::size_t l);
    /// Inverse of vec(): entries read row-major.
    static LinearMap from_vec(const AlgebraPtr& source, const AlgebraPtr& target, const Vec& v);

    const AlgebraPtr& source() const noexcept { return source_; }
    const AlgebraPtr& target() const noexcept { return target_; }
    const Matrix& coords() const noexcept { return coords_; }
    const Field& field() const noexcept { return source_->field(); }
    const Scalar& operator()(std::size_t k, std::size_t l) const { return coords_(k, l); }

    /// Coordinates flattened row-major: index k * source_dim + l.
    Vec vec() const;

    Element operator()(const Element& x) const { return eval(x); }
    Element eval(const Element& x) const;

    bool is_zero() const { return coords_.is_zero(); }

    friend LinearMap operator+(const LinearMap& f, const LinearMap& g);
    friend LinearMap operator-(const LinearMap& f, const LinearMap& g);
    friend LinearMap operator*(const Scalar& d, const LinearMap& f);
    friend bool operator==(const LinearMap& f, const LinearMap& g);

private:
    AlgebraPtr source_;
    AlgebraPtr target_;
    Matrix coords_;
};

Element eval(const LinearMap& f, const Element& x);
LinearMap add(const LinearMap& f, const LinearMap& g);
LinearMap scale(const Scalar& d, const LinearMap& f);
/// g after f. Throws AlgebraMismatch unless f's target is g's source.
LinearMap compose(const LinearMap& g, const LinearMap& f);

/// Throws AlgebraMismatch unless both maps share source and target.
void require_same_shape(const LinearMap& f, const LinearMap& g, const char* context);

/// Coordinate functionals h^i with h^i(e_j) = delta^i_j, valued in the
/// one-dimensional algebra over the same field.
std::vector<LinearMap> dual_basis(const AlgebraPtr& alg);

} // namespace fdalg
