#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "fdalg/representation.hpp"

namespace fdalg {

/// Candidate linear homomorphism A -> B over the identity map of the field.
/// `matrix` is r^i_j, target-dim x source-dim.
struct HomCandidate {
    AlgebraPtr source;
    AlgebraPtr target;
    Matrix matrix;

    HomCandidate(AlgebraPtr source, AlgebraPtr target, Matrix matrix);
    LinearMap as_map() const { return LinearMap(source, target, matrix); }
};

struct HomResidual {
    std::size_t i, j, l;
    Scalar value;
};

struct HomReport {
    bool holds = true;
    /// Nonzero r^l_k C1_ij^k - C2_pq^l r^p_i r^q_j, ordered by (i, j, l).
    std::vector<HomResidual> residuals;
};

HomReport check_linear_homomorphism(const HomCandidate& h);
bool is_linear_homomorphism(const HomCandidate& h);

/// Second path: r(e_i e_j) == r(e_i) r(e_j) on every basis pair.
bool preserves_products(const HomCandidate& h);

struct QuatAutoReport {
    bool pass = false;
    /// Failing equation with both sides, empty on pass.
    std::string witness;
    /// Verdict of the homomorphism residual check combined with rank 4.
    bool homomorphism_and_invertible = false;
    bool consistent() const { return pass == homomorphism_and_invertible; }
};

/// Checks a 4x4 rational matrix against the automorphism conditions of the
/// quaternion algebra: each column of the imaginary block is the cross product
/// of the next two, the imaginary columns have unit length, and the border row
/// and column are those of the identity. Throws PreconditionError outside Q.
QuatAutoReport quat_auto_check(const Matrix& r);

std::optional<Decomposition> hom_standard_components(const HomCandidate& h, const GeneratorSet& gens);

} // namespace fdalg
