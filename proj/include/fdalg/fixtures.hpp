#pragma once

#include "fdalg/algebra.hpp"

namespace fdalg::fixtures {

/// Hamilton quaternions, basis (1, i, j, k), unit e0.
AlgebraPtr quaternions(const Field& field = Field::rational());

/// Complex numbers as a 2-dim algebra, basis (1, i), unit e0.
AlgebraPtr complex_numbers(const Field& field = Field::rational());

/// 2-dim nonassociative algebra on (x, y) with x y = x and every other
/// basis product zero. No unit.
AlgebraPtr n2(const Field& field = Field::rational());

/// n2 with an adjoined unit: basis (1, x, y).
AlgebraPtr n2_unital(const Field& field = Field::rational());

/// The field itself: one basis vector e0 with e0 e0 = e0.
AlgebraPtr scalar_algebra(const Field& field = Field::rational());

} // namespace fdalg::fixtures
