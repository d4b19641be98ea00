#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace fdalg {

/// Operation of a fixed arity on the carrier {0, ..., m-1}; values are
/// stored row-major over the argument tuple (first argument most significant).
class OpTable {
public:
    OpTable(std::size_t carrier_size, std::size_t arity, std::vector<std::size_t> values);

    std::size_t carrier_size() const noexcept { return carrier_; }
    std::size_t arity() const noexcept { return arity_; }
    const std::vector<std::size_t>& values() const noexcept { return values_; }

    std::size_t operator()(std::span<const std::size_t> args) const;
    std::size_t operator()(std::size_t x, std::size_t y) const;

private:
    std::size_t carrier_;
    std::size_t arity_;
    std::vector<std::size_t> values_;
};

struct FiniteOpAlgebra {
    OpTable op1;
    OpTable op2;

    FiniteOpAlgebra(OpTable op1, OpTable op2);
    std::size_t carrier_size() const noexcept { return op1.carrier_size(); }
};

struct Counterexample {
    std::size_t rows = 0; ///< arity of op1
    std::size_t cols = 0; ///< arity of op2
    std::vector<std::size_t> matrix; ///< row-major rows x cols
    std::size_t lhs = 0;
    std::size_t rhs = 0;
};

struct InterchangeResult {
    std::optional<Counterexample> counterexample;
    std::size_t checked = 0;
    bool holds() const noexcept { return !counterexample; }
};

/// Largest argument-matrix count interchange_holds will enumerate.
inline constexpr std::size_t interchange_limit = 100'000'000;

/// Compares op1(op2(row_1), ..., op2(row_p)) with op2(op1(col_1), ..., op1(col_q))
/// on every p x q argument matrix, in lexicographic order of the row-major
/// flattening. Throws TooLarge beyond interchange_limit matrices.
InterchangeResult interchange_holds(const FiniteOpAlgebra& alg);

struct RingInterchangeReport {
    InterchangeResult result;
    std::size_t zero = 0;
    /// The product is identically zero, so both sides collapse to zero.
    bool degenerate = false;
    /// a11*a12 + a11*a22 + a21*a12 + a21*a22 on the witness, if any.
    std::optional<std::size_t> expanded_rhs;
    std::string summary;
};

/// Validates (add, mul) as a finite ring: additive abelian group and both
/// distributive laws. Throws NotARing naming the first failed law.
void validate_ring(const OpTable& add, const OpTable& mul);

/// Runs interchange_holds with op1 = add and op2 = mul on a validated ring.
RingInterchangeReport ring_interchange_report(const OpTable& add, const OpTable& mul);

} // namespace fdalg
