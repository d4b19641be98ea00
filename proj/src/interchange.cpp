#include "fdalg/interchange.hpp"

#include <sstream>

#include "fdalg/error.hpp"

namespace fdalg {

namespace {

// m^e, or nullopt once it passes `limit`.
std::optional<std::size_t> bounded_power(std::size_t m, std::size_t e, std::size_t limit) {
    std::size_t acc = 1;
    for (std::size_t i = 0; i < e; ++i) {
        if (m != 0 && acc > limit / m) return std::nullopt;
        acc *= m;
    }
    return acc;
}

bool advance(std::vector<std::size_t>& digits, std::size_t base) {
    for (std::size_t s = digits.size(); s-- > 0;) {
        if (++digits[s] < base) return true;
        digits[s] = 0;
    }
    return false;
}

std::string triple(std::size_t a, std::size_t b, std::size_t c) {
    return "(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")";
}

} // namespace

OpTable::OpTable(std::size_t carrier_size, std::size_t arity, std::vector<std::size_t> values)
    : carrier_(carrier_size), arity_(arity), values_(std::move(values)) {
    if (carrier_ == 0) throw ValidationError("carrier", "carrier must be nonempty");
    if (arity_ == 0) throw ValidationError("arity", "operation arity must be at least 1");
    const auto expected = bounded_power(carrier_, arity_, interchange_limit);
    if (!expected || values_.size() != *expected)
        throw ValidationError("table", "operation table has " + std::to_string(values_.size()) + " entries");
    for (auto v : values_)
        if (v >= carrier_) throw ValidationError("table", "table entry " + std::to_string(v) + " outside carrier");
}

std::size_t OpTable::operator()(std::span<const std::size_t> args) const {
    if (args.size() != arity_) throw ArityMismatch("operation applied to wrong number of arguments");
    std::size_t flat = 0;
    for (auto a : args) flat = flat * carrier_ + a;
    return values_[flat];
}

std::size_t OpTable::operator()(std::size_t x, std::size_t y) const {
    const std::size_t args[2] = {x, y};
    return (*this)(args);
}

FiniteOpAlgebra::FiniteOpAlgebra(OpTable a, OpTable b) : op1(std::move(a)), op2(std::move(b)) {
    if (op1.carrier_size() != op2.carrier_size()) throw ValidationError("carrier", "operations on different carriers");
}

InterchangeResult interchange_holds(const FiniteOpAlgebra& alg) {
    const std::size_t p = alg.op1.arity();
    const std::size_t q = alg.op2.arity();
    const std::size_t m = alg.carrier_size();
    if (!bounded_power(m, p * q, interchange_limit))
        throw TooLarge(std::to_string(m) + "^" + std::to_string(p * q) + " argument matrices exceed the limit");

    InterchangeResult result;
    std::vector<std::size_t> a(p * q, 0);
    std::vector<std::size_t> inner_row(q), inner_col(p), outer_lhs(p), outer_rhs(q);
    do {
        ++result.checked;
        for (std::size_t r = 0; r < p; ++r) {
            for (std::size_t c = 0; c < q; ++c) inner_row[c] = a[r * q + c];
            outer_lhs[r] = alg.op2(inner_row);
        }
        for (std::size_t c = 0; c < q; ++c) {
            for (std::size_t r = 0; r < p; ++r) inner_col[r] = a[r * q + c];
            outer_rhs[c] = alg.op1(inner_col);
        }
        const std::size_t lhs = alg.op1(outer_lhs);
        const std::size_t rhs = alg.op2(outer_rhs);
        if (lhs != rhs) {
            result.counterexample = Counterexample{p, q, a, lhs, rhs};
            break;
        }
    } while (advance(a, m));
    return result;
}

void validate_ring(const OpTable& add, const OpTable& mul) {
    if (add.arity() != 2 || mul.arity() != 2) throw NotARing("ring operations must be binary");
    if (add.carrier_size() != mul.carrier_size()) throw NotARing("ring operations on different carriers");
    const std::size_t m = add.carrier_size();

    std::optional<std::size_t> zero;
    for (std::size_t z = 0; z < m && !zero; ++z) {
        bool ok = true;
        for (std::size_t x = 0; x < m && ok; ++x) ok = add(z, x) == x && add(x, z) == x;
        if (ok) zero = z;
    }
    if (!zero) throw NotARing("addition has no neutral element");

    for (std::size_t x = 0; x < m; ++x) {
        bool has_negative = false;
        for (std::size_t y = 0; y < m && !has_negative; ++y) has_negative = add(x, y) == *zero;
        if (!has_negative) throw NotARing("element " + std::to_string(x) + " has no additive inverse");
        for (std::size_t y = 0; y < m; ++y) {
            if (add(x, y) != add(y, x))
                throw NotARing("addition is not commutative at (" + std::to_string(x) + "," + std::to_string(y) + ")");
            for (std::size_t z = 0; z < m; ++z) {
                if (add(add(x, y), z) != add(x, add(y, z)))
                    throw NotARing("addition is not associative at " + triple(x, y, z));
                if (mul(x, add(y, z)) != add(mul(x, y), mul(x, z)))
                    throw NotARing("left distributivity fails at " + triple(x, y, z));
                if (mul(add(x, y), z) != add(mul(x, z), mul(y, z)))
                    throw NotARing("right distributivity fails at " + triple(x, y, z));
            }
        }
    }
}

RingInterchangeReport ring_interchange_report(const OpTable& add, const OpTable& mul) {
    validate_ring(add, mul);
    RingInterchangeReport report;
    const std::size_t m = add.carrier_size();
    for (std::size_t z = 0; z < m; ++z)
        if (add(z, z) == z) report.zero = z;
    report.degenerate = true;
    for (auto v : mul.values()) report.degenerate = report.degenerate && v == report.zero;

    report.result = interchange_holds(FiniteOpAlgebra(add, mul));

    std::ostringstream out;
    if (const auto& w = report.result.counterexample) {
        const std::size_t a11 = w->matrix[0], a12 = w->matrix[1], a21 = w->matrix[2], a22 = w->matrix[3];
        report.expanded_rhs = add(add(mul(a11, a12), mul(a11, a22)), add(mul(a21, a12), mul(a21, a22)));
        out << "counterexample a = [[" << a11 << "," << a12 << "],[" << a21 << "," << a22 << "]]: "
            << "a11*a12 + a21*a22 = " << w->lhs << ", (a11 + a21)*(a12 + a22) = " << w->rhs
            << " = a11*a12 + a11*a22 + a21*a12 + a21*a22 = " << *report.expanded_rhs;
    } else {
        out << "interchange holds on all " << report.result.checked << " argument matrices";
        if (report.degenerate) out << " (degenerate: every product is zero)";
    }
    report.summary = out.str();
    return report;
}

} // namespace fdalg
