#include "fdalg/homomorphism.hpp"

#include <array>

#include "fdalg/error.hpp"
#include "fdalg/fixtures.hpp"

namespace fdalg {

HomCandidate::HomCandidate(AlgebraPtr src, AlgebraPtr tgt, Matrix m)
    : source(std::move(src)), target(std::move(tgt)), matrix(std::move(m)) {
    // LinearMap validates shape and field.
    (void)as_map();
}

HomReport check_linear_homomorphism(const HomCandidate& h) {
    const Algebra& a = *h.source;
    const Algebra& b = *h.target;
    const Matrix& r = h.matrix;
    const std::size_t n1 = a.dim();
    const std::size_t n2 = b.dim();
    const Field& f = a.field();

    HomReport report;
    for (std::size_t i = 0; i < n1; ++i)
        for (std::size_t j = 0; j < n1; ++j)
            for (std::size_t l = 0; l < n2; ++l) {
                Scalar lhs = Scalar::zero(f);
                for (std::size_t k = 0; k < n1; ++k)
                    if (!a.c(i, j, k).is_zero()) lhs += r(l, k) * a.c(i, j, k);
                Scalar rhs = Scalar::zero(f);
                for (std::size_t p = 0; p < n2; ++p) {
                    if (r(p, i).is_zero()) continue;
                    for (std::size_t q = 0; q < n2; ++q)
                        if (!b.c(p, q, l).is_zero()) rhs += b.c(p, q, l) * r(p, i) * r(q, j);
                }
                Scalar residual = lhs - rhs;
                if (!residual.is_zero()) report.residuals.push_back({i, j, l, std::move(residual)});
            }
    report.holds = report.residuals.empty();
    return report;
}

bool is_linear_homomorphism(const HomCandidate& h) { return check_linear_homomorphism(h).holds; }

bool preserves_products(const HomCandidate& h) {
    const LinearMap r = h.as_map();
    for (std::size_t i = 0; i < h.source->dim(); ++i)
        for (std::size_t j = 0; j < h.source->dim(); ++j) {
            const Element ei = Element::basis(h.source, i);
            const Element ej = Element::basis(h.source, j);
            if (r(ei * ej) != r(ei) * r(ej)) return false;
        }
    return true;
}

namespace {

std::string entry_name(std::size_t row, std::size_t col) {
    return "r^" + std::to_string(row) + "_" + std::to_string(col);
}

} // namespace

QuatAutoReport quat_auto_check(const Matrix& r) {
    if (!r.field().is_rational()) throw PreconditionError("quaternion automorphism check is defined over Q only");
    if (r.rows() != 4 || r.cols() != 4) throw ShapeMismatch("quaternion automorphism check needs a 4x4 matrix");

    const Field& f = r.field();
    QuatAutoReport report;
    auto fail = [&](std::string text, const Scalar& lhs, const Scalar& rhs) {
        report.witness = std::move(text) + " (" + lhs.to_string() + " != " + rhs.to_string() + ")";
    };

    // Column i of the imaginary block is column k cross column j, (i, k, j) cyclic;
    // equation for row l uses the two other rows (a, b), (l, a, b) cyclic.
    static constexpr std::array<std::size_t, 5> cyc{1, 2, 3, 1, 2};
    for (std::size_t li = 0; li < 3 && report.witness.empty(); ++li)
        for (std::size_t ii = 0; ii < 3 && report.witness.empty(); ++ii) {
            const std::size_t l = cyc[li], a = cyc[li + 1], b = cyc[li + 2];
            const std::size_t i = cyc[ii], k = cyc[ii + 1], j = cyc[ii + 2];
            const Scalar rhs = r(a, k) * r(b, j) - r(a, j) * r(b, k);
            if (r(l, i) != rhs)
                fail(entry_name(l, i) + " = " + entry_name(a, k) + "*" + entry_name(b, j) + " - " + entry_name(a, j) +
                         "*" + entry_name(b, k),
                     r(l, i), rhs);
        }

    if (report.witness.empty() && !r(0, 0).is_one()) fail(entry_name(0, 0) + " = 1", r(0, 0), Scalar::one(f));
    for (std::size_t i = 1; i < 4 && report.witness.empty(); ++i) {
        if (!r(0, i).is_zero()) fail(entry_name(0, i) + " = 0", r(0, i), Scalar::zero(f));
        else if (!r(i, 0).is_zero()) fail(entry_name(i, 0) + " = 0", r(i, 0), Scalar::zero(f));
    }
    for (std::size_t i = 1; i < 4 && report.witness.empty(); ++i) {
        Scalar norm = Scalar::zero(f);
        for (std::size_t l = 1; l < 4; ++l) norm += r(l, i) * r(l, i);
        if (!norm.is_one())
            fail(entry_name(1, i) + "^2 + " + entry_name(2, i) + "^2 + " + entry_name(3, i) + "^2 = 1", norm,
                 Scalar::one(f));
    }
    report.pass = report.witness.empty();

    const AlgebraPtr q = fixtures::quaternions(f);
    report.homomorphism_and_invertible = is_linear_homomorphism(HomCandidate(q, q, r)) && rank(r) == 4;
    return report;
}

std::optional<Decomposition> hom_standard_components(const HomCandidate& h, const GeneratorSet& gens) {
    if (!is_associative(*h.target)) throw NotAssociative("standard components need an associative target");
    return components_from_coords(h.as_map(), gens);
}

} // namespace fdalg
