#include <doctest.h>

#include "fdalg/error.hpp"
#include "fdalg/fixtures.hpp"
#include "fdalg/linalg.hpp"
#include "build.hpp"
#include "oracles.hpp"
#include "random.hpp"

using namespace fdalg;
using namespace fdalg::testing;

namespace {

const Field F5 = Field::prime(5);

std::vector<AlgebraPtr> all_fixtures(const Field& f) {
    return {fixtures::quaternions(f), fixtures::complex_numbers(f), fixtures::n2(f), fixtures::n2_unital(f),
            fixtures::scalar_algebra(f)};
}

Matrix matrix_of_associator_left(const Element& a, const Element& b) {
    return matrix_of(a.algebra(), [&](const Element& x) { return associator(a, b, x); });
}

Matrix matrix_of_associator_right(const Element& b, const Element& a) {
    return matrix_of(a.algebra(), [&](const Element& x) { return associator(x, b, a); });
}

} // namespace

TEST_CASE("quaternion products match the Hamilton formula") {
    const auto h = fixtures::quaternions();
    CHECK(elem(h, {0, 1, 0, 0}) * elem(h, {0, 0, 1, 0}) == elem(h, {0, 0, 0, 1}));
    Rng rng(10);
    for (const Field& f : {Field::rational(), F5}) {
        const auto hf = fixtures::quaternions(f);
        for (int t = 0; t < 100; ++t) {
            const Element a = rng.element(hf), b = rng.element(hf);
            CHECK(a * b == element_of(hf, hamilton(quat(a), quat(b))));
        }
    }
}

TEST_CASE("complex products match the written-out formula") {
    const auto c = fixtures::complex_numbers();
    Rng rng(11);
    for (int t = 0; t < 100; ++t) {
        const Element a = rng.element(c), b = rng.element(c);
        const auto p = complex_product<Scalar>({a[0], a[1]}, {b[0], b[1]});
        CHECK(a * b == Element(c, {p[0], p[1]}));
    }
}

TEST_CASE("unit and n2 fixture products") {
    Rng rng(12);
    for (const auto& alg : all_fixtures(Field::rational())) {
        if (!alg->unit()) continue;
        const Element a = rng.element(alg);
        CHECK(Element::unit(alg) * a == a);
        CHECK(a * Element::unit(alg) == a);
    }
    const auto n2 = fixtures::n2();
    const Element x = elem(n2, {1, 0}), y = elem(n2, {0, 1});
    CHECK(x * y == x);
    CHECK((y * x).is_zero());
    CHECK_THROWS_AS(Element::unit(n2), PreconditionError);
    CHECK_THROWS_AS(x * elem(fixtures::complex_numbers(), {1, 0}), AlgebraMismatch);
}

TEST_CASE("commutator") {
    const auto h = fixtures::quaternions();
    const Element i = elem(h, {0, 1, 0, 0}), j = elem(h, {0, 0, 1, 0});
    CHECK(commutator(i, j) == elem(h, {0, 0, 0, 2}));
    Rng rng(13);
    const auto c = fixtures::complex_numbers();
    for (int t = 0; t < 100; ++t) {
        const Element a = rng.element(h);
        CHECK(commutator(a, a).is_zero());
        CHECK(commutator(rng.element(c), rng.element(c)).is_zero());
    }
}

TEST_CASE("associator") {
    const auto n2 = fixtures::n2();
    const Element x = elem(n2, {1, 0}), y = elem(n2, {0, 1});
    CHECK(associator(x, y, y) == x);
    CHECK(associator(x, y, Element::zero(n2)).is_zero());
    Rng rng(14);
    const auto h = fixtures::quaternions();
    for (int t = 0; t < 100; ++t) CHECK(associator(rng.element(h), rng.element(h), rng.element(h)).is_zero());
}

TEST_CASE("Teichmuller residual vanishes") {
    Rng rng(15);
    for (const Field& f : {Field::rational(), F5}) {
        for (const auto& alg : all_fixtures(f)) {
            const std::size_t n = alg->dim();
            for (std::size_t a = 0; a < n; ++a)
                for (std::size_t b = 0; b < n; ++b)
                    for (std::size_t c = 0; c < n; ++c)
                        for (std::size_t d = 0; d < n; ++d)
                            CHECK(teichmuller_residual(Element::basis(alg, a), Element::basis(alg, b),
                                                       Element::basis(alg, c), Element::basis(alg, d))
                                      .is_zero());
            for (int t = 0; t < 100; ++t)
                CHECK(teichmuller_residual(rng.element(alg), rng.element(alg), rng.element(alg), rng.element(alg))
                          .is_zero());
        }
    }
}

TEST_CASE("commutativity and associativity flags") {
    CHECK(is_commutative(*fixtures::complex_numbers()));
    CHECK_FALSE(is_commutative(*fixtures::quaternions()));
    CHECK_FALSE(is_commutative(*fixtures::n2()));
    CHECK(is_associative(*fixtures::quaternions()));
    CHECK(is_associative(*fixtures::complex_numbers()));
    CHECK_FALSE(is_associative(*fixtures::n2()));
    for (const Field& f : {Field::rational(), F5})
        for (const auto& alg : all_fixtures(f)) CHECK(is_associative(*alg) == basis_associators_vanish(alg));
}

TEST_CASE("bilinearity of the product") {
    Rng rng(16);
    for (const Field& f : {Field::rational(), F5})
        for (const auto& alg : all_fixtures(f))
            for (int t = 0; t < 100; ++t) {
                const Scalar s = rng.scalar(f);
                const Element a = rng.element(alg), b = rng.element(alg), c = rng.element(alg);
                CHECK((s * a + b) * c == s * (a * c) + b * c);
                CHECK(c * (s * a + b) == s * (c * a) + c * b);
            }
}

TEST_CASE("nucleus and center") {
    const auto h = fixtures::quaternions();
    CHECK(nucleus_basis(h).size() == 4);
    const auto zh = center_basis(h);
    REQUIRE(zh.size() == 1);
    CHECK(zh[0] == Element::unit(h));
    CHECK(center_basis(fixtures::complex_numbers()).size() == 2);
    const auto line = fixtures::scalar_algebra();
    REQUIRE(nucleus_basis(line).size() == 1);
    CHECK(nucleus_basis(line)[0] == Element::basis(line, 0));

    for (const auto& alg : {fixtures::n2(), fixtures::n2_unital()}) {
        // Nullity of the constraint system, assembled here from associators directly.
        const std::size_t n = alg->dim();
        std::vector<std::vector<mpq_class>> rows;
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                for (int slot = 0; slot < 3; ++slot)
                    for (std::size_t c = 0; c < n; ++c) {
                        std::vector<mpq_class> row;
                        for (std::size_t i = 0; i < n; ++i) {
                            const Element a = Element::basis(alg, i), x = Element::basis(alg, j), y = Element::basis(alg, k);
                            const Element v = slot == 0 ? associator(a, x, y) : slot == 1 ? associator(x, a, y)
                                                                                           : associator(x, y, a);
                            row.push_back(v[c].as_rational());
                        }
                        rows.push_back(row);
                    }
        const auto nucleus = nucleus_basis(alg);
        CHECK(nucleus.size() == n - bareiss_rank(rows));
        std::vector<Vec> coords;
        for (const auto& e : nucleus) coords.push_back(e.coords());
        const Subspace ns = Subspace::span(n, alg->field(), coords);
        for (const auto& z : center_basis(alg)) {
            CHECK(ns.contains(z.coords()));
            for (std::size_t j = 0; j < n; ++j) CHECK(commutator(z, Element::basis(alg, j)).is_zero());
        }
    }
    // In n2 the nucleus is trivial: x fails (x, y, y) = x and y fails (x, y, y) in the middle slot.
    CHECK(nucleus_basis(fixtures::n2()).empty());
}

TEST_CASE("find_unit") {
    const auto h = fixtures::quaternions();
    REQUIRE(find_unit(h));
    CHECK(*find_unit(h) == Element::unit(h));
    CHECK_FALSE(find_unit(fixtures::n2()));
    REQUIRE(find_unit(fixtures::n2_unital()));
}

TEST_CASE("shift matrices") {
    const auto h = fixtures::quaternions();
    CHECK(left_shift_matrix(Element::unit(h)) == Matrix::identity(4, Field::rational()));
    const Matrix li = left_shift_matrix(elem(h, {0, 1, 0, 0}));
    CHECK(li.col(0) == ints({0, 1, 0, 0}));
    CHECK(li.col(1) == ints({-1, 0, 0, 0}));
    CHECK(li.col(2) == ints({0, 0, 0, 1}));
    CHECK(li.col(3) == ints({0, 0, -1, 0}));

    Rng rng(17);
    for (const Field& f : {Field::rational(), F5})
        for (const auto& alg : all_fixtures(f))
            for (int t = 0; t < 100; ++t) {
                const Element a = rng.element(alg), b = rng.element(alg), x = rng.element(alg);
                CHECK(left_shift_matrix(a + b) == left_shift_matrix(a) + left_shift_matrix(b));
                CHECK(Element(alg, left_shift_matrix(a).apply(x.coords())) == a * x);
                CHECK(Element(alg, right_shift_matrix(a).apply(x.coords())) == x * a);
                CHECK(left_shift_matrix(a) * left_shift_matrix(b) ==
                      left_shift_matrix(a * b) - matrix_of_associator_left(a, b));
                CHECK(right_shift_matrix(a) * right_shift_matrix(b) ==
                      right_shift_matrix(b * a) + matrix_of_associator_right(b, a));
            }
}

TEST_CASE("algebra validation") {
    const Field q = Field::rational();
    std::vector<Scalar> c(8, Scalar::zero(q));
    c[0] = Scalar::one(q);
    c[(0 * 2 + 1) * 2 + 1] = Scalar(q, 2);
    c[(1 * 2 + 0) * 2 + 1] = Scalar::one(q);
    try {
        make_algebra("bad", q, 2, c, 0);
        FAIL("expected a unit violation");
    } catch (const ValidationError& e) {
        CHECK(e.invariant() == "unit");
    }
    CHECK_THROWS_AS(make_algebra("short", q, 2, std::vector<Scalar>(7, Scalar::zero(q))), ValidationError);
    CHECK_THROWS_AS(make_algebra("empty", q, 0, {}), ValidationError);
    CHECK_THROWS_AS(make_algebra("mixed", q, 1, {Scalar(F5, 1)}), FieldMismatch);
}
