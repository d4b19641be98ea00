#include <doctest.h>

#include "fdalg/error.hpp"
#include "fdalg/fixtures.hpp"
#include "fdalg/homomorphism.hpp"
#include "build.hpp"
#include "oracles.hpp"
#include "random.hpp"

using namespace fdalg;
using namespace fdalg::testing;

namespace {

const Field F5 = Field::prime(5);

/// x -> u x u^{-1}, assembled from the written-out Hamilton product.
Matrix rotation_of(const std::array<Scalar, 4>& u) {
    Scalar norm = u[0] * u[0] + u[1] * u[1] + u[2] * u[2] + u[3] * u[3];
    const std::array<Scalar, 4> inv{u[0] / norm, -u[1] / norm, -u[2] / norm, -u[3] / norm};
    Matrix m(4, 4, Field::rational());
    for (std::size_t j = 0; j < 4; ++j) {
        std::array<Scalar, 4> e{q(0), q(0), q(0), q(0)};
        e[j] = q(1);
        const auto img = hamilton(hamilton(u, e), inv);
        for (std::size_t i = 0; i < 4; ++i) m(i, j) = img[i];
    }
    return m;
}

/// r(ab) == r(a) r(b) on random elements, computed through Element products only.
bool sampled_homomorphism(Rng& rng, const HomCandidate& h) {
    const LinearMap r = h.as_map();
    for (int t = 0; t < 20; ++t) {
        const Element a = rng.element(h.source), b = rng.element(h.source);
        if (!(r(a * b) == r(a) * r(b))) return false;
    }
    return true;
}

} // namespace

TEST_CASE("homomorphism residuals") {
    const auto h = fixtures::quaternions();
    const auto c = fixtures::complex_numbers();
    CHECK(is_linear_homomorphism(HomCandidate(h, h, Matrix::identity(4, Field::rational()))));
    CHECK(is_linear_homomorphism(HomCandidate(h, h, cyclic_quaternion_matrix())));
    CHECK(is_linear_homomorphism(HomCandidate(c, c, int_matrix({{1, 0}, {0, -1}}))));
    CHECK(is_linear_homomorphism(HomCandidate(c, h, int_matrix({{1, 0}, {0, 0}, {0, 1}, {0, 0}}))));
    CHECK(is_linear_homomorphism(HomCandidate(h, c, Matrix(2, 4, Field::rational()))));

    const auto report = check_linear_homomorphism(HomCandidate(c, c, int_matrix({{1, 0}, {0, 2}})));
    CHECK_FALSE(report.holds);
    REQUIRE(report.residuals.size() == 1);
    const auto& last = report.residuals.back();
    CHECK(last.i == 1);
    CHECK(last.j == 1);
    CHECK(last.l == 0);
    CHECK(last.value == q(3));

    const auto twice = check_linear_homomorphism(HomCandidate(h, h, int_matrix({{2, 0, 0, 0}, {0, 2, 0, 0}, {0, 0, 2, 0}, {0, 0, 0, 2}})));
    CHECK_FALSE(twice.holds);
    CHECK(twice.residuals.size() == 16);
    CHECK_THROWS_AS(HomCandidate(h, c, Matrix::identity(4, Field::rational())), ShapeMismatch);
}

TEST_CASE("two homomorphism paths agree") {
    Rng rng(50);
    for (const Field& f : {Field::rational(), F5}) {
        const auto h = fixtures::quaternions(f);
        const auto c = fixtures::complex_numbers(f);
        for (const auto& [src, dst] : {std::pair{h, h}, std::pair{c, c}, std::pair{c, h}}) {
            for (int t = 0; t < 100; ++t) {
                Matrix m = rng.matrix(dst->dim(), src->dim(), f);
                // Every fourth sample is forced to a known homomorphism.
                if (t % 4 == 0) m = src == dst ? Matrix::identity(src->dim(), f) : Matrix(dst->dim(), src->dim(), f);
                const HomCandidate cand(src, dst, m);
                const bool holds = is_linear_homomorphism(cand);
                CHECK(holds == preserves_products(cand));
                if (holds) CHECK(sampled_homomorphism(rng, cand));
            }
        }
    }
}

TEST_CASE("quaternion automorphism check") {
    const Matrix r = cyclic_quaternion_matrix();
    const auto pass = quat_auto_check(r);
    CHECK(pass.pass);
    CHECK(pass.witness.empty());
    CHECK(pass.consistent());

    const Matrix twice = q(2) * Matrix::identity(4, Field::rational());
    const auto fail = quat_auto_check(twice);
    CHECK_FALSE(fail.pass);
    CHECK(fail.witness == "r^1_1 = r^2_2*r^3_3 - r^2_3*r^3_2 (2 != 4)");
    CHECK(fail.consistent());

    // Satisfies the border but not the unit length equations.
    const auto flat = quat_auto_check(int_matrix({{1, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}}));
    CHECK_FALSE(flat.pass);
    CHECK(flat.consistent());

    const auto reflection = quat_auto_check(int_matrix({{1, 0, 0, 0}, {0, -1, 0, 0}, {0, 0, -1, 0}, {0, 0, 0, -1}}));
    CHECK_FALSE(reflection.pass);
    CHECK(reflection.consistent());
    CHECK(quat_auto_check(int_matrix({{1, 0, 0, 0}, {0, -1, 0, 0}, {0, 0, -1, 0}, {0, 0, 0, 1}})).pass);

    Rng rng(51);
    for (int t = 0; t < 100; ++t) {
        std::array<Scalar, 4> u;
        do {
            for (auto& s : u) s = q(rng.integer(-3, 3));
        } while (u[0].is_zero() && u[1].is_zero() && u[2].is_zero() && u[3].is_zero());
        const auto rot = quat_auto_check(rotation_of(u));
        CHECK(rot.pass);
        CHECK(rot.consistent());

        Matrix noisy = rotation_of(u);
        noisy(static_cast<std::size_t>(rng.integer(0, 3)), static_cast<std::size_t>(rng.integer(0, 3))) =
            noisy(0, 0) + q(rng.integer(1, 3), 7);
        const auto bad = quat_auto_check(noisy);
        CHECK(bad.consistent());

        const auto random = quat_auto_check(rng.matrix(4, 4, Field::rational()));
        CHECK(random.consistent());
    }
    CHECK_THROWS_AS(quat_auto_check(Matrix::identity(4, F5)), PreconditionError);
    CHECK_THROWS_AS(quat_auto_check(Matrix::identity(3, Field::rational())), ShapeMismatch);
}

TEST_CASE("standard components of homomorphisms") {
    const auto h = fixtures::quaternions();
    const auto dec = hom_standard_components(HomCandidate(h, h, cyclic_quaternion_matrix()),
                                             GeneratorSet({LinearMap::identity(h)}));
    REQUIRE(dec);
    CHECK(dec->nullspace_dim == 0);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j)
            CHECK(dec->expansion.components[0].at({i, j}) == (i == 0 ? q(1, 4) : q(-1, 4)));

    const auto c = fixtures::complex_numbers();
    const HomCandidate conj(c, c, int_matrix({{1, 0}, {0, -1}}));
    CHECK_FALSE(hom_standard_components(conj, GeneratorSet({LinearMap::identity(c)})));
    const auto full = hom_standard_components(conj, generator_basis(c));
    REQUIRE(full);
    CHECK(coords_from_components(full->expansion) == conj.as_map());

    const auto n = fixtures::n2_unital();
    CHECK_THROWS_AS(hom_standard_components(HomCandidate(n, n, Matrix::identity(3, Field::rational())),
                                            GeneratorSet({LinearMap::identity(n)})),
                    NotAssociative);
}
