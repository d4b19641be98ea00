#include "fdalg/fixtures.hpp"

#include <tuple>

#include "fdalg/error.hpp"

namespace fdalg::fixtures {

namespace {

struct Entry {
    std::size_t i, j, k;
    long value;
};

AlgebraPtr build(std::string name, const Field& field, std::size_t n, std::initializer_list<Entry> entries,
                 std::optional<std::size_t> unit) {
    std::vector<Scalar> constants(n * n * n, Scalar::zero(field));
    for (const auto& e : entries) constants[(e.i * n + e.j) * n + e.k] = Scalar(field, e.value);
    return make_algebra(std::move(name), field, n, std::move(constants), unit);
}

} // namespace

AlgebraPtr quaternions(const Field& field) {
    // e1 e2 = e3, e2 e3 = e1, e3 e1 = e2, anticommuting imaginary units, e_a^2 = -e0.
    AlgebraPtr q = build("quaternion", field, 4,
                         {
                             {0, 0, 0, 1},  {0, 1, 1, 1},  {0, 2, 2, 1},  {0, 3, 3, 1},
                             {1, 0, 1, 1},  {2, 0, 2, 1},  {3, 0, 3, 1},
                             {1, 1, 0, -1}, {2, 2, 0, -1}, {3, 3, 0, -1},
                             {1, 2, 3, 1},  {2, 1, 3, -1},
                             {2, 3, 1, 1},  {3, 2, 1, -1},
                             {3, 1, 2, 1},  {1, 3, 2, -1},
                         },
                         0);
    if (!is_associative(*q)) throw ValidationError("associative", "quaternion table is not associative");
    return q;
}

AlgebraPtr complex_numbers(const Field& field) {
    return build("complex", field, 2, {{0, 0, 0, 1}, {0, 1, 1, 1}, {1, 0, 1, 1}, {1, 1, 0, -1}}, 0);
}

AlgebraPtr n2(const Field& field) { return build("n2", field, 2, {{0, 1, 0, 1}}, std::nullopt); }

AlgebraPtr n2_unital(const Field& field) {
    return build("n2-unital", field, 3,
                 {{0, 0, 0, 1}, {0, 1, 1, 1}, {0, 2, 2, 1}, {1, 0, 1, 1}, {2, 0, 2, 1}, {1, 2, 1, 1}}, 0);
}

AlgebraPtr scalar_algebra(const Field& field) { return build("scalar", field, 1, {{0, 0, 0, 1}}, 0); }

} // namespace fdalg::fixtures
