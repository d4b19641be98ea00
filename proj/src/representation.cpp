#include "fdalg/representation.hpp"

#include "fdalg/error.hpp"

namespace fdalg {

namespace {

void require_tensor_over(const Tensor& t, const AlgebraPtr& alg, const char* context) {
    if (t.order() != 2)
        throw OrderMismatch(std::string(context) + ": expected an order-2 tensor, got order " +
                            std::to_string(t.order()));
    require_same_algebra(t.factors()[0], alg, context);
    require_same_algebra(t.factors()[1], alg, context);
}

bool is_identity_map(const LinearMap& f) {
    return same_algebra(f.source(), f.target()) &&
           f.coords() == Matrix::identity(f.source()->dim(), f.field());
}

} // namespace

std::string_view to_string(AssociationOrder order) {
    return order == AssociationOrder::associative ? "associative" : "left-nested";
}

AssociationOrder parse_association_order(std::string_view text) {
    if (text == "associative") return AssociationOrder::associative;
    if (text == "left-nested") return AssociationOrder::left_nested;
    throw std::invalid_argument("unknown association order '" + std::string(text) + "'");
}

LinearMap sandwich_apply(const Tensor& t, const LinearMap& f) {
    const AlgebraPtr& alg = f.target();
    require_tensor_over(t, alg, "sandwich_apply");
    const std::size_t n = alg->dim();
    const std::size_t cols = f.source()->dim();

    Matrix out(n, cols, alg->field());
    for (std::size_t l = 0; l < cols; ++l) {
        const Element image = f.eval(Element::basis(f.source(), l));
        Element acc = Element::zero(alg);
        for (std::size_t i = 0; i < n; ++i) {
            Element left = Element::zero(alg);
            bool used = false;
            for (std::size_t j = 0; j < n; ++j) {
                const Scalar& tij = t[i * n + j];
                if (tij.is_zero()) continue;
                if (!used) {
                    left = Element::basis(alg, i) * image;
                    used = true;
                }
                acc = acc + tij * (left * Element::basis(alg, j));
            }
        }
        for (std::size_t k = 0; k < n; ++k) out(k, l) = acc[k];
    }
    return LinearMap(f.source(), alg, std::move(out));
}

Matrix b_matrix(const AlgebraPtr& target, const LinearMap& generator) {
    require_same_algebra(generator.target(), target, "b_matrix");
    const std::size_t n = target->dim();
    const std::size_t s = generator.source()->dim();
    Matrix b(n * s, n * n, target->field());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t m = 0; m < n; ++m)
                for (std::size_t p = 0; p < n; ++p) {
                    const Scalar& cim = target->c(i, m, p);
                    if (cim.is_zero()) continue;
                    for (std::size_t k = 0; k < n; ++k) {
                        const Scalar& cpj = target->c(p, j, k);
                        if (cpj.is_zero()) continue;
                        const Scalar w = cim * cpj;
                        for (std::size_t l = 0; l < s; ++l) {
                            const Scalar& iml = generator(m, l);
                            if (!iml.is_zero()) b(k * s + l, i * n + j) += iml * w;
                        }
                    }
                }
    return b;
}

GeneratorSet::GeneratorSet(std::vector<LinearMap> maps, AssociationOrder order)
    : maps_(std::move(maps)), order_(order) {
    if (maps_.empty()) throw ShapeMismatch("generator set is empty");
    for (const auto& m : maps_) require_same_shape(m, maps_.front(), "generator set");
}

bool GeneratorSet::is_independent() const {
    std::vector<Vec> rows;
    for (const auto& m : maps_) rows.push_back(m.vec());
    return rank(Matrix::from_rows(rows, maps_.front().field())) == maps_.size();
}

MapExpansion::MapExpansion(GeneratorSet gens, std::vector<Tensor> comps)
    : generators(std::move(gens)), components(std::move(comps)) {
    if (components.size() != generators.size())
        throw ShapeMismatch("expansion has " + std::to_string(components.size()) + " tensors for " +
                            std::to_string(generators.size()) + " generators");
    for (const auto& t : components) require_tensor_over(t, generators.target(), "map expansion");
}

LinearMap coords_from_components(const MapExpansion& exp) {
    const auto& gens = exp.generators;
    LinearMap out = LinearMap::zero(gens.source(), gens.target());
    for (std::size_t k = 0; k < gens.size(); ++k) {
        const Vec coords = b_matrix(gens.target(), gens[k]).apply(exp.components[k].components());
        out = out + LinearMap::from_vec(gens.source(), gens.target(), coords);
    }
    return out;
}

std::optional<Decomposition> components_from_coords(const LinearMap& f, const GeneratorSet& gens) {
    require_same_shape(f, gens[0], "components_from_coords");
    const AlgebraPtr& target = gens.target();
    const std::size_t block = target->dim() * target->dim();

    Matrix stacked = b_matrix(target, gens[0]);
    for (std::size_t k = 1; k < gens.size(); ++k) stacked = Matrix::hstack(stacked, b_matrix(target, gens[k]));

    const Vec rhs = f.vec();
    auto sol = solve(stacked, Matrix::column(rhs, f.field()));
    if (!sol) return std::nullopt;

    const Vec x = sol->particular.col(0);
    std::vector<Tensor> comps;
    for (std::size_t k = 0; k < gens.size(); ++k)
        comps.emplace_back(std::vector<AlgebraPtr>{target, target},
                           Vec(x.begin() + static_cast<std::ptrdiff_t>(k * block),
                               x.begin() + static_cast<std::ptrdiff_t>((k + 1) * block)));
    return Decomposition{MapExpansion(gens, std::move(comps)), sol->nullspace.size()};
}

Subspace orbit_span(const LinearMap& f) {
    const AlgebraPtr& alg = f.target();
    const std::size_t n = alg->dim();
    std::vector<Vec> images;
    images.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) images.push_back(sandwich_apply(Tensor::basis({alg, alg}, {i, j}), f).vec());
    return Subspace::span(n * f.source()->dim(), f.field(), images);
}

std::vector<LinearMap> orbit_basis(const LinearMap& f) {
    std::vector<LinearMap> out;
    const Subspace span = orbit_span(f);
    for (const auto& v : span.basis()) out.push_back(LinearMap::from_vec(f.source(), f.target(), v));
    return out;
}

bool orbit_equal(const LinearMap& f, const LinearMap& g) {
    require_same_shape(f, g, "orbit_equal");
    return orbit_span(f) == orbit_span(g);
}

Subspace orbit_union(const GeneratorSet& gens) {
    Subspace acc = orbit_span(gens[0]);
    for (std::size_t k = 1; k < gens.size(); ++k) acc = acc + orbit_span(gens[k]);
    return acc;
}

bool orbits_direct_sum(const GeneratorSet& gens) {
    std::size_t total = 0;
    for (const auto& m : gens.maps()) total += orbit_span(m).dim();
    return total == orbit_union(gens).dim();
}

GeneratorSet generator_basis(const AlgebraPtr& alg) {
    if (!alg->unit()) throw PreconditionError("generator_basis needs a unital algebra");
    const std::size_t n = alg->dim();
    std::vector<LinearMap> maps{LinearMap::identity(alg)};
    Subspace span = orbit_span(maps.front());
    while (!span.is_full()) {
        bool extended = false;
        for (std::size_t k = 0; k < n && !extended; ++k)
            for (std::size_t l = 0; l < n && !extended; ++l) {
                LinearMap e = LinearMap::elementary(alg, alg, k, l);
                if (span.contains(e.vec())) continue;
                span = span + orbit_span(e);
                maps.push_back(std::move(e));
                extended = true;
            }
    }
    return GeneratorSet(std::move(maps), is_associative(*alg) ? AssociationOrder::associative
                                                               : AssociationOrder::left_nested);
}

std::optional<std::vector<Tensor>> conjugation_transform(const GeneratorSet& gens, std::size_t k, const Tensor& a) {
    const AlgebraPtr& source = gens.source();
    const AlgebraPtr& target = gens.target();
    if (k >= gens.size()) throw ShapeMismatch("generator index out of range");
    require_tensor_over(a, source, "conjugation_transform");
    if (!source->unit() || !is_associative(*source))
        throw PreconditionError("conjugation_transform needs an associative unital source algebra");

    const std::vector<AlgebraPtr> pair{target, target};
    std::vector<Tensor> out(gens.size(), Tensor::zero(pair));
    const bool identity = is_identity_map(gens[k]);
    const std::size_t unit = *source->unit();
    const LinearMap delta = LinearMap::identity(source);

    for (std::size_t flat = 0; flat < a.size(); ++flat) {
        if (a[flat].is_zero()) continue;
        const auto pq = a.multi_index(flat);
        if (identity) {
            out[k] = out[k] + a[flat] * Tensor::basis(pair, pq);
        } else if (pq[0] == unit && pq[1] == unit && target->unit()) {
            out[k] = out[k] + a[flat] * Tensor::unit(pair);
        } else {
            const LinearMap composite = compose(gens[k], sandwich_apply(Tensor::basis({source, source}, pq), delta));
            auto dec = components_from_coords(composite, gens);
            if (!dec) return std::nullopt;
            for (std::size_t l = 0; l < gens.size(); ++l)
                out[l] = out[l] + a[flat] * dec->expansion.components[l];
        }
    }
    return out;
}

std::optional<MapExpansion> compose_expansions(const MapExpansion& g, const MapExpansion& f) {
    const GeneratorSet& outer = g.generators;
    const GeneratorSet& inner = f.generators;
    require_same_algebra(outer.source(), inner.target(), "compose_expansions");

    const std::vector<AlgebraPtr> pair{outer.target(), outer.target()};
    const std::size_t nm = outer.size();
    const std::size_t nk = inner.size();
    std::vector<Tensor> h(nm * nk, Tensor::zero(pair));

    for (std::size_t k = 0; k < nk; ++k)
        for (std::size_t l = 0; l < nm; ++l) {
            if (g.components[l].is_zero()) continue;
            auto b = conjugation_transform(outer, l, f.components[k]);
            if (!b) return std::nullopt;
            for (std::size_t m = 0; m < nm; ++m)
                if (!(*b)[m].is_zero()) h[m * nk + k] = h[m * nk + k] + twisted_multiply(g.components[l], (*b)[m]);
        }

    std::vector<LinearMap> maps;
    for (std::size_t m = 0; m < nm; ++m)
        for (std::size_t k = 0; k < nk; ++k) maps.push_back(compose(outer[m], inner[k]));
    const AssociationOrder order = outer.order() == AssociationOrder::associative &&
                                           inner.order() == AssociationOrder::associative
                                       ? AssociationOrder::associative
                                       : AssociationOrder::left_nested;
    return MapExpansion(GeneratorSet(std::move(maps), order), std::move(h));
}

bool nonassoc_std_relation_check(const AlgebraPtr& alg, const LinearMap& g, const Tensor& t, const LinearMap& f) {
    require_tensor_over(t, alg, "nonassoc_std_relation_check");
    require_same_algebra(f.target(), alg, "nonassoc_std_relation_check");
    require_same_shape(f, g, "nonassoc_std_relation_check");
    const std::size_t n = alg->dim();
    const std::size_t s = f.source()->dim();
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < s; ++l) {
            Scalar sum = Scalar::zero(alg->field());
            for (std::size_t m = 0; m < n; ++m) {
                if (f(m, l).is_zero()) continue;
                for (std::size_t i = 0; i < n; ++i)
                    for (std::size_t j = 0; j < n; ++j) {
                        const Scalar& tij = t[i * n + j];
                        if (tij.is_zero()) continue;
                        for (std::size_t p = 0; p < n; ++p) sum += f(m, l) * tij * alg->c(i, m, p) * alg->c(p, j, k);
                    }
            }
            if (sum != g(k, l)) return false;
        }
    return true;
}

} // namespace fdalg
