#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "fdalg/linalg.hpp"
#include "fdalg/linear_map.hpp"
#include "fdalg/tensor.hpp"

namespace fdalg {

/// How a sandwich a f(x) b is bracketed. The implementation always evaluates
/// (a f(x)) b, which is the only choice that matters for nonassociative
/// targets; the flag records what the caller asked for.
enum class AssociationOrder { associative, left_nested };

std::string_view to_string(AssociationOrder order);
AssociationOrder parse_association_order(std::string_view text);

/// (sum t^{ij} e_i (x) e_j) o f : x -> sum t^{ij} (e_i f(x)) e_j.
/// t must be an order-2 tensor over f's target.
LinearMap sandwich_apply(const Tensor& t, const LinearMap& f);

/// Matrix from standard components f^{ij} (column (i, j), row-major) to
/// coordinates f^k_l (row (k, l), row-major) of the map x -> f^{ij} e_i I(x) e_j.
Matrix b_matrix(const AlgebraPtr& target, const LinearMap& generator);

/// Ordered list of linear maps I_0, I_1, ... sharing source and target.
class GeneratorSet {
public:
    GeneratorSet(std::vector<LinearMap> maps, AssociationOrder order = AssociationOrder::left_nested);

    const std::vector<LinearMap>& maps() const noexcept { return maps_; }
    const LinearMap& operator[](std::size_t k) const { return maps_.at(k); }
    std::size_t size() const noexcept { return maps_.size(); }
    AssociationOrder order() const noexcept { return order_; }
    const AlgebraPtr& source() const { return maps_.front().source(); }
    const AlgebraPtr& target() const { return maps_.front().target(); }

    /// Linear independence of the maps as coordinate vectors.
    bool is_independent() const;

private:
    std::vector<LinearMap> maps_;
    AssociationOrder order_;
};

/// f = sum_k f^{k.ij} e_i I_k e_j: one order-2 tensor over the target per generator.
struct MapExpansion {
    GeneratorSet generators;
    std::vector<Tensor> components;

    MapExpansion(GeneratorSet gens, std::vector<Tensor> components);
};

struct Decomposition {
    MapExpansion expansion;
    /// Dimension of the solution space's homogeneous part; 0 means unique.
    std::size_t nullspace_dim = 0;
};

/// sum over generators of the B-matrix action on each component block.
LinearMap coords_from_components(const MapExpansion& exp);

/// Solves for standard components over `gens`; std::nullopt when f is not
/// reachable. The particular solution sets every free component to zero.
std::optional<Decomposition> components_from_coords(const LinearMap& f, const GeneratorSet& gens);

/// Span of {(e_i (x) e_j) o f} as a subspace of row-major coordinate vectors.
Subspace orbit_span(const LinearMap& f);
/// The same span as a list of maps (reduced basis order).
std::vector<LinearMap> orbit_basis(const LinearMap& f);
bool orbit_equal(const LinearMap& f, const LinearMap& g);
/// Sum of the orbit spans of all generators.
Subspace orbit_union(const GeneratorSet& gens);
/// Whether the orbit spans form a direct sum (dimensions add up).
bool orbits_direct_sum(const GeneratorSet& gens);

/// Starts with the identity and appends the first elementary map (row-major
/// (k, l)) outside the union of current orbit spans until the union is full.
/// Throws PreconditionError for algebras without a unit.
GeneratorSet generator_basis(const AlgebraPtr& alg);

/// Tensors b^l over the target with I_k(a o x) = sum_l (b^l o I_l)(x).
/// Built linearly from the images of basis tensors; std::nullopt when `gens`
/// cannot express one of them.
std::optional<std::vector<Tensor>> conjugation_transform(const GeneratorSet& gens, std::size_t k, const Tensor& a);

/// Expansion of g after f over the generators K_{mk} = J_m after I_k, ordered
/// (m, k) row-major: h^{mk} = sum_l g^l o b^{l,m}(f^k).
std::optional<MapExpansion> compose_expansions(const MapExpansion& g, const MapExpansion& f);

/// Evaluates g^k_l == f^m_l t^{ij} C_im^p C_pj^k directly from the constants.
bool nonassoc_std_relation_check(const AlgebraPtr& alg, const LinearMap& g, const Tensor& t, const LinearMap& f);

} // namespace fdalg
