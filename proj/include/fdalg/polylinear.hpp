#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "fdalg/representation.hpp"

namespace fdalg {

/// Polylinear map A_1 x ... x A_n -> B held by components f^p_{i1...in}.
/// Flattened row-major over (i1, ..., in, p): the target index is last.
class PolyForm {
public:
    PolyForm(std::vector<AlgebraPtr> sources, AlgebraPtr target, Vec components);
    static PolyForm zero(std::vector<AlgebraPtr> sources, AlgebraPtr target);

    std::size_t degree() const noexcept { return sources_.size(); }
    const std::vector<AlgebraPtr>& sources() const noexcept { return sources_; }
    const AlgebraPtr& target() const noexcept { return target_; }
    const Field& field() const noexcept { return target_->field(); }
    const Vec& components() const noexcept { return components_; }

    /// `index` lists i1..in followed by p.
    std::size_t flat_index(std::span<const std::size_t> index) const;
    std::vector<std::size_t> multi_index(std::size_t flat) const;
    const Scalar& at(std::span<const std::size_t> index) const { return components_[flat_index(index)]; }
    const Scalar& at(std::initializer_list<std::size_t> index) const {
        return at(std::span<const std::size_t>(index.begin(), index.size()));
    }

    bool is_zero() const;

    friend PolyForm operator+(const PolyForm& f, const PolyForm& g);
    friend PolyForm operator*(const Scalar& d, const PolyForm& f);
    friend bool operator==(const PolyForm& f, const PolyForm& g);

private:
    std::vector<AlgebraPtr> sources_;
    AlgebraPtr target_;
    Vec components_;
};

using Evaluator = std::function<Element(std::span<const Element>)>;

/// f(a_1, ..., a_n) = a_1^{i1} ... a_n^{in} f_{i1...in}.
Element poly_eval(const PolyForm& form, std::span<const Element> args);
Element poly_eval(const PolyForm& form, std::initializer_list<Element> args);

/// Components f_{i1...in} = evaluator(e_{i1}, ..., e_{in}).
PolyForm poly_from_evaluator(std::vector<AlgebraPtr> sources, AlgebraPtr target, const Evaluator& evaluator);

PolyForm poly_add(const PolyForm& f, const PolyForm& g);
PolyForm poly_scale(const Scalar& d, const PolyForm& f);

/// Components relative to new source bases e'_i = h^j_i e_j, one matrix per
/// slot (column i holds e'_i). Throws SingularBasisChange on a singular h.
PolyForm basis_change(const PolyForm& form, const std::vector<Matrix>& h);

/// Invariance under every adjacent transposition of arguments. Both throw
/// SourceMismatch unless all sources coincide.
bool is_symmetric(const PolyForm& form);
bool is_skew(const PolyForm& form);

/// (a, b) -> ab; components are the structural constants.
PolyForm multiplication_form(const AlgebraPtr& alg);
/// (a, b) -> ab - ba.
PolyForm commutator_form(const AlgebraPtr& alg);

/// Degree-1 form and linear map are the same data.
PolyForm form_of_map(const LinearMap& f);
LinearMap map_of_form(const PolyForm& form);

/// Weighted permutation tensor on an associative carrier. Slot s (0-based)
/// receives argument sigma[s]; the weights have order degree + 1.
struct PermTensor {
    Tensor weights;
    std::vector<std::size_t> sigma;

    PermTensor(Tensor weights, std::vector<std::size_t> sigma);
    std::size_t degree() const noexcept { return sigma.size(); }
    const AlgebraPtr& carrier() const { return weights.factors().front(); }
};

/// Sum over weight components w^{i0...in} of e_{i0} m_1 e_{i1} ... m_n e_{in}
/// with m_s = maps[sigma[s]](args[sigma[s]]), multiplied left to right.
Element perm_tensor_eval(const PermTensor& pt, std::span<const LinearMap> maps, std::span<const Element> args);

/// One summand of a standard representation: a permutation tensor whose
/// argument j passes through generator `generators[j]`.
struct PolyTerm {
    PermTensor tensor;
    std::vector<std::size_t> generators;
};

Element poly_standard_eval(std::span<const PolyTerm> terms, const GeneratorSet& gens, std::span<const Element> args);

/// Components of the map represented by `terms`, contracted directly from
/// the weights, generator coordinates and structural constants.
PolyForm standard_form(std::span<const PolyTerm> terms, const GeneratorSet& gens, std::size_t degree);

/// Form of degree n viewed as a map from the first `split` arguments into
/// forms of degree n - split.
class CurriedForm {
public:
    CurriedForm(std::vector<AlgebraPtr> head_sources, std::vector<PolyForm> slices);

    const std::vector<AlgebraPtr>& head_sources() const noexcept { return head_sources_; }
    /// One slice per basis tuple of the head, row-major.
    const std::vector<PolyForm>& slices() const noexcept { return slices_; }

    PolyForm apply(std::span<const Element> head) const;

private:
    std::vector<AlgebraPtr> head_sources_;
    std::vector<PolyForm> slices_;
};

/// Throws BadSplit unless 1 <= split < degree.
CurriedForm curry(const PolyForm& form, std::size_t split);
PolyForm uncurry(const CurriedForm& curried);

} // namespace fdalg
