#include "fdalg/polylinear.hpp"

#include <algorithm>

#include "fdalg/error.hpp"

namespace fdalg {

namespace {

std::size_t count(const std::vector<std::size_t>& dims) {
    std::size_t n = 1;
    for (auto d : dims) n *= d;
    return n;
}

std::vector<std::size_t> form_dims(const std::vector<AlgebraPtr>& sources, const AlgebraPtr& target) {
    std::vector<std::size_t> dims;
    for (const auto& s : sources) dims.push_back(s->dim());
    dims.push_back(target->dim());
    return dims;
}

// Steps `index` to the next tuple in row-major order; false after the last one.
bool advance(std::vector<std::size_t>& index, const std::vector<std::size_t>& dims) {
    for (std::size_t s = index.size(); s-- > 0;) {
        if (++index[s] < dims[s]) return true;
        index[s] = 0;
    }
    return false;
}

Vec product_coords(const Algebra& alg, const Vec& u, const Vec& w) {
    const std::size_t n = alg.dim();
    Vec out = zero_vec(n, alg.field());
    for (std::size_t i = 0; i < n; ++i) {
        if (u[i].is_zero()) continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (w[j].is_zero()) continue;
            const Scalar uw = u[i] * w[j];
            for (std::size_t k = 0; k < n; ++k)
                if (!alg.c(i, j, k).is_zero()) out[k] += uw * alg.c(i, j, k);
        }
    }
    return out;
}

void require_common_source(const PolyForm& form, const char* context) {
    for (const auto& s : form.sources())
        if (!same_algebra(s, form.sources().front()))
            throw SourceMismatch(std::string(context) + ": form arguments range over different algebras");
}

bool adjacent_swaps_match(const PolyForm& form, bool negate) {
    require_common_source(form, negate ? "is_skew" : "is_symmetric");
    const std::size_t n = form.degree();
    for (std::size_t flat = 0; flat < form.components().size(); ++flat) {
        const auto index = form.multi_index(flat);
        for (std::size_t s = 0; s + 1 < n; ++s) {
            auto swapped = index;
            std::swap(swapped[s], swapped[s + 1]);
            const Scalar& other = form.at(swapped);
            if (negate ? form.components()[flat] != -other : form.components()[flat] != other) return false;
        }
    }
    return true;
}

void require_args(const std::vector<AlgebraPtr>& sources, std::span<const Element> args, const char* context) {
    if (args.size() != sources.size())
        throw ArityMismatch(std::string(context) + ": expected " + std::to_string(sources.size()) +
                            " arguments, got " + std::to_string(args.size()));
    for (std::size_t s = 0; s < args.size(); ++s) require_same_algebra(args[s].algebra(), sources[s], context);
}

} // namespace

PolyForm::PolyForm(std::vector<AlgebraPtr> sources, AlgebraPtr target, Vec components)
    : sources_(std::move(sources)), target_(std::move(target)), components_(std::move(components)) {
    if (sources_.empty()) throw ArityMismatch("polylinear form needs at least one argument");
    for (const auto& s : sources_)
        if (s->field() != target_->field()) throw FieldMismatch("form sources and target over different fields");
    const std::size_t expected = count(form_dims(sources_, target_));
    if (components_.size() != expected)
        throw ShapeMismatch("form has " + std::to_string(components_.size()) + " components, expected " +
                            std::to_string(expected));
    for (const auto& c : components_)
        if (c.field() != target_->field()) throw FieldMismatch("form component outside " + field().name());
}

PolyForm PolyForm::zero(std::vector<AlgebraPtr> sources, AlgebraPtr target) {
    const std::size_t n = count(form_dims(sources, target));
    const Field f = target->field();
    return PolyForm(std::move(sources), std::move(target), zero_vec(n, f));
}

std::size_t PolyForm::flat_index(std::span<const std::size_t> index) const {
    const auto dims = form_dims(sources_, target_);
    if (index.size() != dims.size()) throw ArityMismatch("form index has wrong length");
    std::size_t flat = 0;
    for (std::size_t s = 0; s < dims.size(); ++s) {
        if (index[s] >= dims[s]) throw ShapeMismatch("form index out of range");
        flat = flat * dims[s] + index[s];
    }
    return flat;
}

std::vector<std::size_t> PolyForm::multi_index(std::size_t flat) const {
    const auto dims = form_dims(sources_, target_);
    std::vector<std::size_t> index(dims.size());
    for (std::size_t s = dims.size(); s-- > 0;) {
        index[s] = flat % dims[s];
        flat /= dims[s];
    }
    return index;
}

bool PolyForm::is_zero() const { return fdalg::is_zero(components_); }

namespace {
void require_same_form_shape(const PolyForm& f, const PolyForm& g, const char* context) {
    bool ok = f.degree() == g.degree() && same_algebra(f.target(), g.target());
    for (std::size_t s = 0; ok && s < f.degree(); ++s) ok = same_algebra(f.sources()[s], g.sources()[s]);
    if (!ok) throw ShapeMismatch(std::string(context) + ": forms have different shapes");
}
} // namespace

PolyForm operator+(const PolyForm& f, const PolyForm& g) {
    require_same_form_shape(f, g, "poly_add");
    return PolyForm(f.sources_, f.target_, f.components_ + g.components_);
}

PolyForm operator*(const Scalar& d, const PolyForm& f) { return PolyForm(f.sources_, f.target_, d * f.components_); }

bool operator==(const PolyForm& f, const PolyForm& g) {
    if (f.degree() != g.degree() || !same_algebra(f.target_, g.target_)) return false;
    for (std::size_t s = 0; s < f.degree(); ++s)
        if (!same_algebra(f.sources_[s], g.sources_[s])) return false;
    return f.components_ == g.components_;
}

PolyForm poly_add(const PolyForm& f, const PolyForm& g) { return f + g; }
PolyForm poly_scale(const Scalar& d, const PolyForm& f) { return d * f; }

Element poly_eval(const PolyForm& form, std::span<const Element> args) {
    require_args(form.sources(), args, "poly_eval");
    const std::size_t nt = form.target()->dim();
    std::vector<std::size_t> dims;
    for (const auto& s : form.sources()) dims.push_back(s->dim());

    Vec out = zero_vec(nt, form.field());
    std::vector<std::size_t> index(dims.size(), 0);
    std::size_t block = 0;
    do {
        Scalar w = Scalar::one(form.field());
        for (std::size_t s = 0; s < index.size() && !w.is_zero(); ++s) w *= args[s][index[s]];
        if (!w.is_zero())
            for (std::size_t p = 0; p < nt; ++p) out[p] += w * form.components()[block * nt + p];
        ++block;
    } while (advance(index, dims));
    return Element(form.target(), std::move(out));
}

Element poly_eval(const PolyForm& form, std::initializer_list<Element> args) {
    return poly_eval(form, std::span<const Element>(args.begin(), args.size()));
}

PolyForm poly_from_evaluator(std::vector<AlgebraPtr> sources, AlgebraPtr target, const Evaluator& evaluator) {
    std::vector<std::size_t> dims;
    for (const auto& s : sources) dims.push_back(s->dim());
    Vec comps;
    comps.reserve(count(dims) * target->dim());
    std::vector<std::size_t> index(dims.size(), 0);
    do {
        std::vector<Element> basis;
        for (std::size_t s = 0; s < index.size(); ++s) basis.push_back(Element::basis(sources[s], index[s]));
        const Element value = evaluator(basis);
        require_same_algebra(value.algebra(), target, "poly_from_evaluator");
        comps.insert(comps.end(), value.coords().begin(), value.coords().end());
    } while (advance(index, dims));
    return PolyForm(std::move(sources), std::move(target), std::move(comps));
}

PolyForm basis_change(const PolyForm& form, const std::vector<Matrix>& h) {
    if (h.size() != form.degree())
        throw ArityMismatch("basis_change needs one matrix per argument, got " + std::to_string(h.size()));
    for (std::size_t s = 0; s < h.size(); ++s) {
        const std::size_t d = form.sources()[s]->dim();
        if (h[s].rows() != d || h[s].cols() != d)
            throw ShapeMismatch("basis change matrix for argument " + std::to_string(s + 1) + " is not " +
                                std::to_string(d) + "x" + std::to_string(d));
        if (rank(h[s]) != d) throw SingularBasisChange("basis change for argument " + std::to_string(s + 1) + " is singular");
    }

    const auto dims = form_dims(form.sources(), form.target());
    Vec current = form.components();
    // Contract one axis at a time: new[.. i ..] = sum_j h^j_i old[.. j ..].
    for (std::size_t axis = 0; axis < h.size(); ++axis) {
        std::size_t inner = 1;
        for (std::size_t s = axis + 1; s < dims.size(); ++s) inner *= dims[s];
        const std::size_t d = dims[axis];
        const std::size_t outer = current.size() / (d * inner);
        Vec next = zero_vec(current.size(), form.field());
        for (std::size_t o = 0; o < outer; ++o)
            for (std::size_t j = 0; j < d; ++j)
                for (std::size_t r = 0; r < inner; ++r) {
                    const Scalar& v = current[(o * d + j) * inner + r];
                    if (v.is_zero()) continue;
                    for (std::size_t i = 0; i < d; ++i)
                        if (!h[axis](j, i).is_zero()) next[(o * d + i) * inner + r] += h[axis](j, i) * v;
                }
        current = std::move(next);
    }
    return PolyForm(form.sources(), form.target(), std::move(current));
}

bool is_symmetric(const PolyForm& form) { return adjacent_swaps_match(form, false); }
bool is_skew(const PolyForm& form) { return adjacent_swaps_match(form, true); }

PolyForm multiplication_form(const AlgebraPtr& alg) { return PolyForm({alg, alg}, alg, alg->constants()); }

PolyForm commutator_form(const AlgebraPtr& alg) {
    return poly_from_evaluator({alg, alg}, alg, [](std::span<const Element> x) { return commutator(x[0], x[1]); });
}

PolyForm form_of_map(const LinearMap& f) {
    const std::size_t ns = f.source()->dim();
    const std::size_t nt = f.target()->dim();
    Vec comps;
    comps.reserve(ns * nt);
    for (std::size_t j = 0; j < ns; ++j)
        for (std::size_t p = 0; p < nt; ++p) comps.push_back(f(p, j));
    return PolyForm({f.source()}, f.target(), std::move(comps));
}

LinearMap map_of_form(const PolyForm& form) {
    if (form.degree() != 1) throw ArityMismatch("only degree-1 forms are linear maps");
    const std::size_t ns = form.sources()[0]->dim();
    const std::size_t nt = form.target()->dim();
    Matrix m(nt, ns, form.field());
    for (std::size_t j = 0; j < ns; ++j)
        for (std::size_t p = 0; p < nt; ++p) m(p, j) = form.components()[j * nt + p];
    return LinearMap(form.sources()[0], form.target(), std::move(m));
}

PermTensor::PermTensor(Tensor w, std::vector<std::size_t> s) : weights(std::move(w)), sigma(std::move(s)) {
    if (weights.order() != sigma.size() + 1)
        throw OrderMismatch("weights of order " + std::to_string(weights.order()) + " for a permutation of " +
                            std::to_string(sigma.size()) + " arguments");
    for (const auto& f : weights.factors()) require_same_algebra(f, weights.factors().front(), "perm tensor");
    std::vector<bool> seen(sigma.size(), false);
    for (auto v : sigma) {
        if (v >= sigma.size() || seen[v]) throw ValidationError("permutation", "sigma is not a bijection");
        seen[v] = true;
    }
}

Element perm_tensor_eval(const PermTensor& pt, std::span<const LinearMap> maps, std::span<const Element> args) {
    const AlgebraPtr& alg = pt.carrier();
    const std::size_t n = pt.degree();
    if (maps.size() != n || args.size() != n)
        throw ArityMismatch("perm_tensor_eval: expected " + std::to_string(n) + " maps and arguments");
    if (!is_associative(*alg)) throw NotAssociative("perm_tensor_eval requires an associative carrier");

    std::vector<Element> slot;
    slot.reserve(n);
    for (std::size_t s = 0; s < n; ++s) {
        const std::size_t arg = pt.sigma[s];
        require_same_algebra(maps[arg].target(), alg, "perm_tensor_eval");
        slot.push_back(maps[arg].eval(args[arg]));
    }

    const std::size_t d = alg->dim();
    Element total = Element::zero(alg);
    std::vector<std::size_t> index(n + 1, 0);
    // Depth-first over weight indices; prefix[s] = e_{i0} m_1 e_{i1} ... e_{is}.
    std::vector<Element> prefix(n + 1, Element::zero(alg));
    std::size_t flat = 0;
    auto walk = [&](auto&& self, std::size_t depth) -> void {
        for (std::size_t i = 0; i < d; ++i) {
            index[depth] = i;
            if (depth == 0) prefix[0] = Element::basis(alg, i);
            else prefix[depth] = (prefix[depth - 1] * slot[depth - 1]) * Element::basis(alg, i);
            if (depth == n) {
                const Scalar& w = pt.weights[flat++];
                if (!w.is_zero()) total = total + w * prefix[depth];
            } else {
                self(self, depth + 1);
            }
        }
    };
    walk(walk, 0);
    return total;
}

Element poly_standard_eval(std::span<const PolyTerm> terms, const GeneratorSet& gens, std::span<const Element> args) {
    if (terms.empty()) throw ArityMismatch("poly_standard_eval needs at least one term");
    Element total = Element::zero(gens.target());
    for (const auto& term : terms) {
        if (term.generators.size() != term.tensor.degree())
            throw ArityMismatch("term lists " + std::to_string(term.generators.size()) + " generators for degree " +
                                std::to_string(term.tensor.degree()));
        std::vector<LinearMap> maps;
        for (auto k : term.generators) maps.push_back(gens[k]);
        total = total + perm_tensor_eval(term.tensor, maps, args);
    }
    return total;
}

PolyForm standard_form(std::span<const PolyTerm> terms, const GeneratorSet& gens, std::size_t degree) {
    const AlgebraPtr& alg = gens.target();
    const std::size_t d = alg->dim();
    const std::size_t ns = gens.source()->dim();
    std::vector<AlgebraPtr> sources(degree, gens.source());
    PolyForm out = PolyForm::zero(sources, alg);
    Vec comps = out.components();

    const std::vector<std::size_t> arg_dims(degree, ns);
    const std::vector<std::size_t> weight_dims(degree + 1, d);
    for (const auto& term : terms) {
        if (term.tensor.degree() != degree || term.generators.size() != degree)
            throw ArityMismatch("standard_form: term degree differs from " + std::to_string(degree));
        require_same_algebra(term.tensor.carrier(), alg, "standard_form");

        std::vector<std::size_t> j(degree, 0);
        std::size_t block = 0;
        do {
            // Image of e_{j_a} under generator k_a, as a coordinate column.
            std::vector<Vec> images(degree);
            for (std::size_t a = 0; a < degree; ++a) images[a] = gens[term.generators[a]].coords().col(j[a]);

            std::vector<std::size_t> w(degree + 1, 0);
            std::size_t wflat = 0;
            do {
                const Scalar& weight = term.tensor.weights[wflat++];
                if (weight.is_zero()) continue;
                Vec chain = zero_vec(d, alg->field());
                chain[w[0]] = weight;
                for (std::size_t s = 0; s < degree; ++s) {
                    chain = product_coords(*alg, chain, images[term.tensor.sigma[s]]);
                    Vec basis = zero_vec(d, alg->field());
                    basis[w[s + 1]] = Scalar::one(alg->field());
                    chain = product_coords(*alg, chain, basis);
                }
                for (std::size_t p = 0; p < d; ++p) comps[block * d + p] += chain[p];
            } while (advance(w, weight_dims));
            ++block;
        } while (advance(j, arg_dims));
    }
    return PolyForm(std::move(sources), alg, std::move(comps));
}

CurriedForm::CurriedForm(std::vector<AlgebraPtr> head_sources, std::vector<PolyForm> slices)
    : head_sources_(std::move(head_sources)), slices_(std::move(slices)) {
    std::size_t expected = 1;
    for (const auto& s : head_sources_) expected *= s->dim();
    if (head_sources_.empty() || slices_.size() != expected)
        throw ShapeMismatch("curried form needs one slice per head basis tuple");
    for (const auto& s : slices_) require_same_form_shape(s, slices_.front(), "curried form");
}

PolyForm CurriedForm::apply(std::span<const Element> head) const {
    require_args(head_sources_, head, "curried apply");
    std::vector<std::size_t> dims;
    for (const auto& s : head_sources_) dims.push_back(s->dim());
    PolyForm out = PolyForm::zero(slices_.front().sources(), slices_.front().target());
    std::vector<std::size_t> index(dims.size(), 0);
    std::size_t flat = 0;
    do {
        Scalar w = Scalar::one(out.field());
        for (std::size_t s = 0; s < index.size() && !w.is_zero(); ++s) w *= head[s][index[s]];
        if (!w.is_zero()) out = out + w * slices_[flat];
        ++flat;
    } while (advance(index, dims));
    return out;
}

CurriedForm curry(const PolyForm& form, std::size_t split) {
    if (split < 1 || split >= form.degree())
        throw BadSplit("split " + std::to_string(split) + " is outside 1.." + std::to_string(form.degree() - 1));
    const auto& sources = form.sources();
    std::vector<AlgebraPtr> head(sources.begin(), sources.begin() + static_cast<std::ptrdiff_t>(split));
    std::vector<AlgebraPtr> tail(sources.begin() + static_cast<std::ptrdiff_t>(split), sources.end());
    const std::size_t slice_size = count(form_dims(tail, form.target()));
    const std::size_t slices = form.components().size() / slice_size;

    std::vector<PolyForm> out;
    out.reserve(slices);
    for (std::size_t h = 0; h < slices; ++h) {
        const auto first = form.components().begin() + static_cast<std::ptrdiff_t>(h * slice_size);
        out.emplace_back(tail, form.target(), Vec(first, first + static_cast<std::ptrdiff_t>(slice_size)));
    }
    return CurriedForm(std::move(head), std::move(out));
}

PolyForm uncurry(const CurriedForm& curried) {
    std::vector<AlgebraPtr> sources = curried.head_sources();
    const auto& first = curried.slices().front();
    sources.insert(sources.end(), first.sources().begin(), first.sources().end());
    Vec comps;
    for (const auto& s : curried.slices()) comps.insert(comps.end(), s.components().begin(), s.components().end());
    return PolyForm(std::move(sources), first.target(), std::move(comps));
}

} // namespace fdalg
