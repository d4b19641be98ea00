#include "fdalg/tensor.hpp"

#include "fdalg/error.hpp"
#include "fdalg/linalg.hpp"

namespace fdalg {

namespace {

std::size_t product_of_dims(const std::vector<AlgebraPtr>& factors) {
    std::size_t n = 1;
    for (const auto& f : factors) n *= f->dim();
    return n;
}

void require_order2_same_algebra(const Tensor& t, const char* context) {
    if (t.order() != 2)
        throw OrderMismatch(std::string(context) + ": expected an order-2 tensor, got order " +
                            std::to_string(t.order()));
    require_same_algebra(t.factors()[0], t.factors()[1], context);
}

} // namespace

Tensor::Tensor(std::vector<AlgebraPtr> factors, Vec components)
    : factors_(std::move(factors)), components_(std::move(components)) {
    if (factors_.empty()) throw OrderMismatch("tensor needs at least one factor");
    const Field& f = factors_.front()->field();
    for (const auto& a : factors_)
        if (a->field() != f) throw FieldMismatch("tensor factors over different fields");
    if (components_.size() != product_of_dims(factors_))
        throw ShapeMismatch("tensor has " + std::to_string(components_.size()) + " components, expected " +
                            std::to_string(product_of_dims(factors_)));
    for (const auto& c : components_)
        if (c.field() != f) throw FieldMismatch("tensor component outside " + f.name());
}

Tensor Tensor::zero(std::vector<AlgebraPtr> factors) {
    const std::size_t n = product_of_dims(factors);
    const Field f = factors.front()->field();
    return Tensor(std::move(factors), zero_vec(n, f));
}

Tensor Tensor::basis(std::vector<AlgebraPtr> factors, std::span<const std::size_t> index) {
    Tensor t = zero(std::move(factors));
    t.components_[t.flat_index(index)] = Scalar::one(t.field());
    return t;
}

Tensor Tensor::unit(std::vector<AlgebraPtr> factors) {
    std::vector<Element> units;
    for (const auto& f : factors) units.push_back(Element::unit(f));
    return tensor_of_vectors(units);
}

std::size_t Tensor::flat_index(std::span<const std::size_t> index) const {
    if (index.size() != factors_.size()) throw OrderMismatch("index length does not match tensor order");
    std::size_t flat = 0;
    for (std::size_t s = 0; s < index.size(); ++s) {
        if (index[s] >= factors_[s]->dim()) throw ShapeMismatch("tensor index out of range");
        flat = flat * factors_[s]->dim() + index[s];
    }
    return flat;
}

std::vector<std::size_t> Tensor::multi_index(std::size_t flat) const {
    std::vector<std::size_t> index(factors_.size());
    for (std::size_t s = factors_.size(); s-- > 0;) {
        index[s] = flat % factors_[s]->dim();
        flat /= factors_[s]->dim();
    }
    return index;
}

bool Tensor::is_zero() const { return fdalg::is_zero(components_); }

void require_same_factors(const Tensor& a, const Tensor& b, const char* context) {
    bool ok = a.order() == b.order();
    for (std::size_t s = 0; ok && s < a.order(); ++s) ok = same_algebra(a.factors()[s], b.factors()[s]);
    if (!ok) throw FactorMismatch(std::string(context) + ": tensors have different factor lists");
}

Tensor operator+(const Tensor& a, const Tensor& b) {
    require_same_factors(a, b, "tensor add");
    return Tensor(a.factors_, a.components_ + b.components_);
}

Tensor operator-(const Tensor& a, const Tensor& b) {
    require_same_factors(a, b, "tensor sub");
    return Tensor(a.factors_, a.components_ - b.components_);
}

Tensor operator*(const Scalar& s, const Tensor& t) { return Tensor(t.factors_, s * t.components_); }

bool operator==(const Tensor& a, const Tensor& b) {
    if (a.order() != b.order()) return false;
    for (std::size_t s = 0; s < a.order(); ++s)
        if (!same_algebra(a.factors_[s], b.factors_[s])) return false;
    return a.components_ == b.components_;
}

Tensor tensor_of_vectors(std::span<const Element> vectors) {
    if (vectors.empty()) throw OrderMismatch("tensor_of_vectors needs at least one vector");
    std::vector<AlgebraPtr> factors;
    for (const auto& v : vectors) {
        if (v.algebra()->field() != vectors.front().algebra()->field())
            throw FieldMismatch("tensor_of_vectors across fields");
        factors.push_back(v.algebra());
    }
    // Outer product built slot by slot; row-major keeps slot 1 most significant.
    Vec acc{Scalar::one(vectors.front().algebra()->field())};
    for (const auto& v : vectors) {
        Vec next;
        next.reserve(acc.size() * v.dim());
        for (const auto& a : acc)
            for (const auto& x : v.coords()) next.push_back(a * x);
        acc = std::move(next);
    }
    return Tensor(std::move(factors), std::move(acc));
}

Tensor tensor_of_vectors(std::initializer_list<Element> vectors) {
    return tensor_of_vectors(std::span<const Element>(vectors.begin(), vectors.size()));
}

AlgebraPtr tensor_product_algebra(std::span<const AlgebraPtr> algebras) {
    if (algebras.empty()) throw OrderMismatch("tensor product of no algebras");
    if (algebras.size() == 1) return algebras.front();

    const Field field = algebras.front()->field();
    std::vector<AlgebraPtr> factors(algebras.begin(), algebras.end());
    std::string name;
    bool unital = true;
    std::vector<std::size_t> unit_index;
    for (const auto& a : factors) {
        if (a->field() != field) throw FieldMismatch("tensor product across fields");
        name += (name.empty() ? "" : "(x)") + a->name();
        if (a->unit()) unit_index.push_back(*a->unit());
        else unital = false;
    }

    const Tensor shape = Tensor::zero(factors);
    const std::size_t n = shape.size();
    std::vector<Scalar> constants(n * n * n, Scalar::zero(field));
    for (std::size_t k = 0; k < n; ++k) {
        const auto ki = shape.multi_index(k);
        for (std::size_t l = 0; l < n; ++l) {
            const auto li = shape.multi_index(l);
            for (std::size_t j = 0; j < n; ++j) {
                const auto ji = shape.multi_index(j);
                Scalar c = Scalar::one(field);
                for (std::size_t s = 0; s < factors.size() && !c.is_zero(); ++s)
                    c *= factors[s]->c(ki[s], li[s], ji[s]);
                constants[(k * n + l) * n + j] = std::move(c);
            }
        }
    }
    std::optional<std::size_t> unit;
    if (unital) unit = shape.flat_index(unit_index);
    return make_algebra(std::move(name), field, n, std::move(constants), unit);
}

Element as_product_element(const Tensor& t, const AlgebraPtr& product) {
    if (product->dim() != t.size()) throw ShapeMismatch("product algebra dimension does not match tensor");
    return Element(product, t.components());
}

Tensor from_product_element(const Element& e, std::vector<AlgebraPtr> factors) {
    return Tensor(std::move(factors), e.coords());
}

Tensor tensor_multiply(const Tensor& a, const Tensor& b) {
    require_same_factors(a, b, "tensor_multiply");
    const auto& factors = a.factors();
    const std::size_t m = factors.size();
    const Field& field = a.field();
    Tensor out = Tensor::zero(factors);
    Vec result = out.components();

    for (std::size_t ka = 0; ka < a.size(); ++ka) {
        if (a[ka].is_zero()) continue;
        const auto ki = a.multi_index(ka);
        for (std::size_t lb = 0; lb < b.size(); ++lb) {
            if (b[lb].is_zero()) continue;
            const auto li = b.multi_index(lb);
            const Scalar weight = a[ka] * b[lb];
            // (ab)^{j} gets C_1{k1 l1}^{j1} ... C_m{km lm}^{jm} a^k b^l.
            Vec acc{weight};
            for (std::size_t s = 0; s < m; ++s) {
                const std::size_t n = factors[s]->dim();
                Vec next;
                next.reserve(acc.size() * n);
                for (const auto& x : acc)
                    for (std::size_t j = 0; j < n; ++j) next.push_back(x * factors[s]->c(ki[s], li[s], j));
                acc = std::move(next);
            }
            for (std::size_t j = 0; j < acc.size(); ++j)
                if (!acc[j].is_zero()) result[j] += acc[j];
        }
    }
    (void)field;
    return Tensor(factors, std::move(result));
}

Tensor twisted_multiply(const Tensor& c, const Tensor& a) {
    require_order2_same_algebra(c, "twisted_multiply");
    require_order2_same_algebra(a, "twisted_multiply");
    require_same_factors(c, a, "twisted_multiply");
    const Algebra& alg = *c.factors()[0];
    if (!is_associative(alg)) throw NotAssociative("twisted_multiply requires an associative algebra");

    const std::size_t n = alg.dim();
    Vec out = zero_vec(n * n, alg.field());
    for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = 0; q < n; ++q) {
            const Scalar& cpq = c[p * n + q];
            if (cpq.is_zero()) continue;
            for (std::size_t r = 0; r < n; ++r)
                for (std::size_t s = 0; s < n; ++s) {
                    const Scalar& ars = a[r * n + s];
                    if (ars.is_zero()) continue;
                    const Scalar w = cpq * ars;
                    // (e_p e_r) (x) (e_s e_q)
                    for (std::size_t i = 0; i < n; ++i) {
                        const Scalar& left = alg.c(p, r, i);
                        if (left.is_zero()) continue;
                        for (std::size_t j = 0; j < n; ++j) {
                            const Scalar& right = alg.c(s, q, j);
                            if (!right.is_zero()) out[i * n + j] += w * left * right;
                        }
                    }
                }
        }
    return Tensor(c.factors(), std::move(out));
}

Matrix twisted_left_regular_matrix(const Tensor& a) {
    require_order2_same_algebra(a, "twisted_left_regular_matrix");
    const std::size_t size = a.size();
    Matrix m(size, size, a.field());
    for (std::size_t col = 0; col < size; ++col) {
        const Tensor image = twisted_multiply(a, Tensor::basis(a.factors(), a.multi_index(col)));
        for (std::size_t row = 0; row < size; ++row) m(row, col) = image[row];
    }
    return m;
}

std::optional<Tensor> tensor_inverse(const Tensor& a) {
    require_order2_same_algebra(a, "tensor_inverse");
    if (!a.factors()[0]->unit()) throw PreconditionError("tensor_inverse requires a unital algebra");

    const Tensor one = Tensor::unit(a.factors());
    auto sol = solve(twisted_left_regular_matrix(a), Matrix::column(one.components(), a.field()));
    if (!sol) return std::nullopt;
    Tensor b(a.factors(), sol->particular.col(0));
    if (twisted_multiply(a, b) != one || twisted_multiply(b, a) != one) return std::nullopt;
    return b;
}

} // namespace fdalg
