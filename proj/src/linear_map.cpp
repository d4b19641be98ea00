#include "fdalg/linear_map.hpp"

#include "fdalg/error.hpp"
#include "fdalg/fixtures.hpp"

namespace fdalg {

LinearMap::LinearMap(AlgebraPtr source, AlgebraPtr target, Matrix coords)
    : source_(std::move(source)), target_(std::move(target)), coords_(std::move(coords)) {
    if (!source_ || !target_) throw AlgebraMismatch("linear map without source or target");
    if (source_->field() != target_->field()) throw FieldMismatch("linear map between different fields");
    if (coords_.rows() != target_->dim() || coords_.cols() != source_->dim())
        throw ShapeMismatch("linear map matrix is " + std::to_string(coords_.rows()) + "x" +
                            std::to_string(coords_.cols()) + ", expected " + std::to_string(target_->dim()) + "x" +
                            std::to_string(source_->dim()));
    if (coords_.field() != source_->field()) throw FieldMismatch("linear map entries outside " + field().name());
}

LinearMap LinearMap::identity(const AlgebraPtr& alg) {
    return LinearMap(alg, alg, Matrix::identity(alg->dim(), alg->field()));
}

LinearMap LinearMap::zero(const AlgebraPtr& source, const AlgebraPtr& target) {
    return LinearMap(source, target, Matrix(target->dim(), source->dim(), source->field()));
}

LinearMap LinearMap::elementary(const AlgebraPtr& source, const AlgebraPtr& target, std::size_t k, std::size_t l) {
    if (k >= target->dim() || l >= source->dim()) throw ShapeMismatch("elementary map index out of range");
    Matrix m(target->dim(), source->dim(), source->field());
    m(k, l) = Scalar::one(source->field());
    return LinearMap(source, target, std::move(m));
}

LinearMap LinearMap::from_vec(const AlgebraPtr& source, const AlgebraPtr& target, const Vec& v) {
    return LinearMap(source, target, Matrix(target->dim(), source->dim(), source->field(), v));
}

Vec LinearMap::vec() const {
    const auto e = coords_.entries();
    return Vec(e.begin(), e.end());
}

Element LinearMap::eval(const Element& x) const {
    require_same_algebra(x.algebra(), source_, "eval");
    return Element(target_, coords_.apply(x.coords()));
}

void require_same_shape(const LinearMap& f, const LinearMap& g, const char* context) {
    require_same_algebra(f.source(), g.source(), context);
    require_same_algebra(f.target(), g.target(), context);
}

LinearMap operator+(const LinearMap& f, const LinearMap& g) {
    require_same_shape(f, g, "map add");
    return LinearMap(f.source_, f.target_, f.coords_ + g.coords_);
}

LinearMap operator-(const LinearMap& f, const LinearMap& g) {
    require_same_shape(f, g, "map sub");
    return LinearMap(f.source_, f.target_, f.coords_ - g.coords_);
}

LinearMap operator*(const Scalar& d, const LinearMap& f) { return LinearMap(f.source_, f.target_, d * f.coords_); }

bool operator==(const LinearMap& f, const LinearMap& g) {
    return same_algebra(f.source_, g.source_) && same_algebra(f.target_, g.target_) && f.coords_ == g.coords_;
}

Element eval(const LinearMap& f, const Element& x) { return f.eval(x); }
LinearMap add(const LinearMap& f, const LinearMap& g) { return f + g; }
LinearMap scale(const Scalar& d, const LinearMap& f) { return d * f; }

LinearMap compose(const LinearMap& g, const LinearMap& f) {
    require_same_algebra(f.target(), g.source(), "compose");
    return LinearMap(f.source(), g.target(), g.coords() * f.coords());
}

std::vector<LinearMap> dual_basis(const AlgebraPtr& alg) {
    const AlgebraPtr line = fixtures::scalar_algebra(alg->field());
    std::vector<LinearMap> out;
    for (std::size_t i = 0; i < alg->dim(); ++i) out.push_back(LinearMap::elementary(alg, line, 0, i));
    return out;
}

} // namespace fdalg
