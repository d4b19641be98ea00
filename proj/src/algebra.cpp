#include "fdalg/algebra.hpp"

#include "fdalg/error.hpp"
#include "fdalg/linalg.hpp"

namespace fdalg {

Algebra::Algebra(std::string name, Field field, std::size_t dim, std::vector<Scalar> constants,
                 std::optional<std::size_t> unit)
    : name_(std::move(name)), field_(field), dim_(dim), constants_(std::move(constants)), unit_(unit) {
    if (dim_ == 0) throw ValidationError("dimension", "algebra dimension must be at least 1");
    if (constants_.size() != dim_ * dim_ * dim_)
        throw ValidationError("constants", "expected " + std::to_string(dim_ * dim_ * dim_) + " structural constants");
    for (const auto& c : constants_)
        if (c.field() != field_) throw FieldMismatch("structural constant outside " + field_.name());

    if (unit_) {
        const std::size_t u = *unit_;
        if (u >= dim_) throw ValidationError("unit", "unit index " + std::to_string(u) + " out of range");
        for (std::size_t j = 0; j < dim_; ++j)
            for (std::size_t k = 0; k < dim_; ++k) {
                const bool diag = j == k;
                const auto& left = c(u, j, k);
                const auto& right = c(j, u, k);
                if (left != (diag ? Scalar::one(field_) : Scalar::zero(field_)))
                    throw ValidationError("unit", "C_" + std::to_string(u) + std::to_string(j) + "^" +
                                                      std::to_string(k) + " = " + left.to_string() +
                                                      " contradicts e_u e_j = e_j");
                if (right != (diag ? Scalar::one(field_) : Scalar::zero(field_)))
                    throw ValidationError("unit", "C_" + std::to_string(j) + std::to_string(u) + "^" +
                                                      std::to_string(k) + " = " + right.to_string() +
                                                      " contradicts e_j e_u = e_j");
            }
    }
}

bool Algebra::same_structure(const Algebra& other) const {
    return field_ == other.field_ && dim_ == other.dim_ && unit_ == other.unit_ && constants_ == other.constants_;
}

AlgebraPtr make_algebra(std::string name, Field field, std::size_t dim, std::vector<Scalar> constants,
                        std::optional<std::size_t> unit) {
    return std::make_shared<const Algebra>(std::move(name), field, dim, std::move(constants), unit);
}

bool same_algebra(const AlgebraPtr& a, const AlgebraPtr& b) {
    return a == b || (a && b && a->same_structure(*b));
}

void require_same_algebra(const AlgebraPtr& a, const AlgebraPtr& b, const char* context) {
    if (!same_algebra(a, b))
        throw AlgebraMismatch(std::string(context) + ": operands belong to different algebras (" +
                              (a ? a->name() : "?") + ", " + (b ? b->name() : "?") + ")");
}

Element::Element(AlgebraPtr algebra, Vec coords) : algebra_(std::move(algebra)), coords_(std::move(coords)) {
    if (!algebra_) throw AlgebraMismatch("element without algebra");
    if (coords_.size() != algebra_->dim())
        throw ShapeMismatch("element has " + std::to_string(coords_.size()) + " coordinates, algebra dim is " +
                            std::to_string(algebra_->dim()));
    for (const auto& c : coords_)
        if (c.field() != algebra_->field()) throw FieldMismatch("coordinate outside " + algebra_->field().name());
}

Element Element::zero(const AlgebraPtr& algebra) {
    return Element(algebra, zero_vec(algebra->dim(), algebra->field()));
}

Element Element::basis(const AlgebraPtr& algebra, std::size_t i) {
    Vec v = zero_vec(algebra->dim(), algebra->field());
    v.at(i) = Scalar::one(algebra->field());
    return Element(algebra, std::move(v));
}

Element Element::unit(const AlgebraPtr& algebra) {
    if (!algebra->unit()) throw PreconditionError("algebra '" + algebra->name() + "' declares no unit");
    return basis(algebra, *algebra->unit());
}

bool Element::is_zero() const { return fdalg::is_zero(coords_); }

Element Element::operator-() const { return Element(algebra_, Scalar(algebra_->field(), -1) * coords_); }

Element operator+(const Element& a, const Element& b) {
    require_same_algebra(a.algebra_, b.algebra_, "add");
    return Element(a.algebra_, a.coords_ + b.coords_);
}

Element operator-(const Element& a, const Element& b) {
    require_same_algebra(a.algebra_, b.algebra_, "sub");
    return Element(a.algebra_, a.coords_ - b.coords_);
}

Element operator*(const Scalar& s, const Element& a) { return Element(a.algebra_, s * a.coords_); }

Element operator*(const Element& a, const Element& b) {
    require_same_algebra(a.algebra_, b.algebra_, "multiply");
    const Algebra& alg = *a.algebra_;
    const std::size_t n = alg.dim();
    Vec out = zero_vec(n, alg.field());
    for (std::size_t i = 0; i < n; ++i) {
        if (a.coords_[i].is_zero()) continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (b.coords_[j].is_zero()) continue;
            const Scalar ab = a.coords_[i] * b.coords_[j];
            for (std::size_t k = 0; k < n; ++k) {
                const Scalar& c = alg.c(i, j, k);
                if (!c.is_zero()) out[k] += c * ab;
            }
        }
    }
    return Element(a.algebra_, std::move(out));
}

bool operator==(const Element& a, const Element& b) {
    return same_algebra(a.algebra_, b.algebra_) && a.coords_ == b.coords_;
}

Element multiply(const Element& a, const Element& b) { return a * b; }

Element commutator(const Element& a, const Element& b) { return a * b - b * a; }

Element associator(const Element& a, const Element& b, const Element& c) { return (a * b) * c - a * (b * c); }

Element teichmuller_residual(const Element& a, const Element& b, const Element& c, const Element& d) {
    return a * associator(b, c, d) + associator(a, b, c) * d - associator(a * b, c, d) + associator(a, b * c, d) -
           associator(a, b, c * d);
}

bool is_commutative(const Algebra& alg) {
    const std::size_t n = alg.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t p = 0; p < n; ++p)
                if (alg.c(i, j, p) != alg.c(j, i, p)) return false;
    return true;
}

bool is_associative(const Algebra& alg) {
    const std::size_t n = alg.dim();
    const Field& f = alg.field();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                for (std::size_t q = 0; q < n; ++q) {
                    Scalar lhs = Scalar::zero(f);
                    Scalar rhs = Scalar::zero(f);
                    for (std::size_t p = 0; p < n; ++p) {
                        lhs += alg.c(i, j, p) * alg.c(p, k, q);
                        rhs += alg.c(i, p, q) * alg.c(j, k, p);
                    }
                    if (lhs != rhs) return false;
                }
    return true;
}

bool basis_associators_vanish(const AlgebraPtr& alg) {
    const std::size_t n = alg->dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                if (!associator(Element::basis(alg, i), Element::basis(alg, j), Element::basis(alg, k)).is_zero())
                    return false;
    return true;
}

namespace {

// Rows of the linear system in the unknown a whose solutions form the nucleus:
// column i holds the coordinates of (e_i,e_j,e_k), (e_j,e_i,e_k), (e_j,e_k,e_i).
Matrix nucleus_constraints(const AlgebraPtr& alg) {
    const std::size_t n = alg->dim();
    Matrix m(3 * n * n * n, n, alg->field());
    for (std::size_t i = 0; i < n; ++i) {
        const Element ei = Element::basis(alg, i);
        std::size_t row = 0;
        for (std::size_t j = 0; j < n; ++j) {
            const Element ej = Element::basis(alg, j);
            for (std::size_t k = 0; k < n; ++k) {
                const Element ek = Element::basis(alg, k);
                for (const Element& v : {associator(ei, ej, ek), associator(ej, ei, ek), associator(ej, ek, ei)})
                    for (std::size_t c = 0; c < n; ++c) m(row++, i) = v[c];
            }
        }
    }
    return m;
}

Matrix commutation_constraints(const AlgebraPtr& alg) {
    const std::size_t n = alg->dim();
    Matrix m(n * n, n, alg->field());
    for (std::size_t i = 0; i < n; ++i) {
        const Element ei = Element::basis(alg, i);
        for (std::size_t j = 0; j < n; ++j) {
            const Element v = commutator(ei, Element::basis(alg, j));
            for (std::size_t c = 0; c < n; ++c) m(j * n + c, i) = v[c];
        }
    }
    return m;
}

std::vector<Element> canonical_solution_basis(const AlgebraPtr& alg, const Matrix& constraints) {
    const Subspace s = Subspace::span(alg->dim(), alg->field(), nullspace_basis(constraints));
    std::vector<Element> out;
    for (const auto& v : s.basis()) out.emplace_back(alg, v);
    return out;
}

} // namespace

std::vector<Element> nucleus_basis(const AlgebraPtr& alg) {
    return canonical_solution_basis(alg, nucleus_constraints(alg));
}

std::vector<Element> center_basis(const AlgebraPtr& alg) {
    return canonical_solution_basis(alg, Matrix::vstack(nucleus_constraints(alg), commutation_constraints(alg)));
}

std::optional<Element> find_unit(const AlgebraPtr& alg) {
    // Unknown e; equations (e e_j)^k = delta_j^k and (e_j e)^k = delta_j^k.
    const std::size_t n = alg->dim();
    const Field& f = alg->field();
    Matrix m(2 * n * n, n, f);
    Matrix rhs(2 * n * n, 1, f);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) {
            const std::size_t left_row = j * n + k;
            const std::size_t right_row = n * n + j * n + k;
            for (std::size_t i = 0; i < n; ++i) {
                m(left_row, i) = alg->c(i, j, k);
                m(right_row, i) = alg->c(j, i, k);
            }
            if (j == k) {
                rhs(left_row, 0) = Scalar::one(f);
                rhs(right_row, 0) = Scalar::one(f);
            }
        }
    auto sol = solve(m, rhs);
    if (!sol) return std::nullopt;
    return Element(alg, sol->particular.col(0));
}

Matrix left_shift_matrix(const Element& a) {
    const Algebra& alg = *a.algebra();
    const std::size_t n = alg.dim();
    Matrix m(n, n, alg.field());
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) m(k, j) += alg.c(i, j, k) * a[i];
    }
    return m;
}

Matrix right_shift_matrix(const Element& a) {
    const Algebra& alg = *a.algebra();
    const std::size_t n = alg.dim();
    Matrix m(n, n, alg.field());
    for (std::size_t j = 0; j < n; ++j) {
        if (a[j].is_zero()) continue;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t k = 0; k < n; ++k) m(k, i) += alg.c(i, j, k) * a[j];
    }
    return m;
}

Matrix matrix_of(const AlgebraPtr& source, const std::function<Element(const Element&)>& fn) {
    const std::size_t n = source->dim();
    std::vector<Element> images;
    images.reserve(n);
    for (std::size_t j = 0; j < n; ++j) images.push_back(fn(Element::basis(source, j)));
    const Field& f = images.front().algebra()->field();
    Matrix m(images.front().dim(), n, f);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < m.rows(); ++k) m(k, j) = images[j][k];
    return m;
}

} // namespace fdalg
