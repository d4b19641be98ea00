#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "fdalg/matrix.hpp"

namespace fdalg {

/// Free finite-dimensional algebra given by structural constants
/// e_i e_j = C_ij^k e_k over a field.
///
/// Constants are stored densely, flat index (i * n + j) * n + k. A declared
/// unit index u is validated at construction: C_uj^k = C_ju^k = delta_j^k.
class Algebra {
public:
    /// Throws ValidationError("dimension" | "constants" | "unit") or
    /// FieldMismatch when an invariant fails.
    Algebra(std::string name, Field field, std::size_t dim, std::vector<Scalar> constants,
            std::optional<std::size_t> unit = std::nullopt);

    const std::string& name() const noexcept { return name_; }
    const Field& field() const noexcept { return field_; }
    std::size_t dim() const noexcept { return dim_; }
    std::optional<std::size_t> unit() const noexcept { return unit_; }

    const Scalar& c(std::size_t i, std::size_t j, std::size_t k) const {
        return constants_[(i * dim_ + j) * dim_ + k];
    }
    const std::vector<Scalar>& constants() const noexcept { return constants_; }

    /// Same field, dimension, constants and unit. The name is ignored.
    bool same_structure(const Algebra& other) const;

private:
    std::string name_;
    Field field_;
    std::size_t dim_;
    std::vector<Scalar> constants_;
    std::optional<std::size_t> unit_;
};

using AlgebraPtr = std::shared_ptr<const Algebra>;

AlgebraPtr make_algebra(std::string name, Field field, std::size_t dim, std::vector<Scalar> constants,
                        std::optional<std::size_t> unit = std::nullopt);

/// Throws AlgebraMismatch unless both pointers denote the same structure.
void require_same_algebra(const AlgebraPtr& a, const AlgebraPtr& b, const char* context);
bool same_algebra(const AlgebraPtr& a, const AlgebraPtr& b);

/// Element a = a^i e_i of an algebra.
class Element {
public:
    Element(AlgebraPtr algebra, Vec coords);

    static Element zero(const AlgebraPtr& algebra);
    static Element basis(const AlgebraPtr& algebra, std::size_t i);
    /// The declared unit; throws PreconditionError if there is none.
    static Element unit(const AlgebraPtr& algebra);

    const AlgebraPtr& algebra() const noexcept { return algebra_; }
    const Vec& coords() const noexcept { return coords_; }
    const Scalar& operator[](std::size_t i) const { return coords_[i]; }
    std::size_t dim() const noexcept { return coords_.size(); }
    bool is_zero() const;

    Element operator-() const;
    friend Element operator+(const Element& a, const Element& b);
    friend Element operator-(const Element& a, const Element& b);
    friend Element operator*(const Scalar& s, const Element& a);
    /// Algebra product (ab)^k = C_ij^k a^i b^j.
    friend Element operator*(const Element& a, const Element& b);
    friend bool operator==(const Element& a, const Element& b);

private:
    AlgebraPtr algebra_;
    Vec coords_;
};

Element multiply(const Element& a, const Element& b);
/// [a, b] = ab - ba
Element commutator(const Element& a, const Element& b);
/// (a, b, c) = (ab)c - a(bc)
Element associator(const Element& a, const Element& b, const Element& c);
/// a(b,c,d) + (a,b,c)d - (ab,c,d) + (a,bc,d) - (a,b,cd); vanishes in every algebra.
Element teichmuller_residual(const Element& a, const Element& b, const Element& c, const Element& d);

/// C_ij^p == C_ji^p for all i, j, p.
bool is_commutative(const Algebra& alg);
/// sum_p C_ij^p C_pk^q == sum_p C_ip^q C_jk^p for all i, j, k, q.
bool is_associative(const Algebra& alg);
/// Same property evaluated as vanishing associators on all basis triples.
bool basis_associators_vanish(const AlgebraPtr& alg);

/// Reduced row-echelon basis of the nucleus {a : (a,x,y) = (x,a,y) = (x,y,a) = 0}.
std::vector<Element> nucleus_basis(const AlgebraPtr& alg);
/// Reduced row-echelon basis of the center: nucleus elements commuting with every e_j.
std::vector<Element> center_basis(const AlgebraPtr& alg);

/// Solves e e_j = e_j e = e_j for all j. Independent of the declared unit.
std::optional<Element> find_unit(const AlgebraPtr& alg);

/// Coordinate matrix of x -> a x: L(a)^k_j = C_ij^k a^i.
Matrix left_shift_matrix(const Element& a);
/// Coordinate matrix of x -> x a: R(a)^k_i = C_ij^k a^j.
Matrix right_shift_matrix(const Element& a);

/// Column j is the coordinate vector of fn(e_j); `fn` must be linear.
Matrix matrix_of(const AlgebraPtr& source, const std::function<Element(const Element&)>& fn);

} // namespace fdalg
