#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

#include "fdalg/algebra.hpp"

namespace fdalg {

/// Tensor of A_1 (x) ... (x) A_m stored by standard components a^{i1...im}
/// relative to the basis e_{i1} (x) ... (x) e_{im}.
///
/// Components are flattened row-major with slot 1 most significant; the same
/// mixed-radix encoding indexes the basis of the tensor-product algebra.
class Tensor {
public:
    Tensor(std::vector<AlgebraPtr> factors, Vec components);

    static Tensor zero(std::vector<AlgebraPtr> factors);
    static Tensor basis(std::vector<AlgebraPtr> factors, std::span<const std::size_t> index);
    static Tensor basis(std::vector<AlgebraPtr> factors, std::initializer_list<std::size_t> index) {
        return basis(std::move(factors), std::span<const std::size_t>(index.begin(), index.size()));
    }
    /// 1 (x) ... (x) 1; every factor must declare a unit.
    static Tensor unit(std::vector<AlgebraPtr> factors);

    std::size_t order() const noexcept { return factors_.size(); }
    const std::vector<AlgebraPtr>& factors() const noexcept { return factors_; }
    const Field& field() const noexcept { return factors_.front()->field(); }
    const Vec& components() const noexcept { return components_; }
    std::size_t size() const noexcept { return components_.size(); }

    std::size_t flat_index(std::span<const std::size_t> index) const;
    std::vector<std::size_t> multi_index(std::size_t flat) const;

    const Scalar& operator[](std::size_t flat) const { return components_[flat]; }
    const Scalar& at(std::initializer_list<std::size_t> index) const {
        return components_[flat_index(std::span<const std::size_t>(index.begin(), index.size()))];
    }
    const Scalar& at(std::span<const std::size_t> index) const { return components_[flat_index(index)]; }

    bool is_zero() const;

    friend Tensor operator+(const Tensor& a, const Tensor& b);
    friend Tensor operator-(const Tensor& a, const Tensor& b);
    friend Tensor operator*(const Scalar& s, const Tensor& t);
    friend bool operator==(const Tensor& a, const Tensor& b);

private:
    std::vector<AlgebraPtr> factors_;
    Vec components_;
};

/// Throws FactorMismatch unless both factor lists denote the same algebras.
void require_same_factors(const Tensor& a, const Tensor& b, const char* context);

/// v_1 (x) ... (x) v_m: components v_1^{i1} ... v_m^{im}.
Tensor tensor_of_vectors(std::span<const Element> vectors);
Tensor tensor_of_vectors(std::initializer_list<Element> vectors);

/// Algebra A_1 (x) ... (x) A_n with constants C_1{k1 l1}^{j1} ... C_n{kn ln}^{jn}
/// on the mixed-radix basis. Unital when every factor is.
AlgebraPtr tensor_product_algebra(std::span<const AlgebraPtr> algebras);

/// Reads a tensor as an element of `product` (its flattened components).
Element as_product_element(const Tensor& t, const AlgebraPtr& product);
/// Inverse of as_product_element.
Tensor from_product_element(const Element& e, std::vector<AlgebraPtr> factors);

/// Product in the tensor-product algebra, slotwise on rank-one tensors.
Tensor tensor_multiply(const Tensor& a, const Tensor& b);

/// (c (x) d) o (a (x) b) = (ca) (x) (bd), extended bilinearly. Both operands
/// are order-2 tensors over one associative algebra.
Tensor twisted_multiply(const Tensor& c, const Tensor& a);

/// Matrix of t -> a o t in the flattened component basis.
Matrix twisted_left_regular_matrix(const Tensor& a);

/// b with a o b = b o a = 1 (x) 1, or std::nullopt when a is singular.
/// Requires a unital associative algebra.
std::optional<Tensor> tensor_inverse(const Tensor& a);

} // namespace fdalg
