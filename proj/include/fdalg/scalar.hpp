#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

#include <gmpxx.h>

namespace fdalg {

/// Tag of the coefficient field: the rationals or a prime field F_p.
class Field {
public:
    static Field rational() noexcept { return Field(0); }

    /// Throws std::invalid_argument unless `p` is a prime below 2^32
    /// (primality is checked by trial division).
    static Field prime(std::uint64_t p);

    /// Parses "Q" or "Fp:<prime>".
    static Field parse(std::string_view text);

    bool is_rational() const noexcept { return modulus_ == 0; }
    bool is_prime() const noexcept { return modulus_ != 0; }
    std::uint64_t modulus() const noexcept { return modulus_; }
    std::uint64_t characteristic() const noexcept { return modulus_; }

    std::string name() const;

    friend bool operator==(const Field&, const Field&) = default;

private:
    explicit Field(std::uint64_t modulus) noexcept : modulus_(modulus) {}

    std::uint64_t modulus_;
};

bool is_prime_number(std::uint64_t n) noexcept;

/// Exact element of a Field. Rationals are kept canonical (reduced, positive
/// denominator); prime-field residues live in [0, p).
///
/// Mixing fields in one operation throws FieldMismatch.
class Scalar {
public:
    /// Rational zero.
    Scalar() = default;

    Scalar(const Field& field, long value);
    explicit Scalar(const mpq_class& q);

    static Scalar zero(const Field& field) { return Scalar(field, 0); }
    static Scalar one(const Field& field) { return Scalar(field, 1); }
    static Scalar rational(long num, long den);
    static Scalar rational(const mpz_class& num, const mpz_class& den);

    /// Literal syntax: optional sign, digits, optional "/" positive digits.
    /// Prime-field literals must be plain integers and are reduced mod p.
    /// Throws std::invalid_argument on malformed input.
    static Scalar parse(std::string_view literal, const Field& field);

    const Field& field() const noexcept { return field_; }
    bool is_zero() const noexcept;
    bool is_one() const noexcept;

    /// Requires a rational scalar.
    const mpq_class& as_rational() const;
    /// Requires a prime-field scalar.
    std::uint64_t residue() const;

    Scalar operator-() const;
    Scalar inverse() const;

    Scalar& operator+=(const Scalar& rhs);
    Scalar& operator-=(const Scalar& rhs);
    Scalar& operator*=(const Scalar& rhs);
    Scalar& operator/=(const Scalar& rhs);

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

    /// Values in different fields compare unequal.
    friend bool operator==(const Scalar& a, const Scalar& b);

    /// "3", "-1/4"; residues print as their representative in [0, p).
    std::string to_string() const;

private:
    void require_same_field(const Scalar& other) const;

    Field field_ = Field::rational();
    std::variant<mpq_class, std::uint64_t> value_{mpq_class(0)};
};

enum class ArithOp { add, sub, mul, div, neg, inv };

/// Single entry point over the field operations; `b` is ignored for the
/// unary ops.
Scalar arith(ArithOp op, const Scalar& a, const Scalar& b = Scalar());

std::ostream& operator<<(std::ostream& os, const Scalar& s);

} // namespace fdalg
