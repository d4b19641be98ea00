#include "fdalg/scalar.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

#include "fdalg/error.hpp"

namespace fdalg {

namespace {

constexpr std::uint64_t max_modulus = std::uint64_t{1} << 32;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
    std::uint64_t result = 1 % p;
    while (exp > 0) {
        if (exp & 1) result = mul_mod(result, base, p);
        base = mul_mod(base, base, p);
        exp >>= 1;
    }
    return result;
}

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

} // namespace

bool is_prime_number(std::uint64_t n) noexcept {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

Field Field::prime(std::uint64_t p) {
    if (p >= max_modulus)
        throw std::invalid_argument("prime modulus " + std::to_string(p) + " exceeds 2^32");
    if (!is_prime_number(p))
        throw std::invalid_argument("modulus " + std::to_string(p) + " is not prime");
    return Field(p);
}

Field Field::parse(std::string_view text) {
    if (text == "Q") return rational();
    constexpr std::string_view prefix = "Fp:";
    if (text.substr(0, prefix.size()) == prefix) {
        auto digits = text.substr(prefix.size());
        if (!all_digits(digits) || digits.size() > 19)
            throw std::invalid_argument("bad field modulus '" + std::string(digits) + "'");
        return prime(std::stoull(std::string(digits)));
    }
    throw std::invalid_argument("unknown field '" + std::string(text) + "' (expected Q or Fp:<prime>)");
}

std::string Field::name() const {
    return is_rational() ? "Q" : "Fp:" + std::to_string(modulus_);
}

Scalar::Scalar(const Field& field, long value) : field_(field) {
    if (field.is_rational()) {
        value_ = mpq_class(value);
    } else {
        auto p = static_cast<long long>(field.modulus());
        long long r = static_cast<long long>(value) % p;
        if (r < 0) r += p;
        value_ = static_cast<std::uint64_t>(r);
    }
}

Scalar::Scalar(const mpq_class& q) : field_(Field::rational()), value_(q) {
    std::get<mpq_class>(value_).canonicalize();
}

Scalar Scalar::rational(long num, long den) {
    return rational(mpz_class(num), mpz_class(den));
}

Scalar Scalar::rational(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw DivisionByZero();
    mpq_class q(num, den);
    return Scalar(q);
}

Scalar Scalar::parse(std::string_view literal, const Field& field) {
    std::string_view body = literal;
    bool negative = false;
    if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
        negative = body.front() == '-';
        body.remove_prefix(1);
    }
    auto slash = body.find('/');
    std::string_view num = body.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view{} : body.substr(slash + 1);

    if (!all_digits(num))
        throw std::invalid_argument("malformed literal '" + std::string(literal) + "'");
    if (slash != std::string_view::npos) {
        if (!all_digits(den))
            throw std::invalid_argument("malformed denominator in '" + std::string(literal) + "'");
        if (field.is_prime())
            throw std::invalid_argument("prime-field literal must be an integer: '" + std::string(literal) + "'");
    }

    mpz_class n(std::string(num), 10);
    if (negative) n = -n;
    if (field.is_rational()) {
        mpz_class d = den.empty() ? mpz_class(1) : mpz_class(std::string(den), 10);
        if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(literal) + "'");
        return rational(n, d);
    }
    mpz_class p(static_cast<unsigned long>(field.modulus()));
    mpz_class r;
    mpz_fdiv_r(r.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t());
    Scalar s = zero(field);
    s.value_ = static_cast<std::uint64_t>(r.get_ui());
    return s;
}

bool Scalar::is_zero() const noexcept {
    if (auto* q = std::get_if<mpq_class>(&value_)) return sgn(*q) == 0;
    return std::get<std::uint64_t>(value_) == 0;
}

bool Scalar::is_one() const noexcept {
    if (auto* q = std::get_if<mpq_class>(&value_)) return *q == 1;
    return std::get<std::uint64_t>(value_) == 1;
}

const mpq_class& Scalar::as_rational() const {
    if (!field_.is_rational()) throw FieldMismatch("scalar is not rational");
    return std::get<mpq_class>(value_);
}

std::uint64_t Scalar::residue() const {
    if (!field_.is_prime()) throw FieldMismatch("scalar is not a prime-field residue");
    return std::get<std::uint64_t>(value_);
}

void Scalar::require_same_field(const Scalar& other) const {
    if (field_ != other.field_)
        throw FieldMismatch("cannot combine " + field_.name() + " and " + other.field_.name());
}

Scalar Scalar::operator-() const {
    Scalar r = *this;
    if (auto* q = std::get_if<mpq_class>(&r.value_)) {
        *q = -*q;
    } else {
        auto& v = std::get<std::uint64_t>(r.value_);
        if (v != 0) v = field_.modulus() - v;
    }
    return r;
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw DivisionByZero();
    Scalar r = *this;
    if (auto* q = std::get_if<mpq_class>(&r.value_)) {
        *q = 1 / *q;
    } else {
        auto& v = std::get<std::uint64_t>(r.value_);
        v = pow_mod(v, field_.modulus() - 2, field_.modulus());
    }
    return r;
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
    require_same_field(rhs);
    if (auto* q = std::get_if<mpq_class>(&value_)) {
        *q += std::get<mpq_class>(rhs.value_);
    } else {
        auto& v = std::get<std::uint64_t>(value_);
        v = (v + std::get<std::uint64_t>(rhs.value_)) % field_.modulus();
    }
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) {
    require_same_field(rhs);
    if (auto* q = std::get_if<mpq_class>(&value_)) {
        *q -= std::get<mpq_class>(rhs.value_);
    } else {
        auto p = field_.modulus();
        auto& v = std::get<std::uint64_t>(value_);
        v = (v + p - std::get<std::uint64_t>(rhs.value_)) % p;
    }
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& rhs) {
    require_same_field(rhs);
    if (auto* q = std::get_if<mpq_class>(&value_)) {
        *q *= std::get<mpq_class>(rhs.value_);
    } else {
        auto& v = std::get<std::uint64_t>(value_);
        v = mul_mod(v, std::get<std::uint64_t>(rhs.value_), field_.modulus());
    }
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& rhs) {
    require_same_field(rhs);
    return *this *= rhs.inverse();
}

bool operator==(const Scalar& a, const Scalar& b) {
    return a.field_ == b.field_ && a.value_ == b.value_;
}

std::string Scalar::to_string() const {
    if (auto* q = std::get_if<mpq_class>(&value_)) return q->get_str();
    return std::to_string(std::get<std::uint64_t>(value_));
}

Scalar arith(ArithOp op, const Scalar& a, const Scalar& b) {
    switch (op) {
    case ArithOp::add: return a + b;
    case ArithOp::sub: return a - b;
    case ArithOp::mul: return a * b;
    case ArithOp::div: return a / b;
    case ArithOp::neg: return -a;
    case ArithOp::inv: return a.inverse();
    }
    throw std::invalid_argument("unknown arithmetic op");
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) {
    return os << s.to_string();
}

} // namespace fdalg
