#include "idealforge/field.hpp"

#include <charconv>

namespace idealforge {

namespace {

constexpr std::uint64_t kMaxModulus = (1ull << 31) - 1;

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

std::uint64_t mod_reduce(const BigInt& v, std::uint64_t p) {
    BigInt r = v % p;
    if (r < 0) r += p;
    return static_cast<std::uint64_t>(r);
}

// Extended Euclid; p prime, 0 < a < p.
std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t p) {
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = static_cast<std::int64_t>(p), new_r = static_cast<std::int64_t>(a);
    while (new_r != 0) {
        std::int64_t q = r / new_r;
        std::int64_t tmp = t - q * new_t;
        t = new_t;
        new_t = tmp;
        tmp = r - q * new_r;
        r = new_r;
        new_r = tmp;
    }
    if (t < 0) t += static_cast<std::int64_t>(p);
    return static_cast<std::uint64_t>(t);
}

}  // namespace

FieldSpec FieldSpec::prime(std::uint64_t modulus) {
    if (modulus > kMaxModulus)
        throw Error(ErrorCode::FieldTooLarge,
                    "modulus " + std::to_string(modulus) + " exceeds 2^31-1");
    if (!is_prime_u64(modulus))
        throw Error(ErrorCode::NotPrime, std::to_string(modulus) + " is not prime");
    return FieldSpec(FieldKind::PrimeField, modulus);
}

FieldSpec FieldSpec::parse(std::string_view tag) {
    if (tag == "Q") return rationals();
    if (tag.size() >= 2 && tag.front() == 'F') {
        std::uint64_t p = 0;
        auto digits = tag.substr(1);
        auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
        if (ec == std::errc() && ptr == digits.data() + digits.size())
            return prime(p);
    }
    throw Error(ErrorCode::InvalidArgument,
                "unrecognized field tag '" + std::string(tag) + "' (expected Q or Fp)");
}

Scalar Scalar::zero(const FieldSpec& field) {
    return field.is_prime_field() ? Scalar(field, std::uint64_t{0})
                                  : Scalar(field, Rational(0));
}

Scalar Scalar::one(const FieldSpec& field) {
    if (field.is_prime_field())
        return Scalar(field, std::uint64_t{1} % field.modulus());
    return Scalar(field, Rational(1));
}

Scalar Scalar::of(const FieldSpec& field, long long value) {
    return of(field, BigInt(value));
}

Scalar Scalar::of(const FieldSpec& field, const BigInt& value) {
    if (field.is_prime_field())
        return Scalar(field, mod_reduce(value, field.modulus()));
    return Scalar(field, Rational(value));
}

Scalar Scalar::from_rational(Rational value) {
    return Scalar(FieldSpec::rationals(), std::move(value));
}

Scalar Scalar::parse(const FieldSpec& field, std::string_view text) {
    std::string s(text);
    if (s.empty())
        throw Error(ErrorCode::InvalidArgument, "empty scalar literal");
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) {
            return of(field, BigInt(s));
        }
        BigInt num(s.substr(0, slash));
        BigInt den(s.substr(slash + 1));
        if (den == 0)
            throw Error(ErrorCode::DivisionByZero, "zero denominator in '" + s + "'");
        if (field.is_prime_field())
            return of(field, num) / of(field, den);
        return from_rational(Rational(num, den));
    } catch (const Error&) {
        throw;
    } catch (const std::exception&) {
        throw Error(ErrorCode::InvalidArgument, "bad scalar literal '" + s + "'");
    }
}

bool Scalar::is_zero() const {
    if (field_.is_prime_field()) return std::get<std::uint64_t>(value_) == 0;
    return std::get<Rational>(value_) == 0;
}

bool Scalar::is_one() const {
    if (field_.is_prime_field())
        return std::get<std::uint64_t>(value_) == 1 % field_.modulus();
    return std::get<Rational>(value_) == 1;
}

std::uint64_t Scalar::residue() const {
    if (!field_.is_prime_field())
        throw Error(ErrorCode::InvalidArgument, "residue() on a rational scalar");
    return std::get<std::uint64_t>(value_);
}

const Rational& Scalar::rational() const {
    if (!field_.is_rationals())
        throw Error(ErrorCode::InvalidArgument, "rational() on a prime-field scalar");
    return std::get<Rational>(value_);
}

Scalar Scalar::operator+(const Scalar& rhs) const {
    require_same_field(rhs);
    if (field_.is_prime_field()) {
        std::uint64_t p = field_.modulus();
        return Scalar(field_, (residue() + rhs.residue()) % p);
    }
    return Scalar(field_, rational() + rhs.rational());
}

Scalar Scalar::operator-(const Scalar& rhs) const {
    require_same_field(rhs);
    if (field_.is_prime_field()) {
        std::uint64_t p = field_.modulus();
        return Scalar(field_, (residue() + p - rhs.residue()) % p);
    }
    return Scalar(field_, rational() - rhs.rational());
}

Scalar Scalar::operator*(const Scalar& rhs) const {
    require_same_field(rhs);
    if (field_.is_prime_field()) {
        // residues < 2^31, so the product fits in 64 bits
        return Scalar(field_, (residue() * rhs.residue()) % field_.modulus());
    }
    return Scalar(field_, rational() * rhs.rational());
}

Scalar Scalar::operator/(const Scalar& rhs) const {
    return *this * rhs.inverse();
}

Scalar Scalar::operator-() const {
    if (field_.is_prime_field()) {
        std::uint64_t p = field_.modulus();
        return Scalar(field_, (p - residue()) % p);
    }
    return Scalar(field_, -rational());
}

Scalar Scalar::inverse() const {
    if (is_zero())
        throw Error(ErrorCode::DivisionByZero, "inverse of zero in " + field_.tag());
    if (field_.is_prime_field())
        return Scalar(field_, mod_inverse(residue(), field_.modulus()));
    return Scalar(field_, Rational(1) / rational());
}

bool Scalar::operator==(const Scalar& rhs) const {
    if (field_ != rhs.field_) return false;
    return value_ == rhs.value_;
}

std::string Scalar::str() const {
    if (field_.is_prime_field()) return std::to_string(residue());
    const Rational& q = rational();
    std::string s = numerator(q).str();
    if (denominator(q) != 1) s += "/" + denominator(q).str();
    return s;
}

}  // namespace idealforge
