#ifndef IDEALFORGE_FIELD_HPP
#define IDEALFORGE_FIELD_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

#include <boost/multiprecision/cpp_int.hpp>

#include "idealforge/errors.hpp"

namespace idealforge {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

enum class FieldKind { Rationals, PrimeField };

/// Runtime description of the coefficient field: the rationals Q or a prime
/// field F_p. Moduli are checked for primality by trial division and must
/// stay below 2^31 so that products of residues fit in 64 bits.
class FieldSpec {
public:
    static FieldSpec rationals() { return FieldSpec(FieldKind::Rationals, 0); }
    static FieldSpec prime(std::uint64_t modulus);

    /// Parses a field tag: "Q" for the rationals, "Fp" (e.g. "F2", "F13")
    /// for a prime field.
    static FieldSpec parse(std::string_view tag);

    FieldKind kind() const noexcept { return kind_; }
    bool is_prime_field() const noexcept { return kind_ == FieldKind::PrimeField; }
    bool is_rationals() const noexcept { return kind_ == FieldKind::Rationals; }

    std::uint64_t modulus() const {
        if (!is_prime_field())
            throw Error(ErrorCode::InvalidArgument, "modulus() on the rationals");
        return modulus_;
    }

    std::string tag() const {
        return is_prime_field() ? "F" + std::to_string(modulus_) : std::string("Q");
    }

    friend bool operator==(const FieldSpec& a, const FieldSpec& b) noexcept {
        return a.kind_ == b.kind_ && a.modulus_ == b.modulus_;
    }
    friend bool operator!=(const FieldSpec& a, const FieldSpec& b) noexcept {
        return !(a == b);
    }

private:
    FieldSpec(FieldKind kind, std::uint64_t modulus) : kind_(kind), modulus_(modulus) {}

    FieldKind kind_;
    std::uint64_t modulus_;  // meaningful only for PrimeField
};

/// Exact field element, always kept in canonical form: a reduced fraction
/// over Q, the least nonnegative residue over F_p. Arithmetic between
/// scalars of different fields throws FieldMismatch.
class Scalar {
public:
    static Scalar zero(const FieldSpec& field);
    static Scalar one(const FieldSpec& field);

    /// Embeds a machine integer (reduced mod p over a prime field).
    static Scalar of(const FieldSpec& field, long long value);
    static Scalar of(const FieldSpec& field, const BigInt& value);

    /// Wraps an exact rational; the field is Q.
    static Scalar from_rational(Rational value);

    /// Parses "-3", "12", or (over Q) "3/4".
    static Scalar parse(const FieldSpec& field, std::string_view text);

    const FieldSpec& field() const noexcept { return field_; }
    bool is_zero() const;
    bool is_one() const;

    /// Least nonnegative residue; prime fields only.
    std::uint64_t residue() const;
    /// Reduced fraction; rationals only.
    const Rational& rational() const;

    Scalar operator+(const Scalar& rhs) const;
    Scalar operator-(const Scalar& rhs) const;
    Scalar operator*(const Scalar& rhs) const;
    Scalar operator/(const Scalar& rhs) const;
    Scalar operator-() const;
    Scalar inverse() const;

    Scalar& operator+=(const Scalar& rhs) { return *this = *this + rhs; }
    Scalar& operator-=(const Scalar& rhs) { return *this = *this - rhs; }
    Scalar& operator*=(const Scalar& rhs) { return *this = *this * rhs; }

    bool operator==(const Scalar& rhs) const;
    bool operator!=(const Scalar& rhs) const { return !(*this == rhs); }

    /// Exact decimal form: residue over F_p, "num" or "num/den" over Q.
    std::string str() const;

private:
    Scalar(FieldSpec field, std::uint64_t residue) : field_(field), value_(residue) {}
    Scalar(FieldSpec field, Rational value) : field_(field), value_(std::move(value)) {}

    void require_same_field(const Scalar& rhs) const {
        if (field_ != rhs.field_)
            throw Error(ErrorCode::FieldMismatch,
                        field_.tag() + " vs " + rhs.field_.tag());
    }

    FieldSpec field_;
    std::variant<std::uint64_t, Rational> value_;
};

}  // namespace idealforge

#endif  // IDEALFORGE_FIELD_HPP
