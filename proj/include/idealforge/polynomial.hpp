#ifndef IDEALFORGE_POLYNOMIAL_HPP
#define IDEALFORGE_POLYNOMIAL_HPP

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "idealforge/field.hpp"

namespace idealforge {

/// Dense univariate polynomial with ascending exact coefficients.
///
/// The zero polynomial is the empty coefficient list; otherwise the last
/// coefficient is nonzero. The degree of the zero polynomial is a
/// distinguished "none" value, never -1.
class Polynomial {
public:
    explicit Polynomial(FieldSpec field) : field_(field) {}
    Polynomial(FieldSpec field, std::vector<Scalar> coeffs);

    static Polynomial zero(const FieldSpec& field) { return Polynomial(field); }
    static Polynomial one(const FieldSpec& field);
    static Polynomial constant(const Scalar& c);
    /// x - as a monomial helper: coefficient 1 at the given exponent.
    static Polynomial monomial(const FieldSpec& field, std::size_t exponent,
                               const Scalar& coefficient);
    static Polynomial from_ints(const FieldSpec& field,
                                const std::vector<long long>& ascending);
    static Polynomial from_strings(const FieldSpec& field,
                                   const std::vector<std::string>& ascending);
    /// Interprets a coefficient vector (e.g. the f of an ideal matrix) as a
    /// polynomial, trimming trailing zeros.
    static Polynomial from_vector(const FieldSpec& field, std::span<const Scalar> v);

    const FieldSpec& field() const noexcept { return field_; }
    bool is_zero() const noexcept { return coeffs_.empty(); }

    /// std::nullopt for the zero polynomial.
    std::optional<std::size_t> degree() const {
        if (coeffs_.empty()) return std::nullopt;
        return coeffs_.size() - 1;
    }

    const std::vector<Scalar>& coeffs() const noexcept { return coeffs_; }

    /// Coefficient of x^i; zero beyond the stored length.
    Scalar coeff(std::size_t i) const {
        return i < coeffs_.size() ? coeffs_[i] : Scalar::zero(field_);
    }

    const Scalar& leading() const;
    bool is_monic() const;
    /// Scales a nonzero polynomial to leading coefficient 1; monic(0) = 0.
    Polynomial monic() const;

    Scalar operator()(const Scalar& x) const;
    Polynomial derivative() const;

    Polynomial operator+(const Polynomial& rhs) const;
    Polynomial operator-(const Polynomial& rhs) const;
    Polynomial operator*(const Polynomial& rhs) const;
    Polynomial operator*(const Scalar& c) const;
    Polynomial operator-() const;

    bool operator==(const Polynomial& rhs) const {
        return field_ == rhs.field_ && coeffs_ == rhs.coeffs_;
    }
    bool operator!=(const Polynomial& rhs) const { return !(*this == rhs); }

    /// Coefficients padded with zeros up to the requested length; throws
    /// DegreeTooLarge if the polynomial does not fit.
    std::vector<Scalar> padded_coeffs(std::size_t length) const;

    /// Human-readable form, e.g. "x^3 - 2*x + 5/3".
    std::string str() const;

private:
    void require_same_field(const Polynomial& rhs) const {
        if (field_ != rhs.field_)
            throw Error(ErrorCode::FieldMismatch,
                        field_.tag() + " vs " + rhs.field_.tag());
    }

    FieldSpec field_;
    std::vector<Scalar> coeffs_;  // ascending; empty means zero
};

struct PolyDivMod {
    Polynomial quotient;
    Polynomial remainder;
};

/// Euclidean division: a = quotient * b + remainder with
/// deg(remainder) < deg(b). Throws DivisionByZeroPoly if b = 0.
PolyDivMod poly_divmod(const Polynomial& a, const Polynomial& b);

/// Monic greatest common divisor. Conventions: gcd(0, p) = monic(p),
/// gcd(0, 0) = 0.
Polynomial poly_gcd(const Polynomial& a, const Polynomial& b);

/// Exact quotient a / b; throws InexactDivision when the remainder is
/// nonzero. Used for the multiply-then-divide degree formulas, where a
/// nonzero remainder means a violated hypothesis.
Polynomial poly_exact_div(const Polynomial& a, const Polynomial& b);

/// True iff gcd(p, p') is a nonzero constant. Over F_p a vanishing formal
/// derivative makes every root multiple; the optional diagnostic explains
/// the failure. Throws ZeroPolynomial for p = 0.
bool poly_squarefree(const Polynomial& p, std::string* diagnostic = nullptr);

}  // namespace idealforge

#endif  // IDEALFORGE_POLYNOMIAL_HPP
