#include "idealforge/polynomial.hpp"

#include <utility>

namespace idealforge {

Polynomial::Polynomial(FieldSpec field, std::vector<Scalar> coeffs)
    : field_(field), coeffs_(std::move(coeffs)) {
    for (const Scalar& c : coeffs_)
        if (c.field() != field_)
            throw Error(ErrorCode::FieldMismatch,
                        "coefficient field " + c.field().tag() + " vs " + field_.tag());
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Polynomial Polynomial::one(const FieldSpec& field) {
    return constant(Scalar::one(field));
}

Polynomial Polynomial::constant(const Scalar& c) {
    return Polynomial(c.field(), std::vector<Scalar>{c});
}

Polynomial Polynomial::monomial(const FieldSpec& field, std::size_t exponent,
                                const Scalar& coefficient) {
    std::vector<Scalar> cs(exponent + 1, Scalar::zero(field));
    cs[exponent] = coefficient;
    return Polynomial(field, std::move(cs));
}

Polynomial Polynomial::from_ints(const FieldSpec& field,
                                 const std::vector<long long>& ascending) {
    std::vector<Scalar> cs;
    cs.reserve(ascending.size());
    for (long long v : ascending) cs.push_back(Scalar::of(field, v));
    return Polynomial(field, std::move(cs));
}

Polynomial Polynomial::from_strings(const FieldSpec& field,
                                    const std::vector<std::string>& ascending) {
    std::vector<Scalar> cs;
    cs.reserve(ascending.size());
    for (const std::string& v : ascending) cs.push_back(Scalar::parse(field, v));
    return Polynomial(field, std::move(cs));
}

Polynomial Polynomial::from_vector(const FieldSpec& field, std::span<const Scalar> v) {
    return Polynomial(field, std::vector<Scalar>(v.begin(), v.end()));
}

const Scalar& Polynomial::leading() const {
    if (coeffs_.empty())
        throw Error(ErrorCode::ZeroPolynomial, "leading coefficient of 0");
    return coeffs_.back();
}

bool Polynomial::is_monic() const {
    return !coeffs_.empty() && coeffs_.back().is_one();
}

Polynomial Polynomial::monic() const {
    if (coeffs_.empty()) return *this;
    if (is_monic()) return *this;
    return *this * leading().inverse();
}

Scalar Polynomial::operator()(const Scalar& x) const {
    Scalar acc = Scalar::zero(field_);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * x + *it;
    return acc;
}

Polynomial Polynomial::derivative() const {
    if (coeffs_.size() <= 1) return Polynomial(field_);
    std::vector<Scalar> cs;
    cs.reserve(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        cs.push_back(coeffs_[i] * Scalar::of(field_, static_cast<long long>(i)));
    return Polynomial(field_, std::move(cs));
}

Polynomial Polynomial::operator+(const Polynomial& rhs) const {
    require_same_field(rhs);
    std::vector<Scalar> cs(std::max(coeffs_.size(), rhs.coeffs_.size()),
                           Scalar::zero(field_));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) cs[i] += coeffs_[i];
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) cs[i] += rhs.coeffs_[i];
    return Polynomial(field_, std::move(cs));
}

Polynomial Polynomial::operator-(const Polynomial& rhs) const {
    return *this + (-rhs);
}

Polynomial Polynomial::operator*(const Polynomial& rhs) const {
    require_same_field(rhs);
    if (is_zero() || rhs.is_zero()) return Polynomial(field_);
    std::vector<Scalar> cs(coeffs_.size() + rhs.coeffs_.size() - 1,
                           Scalar::zero(field_));
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j)
            cs[i + j] += coeffs_[i] * rhs.coeffs_[j];
    return Polynomial(field_, std::move(cs));
}

Polynomial Polynomial::operator*(const Scalar& c) const {
    if (c.field() != field_)
        throw Error(ErrorCode::FieldMismatch, "scalar field " + c.field().tag());
    std::vector<Scalar> cs;
    cs.reserve(coeffs_.size());
    for (const Scalar& a : coeffs_) cs.push_back(a * c);
    return Polynomial(field_, std::move(cs));
}

Polynomial Polynomial::operator-() const {
    std::vector<Scalar> cs;
    cs.reserve(coeffs_.size());
    for (const Scalar& a : coeffs_) cs.push_back(-a);
    return Polynomial(field_, std::move(cs));
}

std::vector<Scalar> Polynomial::padded_coeffs(std::size_t length) const {
    if (coeffs_.size() > length)
        throw Error(ErrorCode::DegreeTooLarge,
                    "polynomial of degree " + std::to_string(coeffs_.size() - 1) +
                        " does not fit in " + std::to_string(length) + " coefficients");
    std::vector<Scalar> out(coeffs_);
    out.resize(length, Scalar::zero(field_));
    return out;
}

std::string Polynomial::str() const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t idx = coeffs_.size(); idx-- > 0;) {
        const Scalar& c = coeffs_[idx];
        if (c.is_zero()) continue;
        std::string cs = c.str();
        bool negative = !cs.empty() && cs.front() == '-';
        if (out.empty()) {
            if (negative) {
                out += "-";
                cs.erase(cs.begin());
            }
        } else {
            out += negative ? " - " : " + ";
            if (negative) cs.erase(cs.begin());
        }
        bool unit_coeff = (cs == "1") && idx > 0;
        if (!unit_coeff) out += cs;
        if (idx > 0) {
            if (!unit_coeff) out += "*";
            out += "x";
            if (idx > 1) out += "^" + std::to_string(idx);
        }
    }
    return out;
}

PolyDivMod poly_divmod(const Polynomial& a, const Polynomial& b) {
    if (a.field() != b.field())
        throw Error(ErrorCode::FieldMismatch, a.field().tag() + " vs " + b.field().tag());
    if (b.is_zero())
        throw Error(ErrorCode::DivisionByZeroPoly, "division by the zero polynomial");

    const FieldSpec& field = a.field();
    std::size_t db = *b.degree();
    std::vector<Scalar> rem(a.coeffs());
    if (rem.size() < db + 1)
        return {Polynomial(field), a};

    Scalar lead_inv = b.leading().inverse();
    std::vector<Scalar> quot(rem.size() - db, Scalar::zero(field));
    for (std::size_t i = rem.size(); i-- > db;) {
        if (rem[i].is_zero()) continue;
        Scalar q = rem[i] * lead_inv;
        quot[i - db] = q;
        for (std::size_t j = 0; j <= db; ++j)
            rem[i - db + j] -= q * b.coeff(j);
    }
    return {Polynomial(field, std::move(quot)), Polynomial(field, std::move(rem))};
}

Polynomial poly_gcd(const Polynomial& a, const Polynomial& b) {
    if (a.field() != b.field())
        throw Error(ErrorCode::FieldMismatch, a.field().tag() + " vs " + b.field().tag());
    Polynomial u = a, v = b;
    while (!v.is_zero()) {
        Polynomial r = poly_divmod(u, v).remainder;
        u = std::move(v);
        v = std::move(r);
    }
    return u.monic();
}

Polynomial poly_exact_div(const Polynomial& a, const Polynomial& b) {
    auto [q, r] = poly_divmod(a, b);
    if (!r.is_zero())
        throw Error(ErrorCode::InexactDivision,
                    "(" + a.str() + ") is not divisible by (" + b.str() + ")");
    return q;
}

bool poly_squarefree(const Polynomial& p, std::string* diagnostic) {
    if (p.is_zero())
        throw Error(ErrorCode::ZeroPolynomial, "squarefreeness of 0 is undefined");
    Polynomial d = p.derivative();
    if (d.is_zero() && *p.degree() >= 1) {
        if (diagnostic)
            *diagnostic = "formal derivative vanishes over " + p.field().tag() +
                          "; every root is multiple";
        return false;
    }
    Polynomial g = poly_gcd(p, d);
    if (g.degree() == std::size_t{0}) return true;
    if (diagnostic)
        *diagnostic = "gcd with the formal derivative is " + g.str();
    return false;
}

}  // namespace idealforge
