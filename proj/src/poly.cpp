#include "drazinkit/poly.hpp"

#include <algorithm>
#include <sstream>

#include "drazinkit/errors.hpp"

namespace drazinkit {

Poly::Poly(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

void Poly::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Poly Poly::constant(const Rational& c) { return Poly({c}); }

Poly Poly::monomial(const Rational& c, std::size_t k) {
    std::vector<Rational> v(k + 1);
    v[k] = c;
    return Poly(std::move(v));
}

Poly Poly::linear_root(const Rational& root) { return Poly({-root, Rational(1)}); }

Rational Poly::coefficient(std::size_t k) const {
    return k < coeffs_.size() ? coeffs_[k] : Rational();
}

Rational Poly::leading_coefficient() const {
    return coeffs_.empty() ? Rational() : coeffs_.back();
}

Poly Poly::monic() const {
    if (is_zero()) return {};
    const Rational lc = leading_coefficient();
    if (lc.is_one()) return *this;
    std::vector<Rational> v;
    v.reserve(coeffs_.size());
    for (const auto& c : coeffs_) v.push_back(c / lc);
    return Poly(std::move(v));
}

Poly Poly::derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<Rational> v;
    v.reserve(coeffs_.size() - 1);
    for (std::size_t k = 1; k < coeffs_.size(); ++k)
        v.push_back(coeffs_[k] * Rational(static_cast<std::int64_t>(k)));
    return Poly(std::move(v));
}

Rational Poly::evaluate(const Rational& x) const {
    Rational acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

std::size_t Poly::zero_root_multiplicity() const {
    std::size_t k = 0;
    while (k < coeffs_.size() && coeffs_[k].is_zero()) ++k;
    return is_zero() ? 0 : k;
}

Poly Poly::shift_down(std::size_t k) const {
    if (k >= coeffs_.size()) return {};
    return Poly(std::vector<Rational>(coeffs_.begin() + static_cast<std::ptrdiff_t>(k), coeffs_.end()));
}

Poly operator+(const Poly& p, const Poly& q) {
    std::vector<Rational> v(std::max(p.coeffs_.size(), q.coeffs_.size()));
    for (std::size_t k = 0; k < v.size(); ++k) v[k] = p.coefficient(k) + q.coefficient(k);
    return Poly(std::move(v));
}

Poly operator-(const Poly& p, const Poly& q) {
    std::vector<Rational> v(std::max(p.coeffs_.size(), q.coeffs_.size()));
    for (std::size_t k = 0; k < v.size(); ++k) v[k] = p.coefficient(k) - q.coefficient(k);
    return Poly(std::move(v));
}

Poly operator*(const Poly& p, const Poly& q) {
    if (p.is_zero() || q.is_zero()) return {};
    std::vector<Rational> v(p.coeffs_.size() + q.coeffs_.size() - 1);
    for (std::size_t i = 0; i < p.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < q.coeffs_.size(); ++j) v[i + j] += p.coeffs_[i] * q.coeffs_[j];
    return Poly(std::move(v));
}

Poly Poly::operator-() const {
    std::vector<Rational> v;
    v.reserve(coeffs_.size());
    for (const auto& c : coeffs_) v.push_back(-c);
    return Poly(std::move(v));
}

std::string Poly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        const Rational& c = coeffs_[i];
        if (c.is_zero()) continue;
        const bool negative = c.sign() < 0;
        const Rational mag = c.abs();
        if (first) {
            if (negative) os << "-";
        } else {
            os << (negative ? " - " : " + ");
        }
        first = false;
        if (i == 0 || !mag.is_one()) {
            os << mag;
            if (i > 0) os << "*";
        }
        if (i >= 1) os << var;
        if (i >= 2) os << "^" << i;
    }
    return os.str();
}

std::pair<Poly, Poly> divmod(const Poly& dividend, const Poly& divisor) {
    if (divisor.is_zero()) fail(ErrorCode::DivisionByZero, "polynomial division by zero");
    std::vector<Rational> rem = dividend.coefficients();
    const int dd = divisor.degree();
    if (dividend.degree() < dd) return {Poly(), dividend};
    std::vector<Rational> quot(static_cast<std::size_t>(dividend.degree() - dd + 1));
    const Rational lc = divisor.leading_coefficient();
    const auto& dv = divisor.coefficients();
    for (int k = dividend.degree(); k >= dd; --k) {
        const Rational t = rem[static_cast<std::size_t>(k)] / lc;
        if (t.is_zero()) continue;
        const auto shift = static_cast<std::size_t>(k - dd);
        quot[shift] = t;
        for (std::size_t j = 0; j < dv.size(); ++j) rem[shift + j] -= t * dv[j];
    }
    return {Poly(std::move(quot)), Poly(std::move(rem))};
}

Poly poly_gcd(const Poly& p, const Poly& q) {
    Poly a = p.monic();
    Poly b = q.monic();
    while (!b.is_zero()) {
        Poly r = divmod(a, b).second.monic();
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

Poly squarefree_part(const Poly& p) {
    if (p.is_zero()) fail(ErrorCode::ZeroPolynomial, "squarefree part of the zero polynomial");
    const Poly g = poly_gcd(p, p.derivative());
    return divmod(p, g).first.monic();
}

} // namespace drazinkit
