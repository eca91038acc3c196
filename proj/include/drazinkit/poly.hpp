#pragma once

#include <string>
#include <utility>
#include <vector>

#include "drazinkit/rational.hpp"

namespace drazinkit {

/// Univariate polynomial over Q, coefficients lowest degree first.
/// The zero polynomial is the empty coefficient vector; trailing zeros are
/// always trimmed so equality is structural.
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<Rational> coefficients);

    static Poly constant(const Rational& c);
    /// c * x^k
    static Poly monomial(const Rational& c, std::size_t k);
    /// x - root
    static Poly linear_root(const Rational& root);

    bool is_zero() const noexcept { return coeffs_.empty(); }
    /// Degree of the zero polynomial is -1.
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<Rational>& coefficients() const noexcept { return coeffs_; }
    Rational coefficient(std::size_t k) const;
    Rational leading_coefficient() const;

    Poly monic() const;
    Poly derivative() const;
    Rational evaluate(const Rational& x) const;

    /// Largest k with x^k dividing this polynomial (0 for the zero polynomial).
    std::size_t zero_root_multiplicity() const;
    /// Divides out x^k.
    Poly shift_down(std::size_t k) const;

    friend Poly operator+(const Poly& p, const Poly& q);
    friend Poly operator-(const Poly& p, const Poly& q);
    friend Poly operator*(const Poly& p, const Poly& q);
    Poly operator-() const;
    friend bool operator==(const Poly& p, const Poly& q) = default;

    /// Human-readable form in the variable `var`, highest degree first.
    std::string to_string(const std::string& var = "x") const;

private:
    void trim();

    std::vector<Rational> coeffs_;
};

/// Euclidean division; throws DivisionByZero on a zero divisor.
std::pair<Poly, Poly> divmod(const Poly& dividend, const Poly& divisor);

/// Monic gcd via monic Euclid. gcd(p, 0) = monic(p), gcd(0, 0) = 0.
Poly poly_gcd(const Poly& p, const Poly& q);

/// Monic p / gcd(p, p'): each distinct root of p with multiplicity one.
/// Throws ZeroPolynomial on p = 0.
Poly squarefree_part(const Poly& p);

} // namespace drazinkit
