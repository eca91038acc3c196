#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "drazinkit/rational.hpp"

namespace drazinkit {

/**
 * Coefficient ring of a matrix: Q, Z, GF(p) or Z/n.
 *
 * Scalars of every kind are carried as Rational. For the finite kinds the
 * canonical scalar is the integer residue in [0, modulus); for Z it is an
 * integer. `reduce` is the single place that enforces this.
 *
 * Moduli are capped at 2^31 so residue products fit a 64-bit word.
 */
class RingSpec {
public:
    enum class Kind { Rationals, Integers, PrimeField, ResidueRing };

    static RingSpec rationals() { return RingSpec(Kind::Rationals, 0); }
    static RingSpec integers() { return RingSpec(Kind::Integers, 0); }
    /// Throws InvalidRing unless p is prime.
    static RingSpec prime_field(std::int64_t p);
    /// Throws InvalidRing unless n >= 2.
    static RingSpec residue_ring(std::int64_t n);

    Kind kind() const noexcept { return kind_; }
    /// p for GF(p), n for Z/n, 0 otherwise.
    std::int64_t modulus() const noexcept { return modulus_; }

    bool is_field() const noexcept { return kind_ == Kind::Rationals || kind_ == Kind::PrimeField; }
    bool is_finite() const noexcept { return kind_ == Kind::PrimeField || kind_ == Kind::ResidueRing; }

    /// Product of the distinct primes dividing n, for Z/n. rad(Z/n) = m·Z/n.
    std::optional<std::int64_t> radical_modulus() const;
    /// Largest e with p^e | n over primes p, for Z/n; 1 for GF(p).
    int max_prime_exponent() const noexcept { return max_exponent_; }
    /// Number of scalars, for finite rings.
    std::optional<std::int64_t> cardinality() const;

    /// Upper bound on the nilpotency degree of an n x n nilpotent matrix.
    std::size_t nilpotency_bound(std::size_t n) const noexcept;

    /// Canonical scalar for this ring. Finite kinds and Z reject non-integers.
    Rational reduce(const Rational& x) const;
    /// The scalar with canonical index k in enumeration order (finite rings).
    Rational element(std::int64_t k) const { return Rational(k); }

    Rational add(const Rational& x, const Rational& y) const;
    Rational sub(const Rational& x, const Rational& y) const;
    Rational mul(const Rational& x, const Rational& y) const;
    Rational neg(const Rational& x) const;

    bool is_unit(const Rational& x) const;
    /// Multiplicative inverse of a unit; throws NotInvertible otherwise.
    Rational inverse(const Rational& x) const;

    /// "Q", "Z", "GF(p)" or "Z/n".
    std::string name() const;

    friend bool operator==(const RingSpec&, const RingSpec&) = default;

private:
    RingSpec(Kind kind, std::int64_t modulus);

    Kind kind_;
    std::int64_t modulus_;
    std::int64_t radical_ = 0;
    int max_exponent_ = 1;
};

} // namespace drazinkit
