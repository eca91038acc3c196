#include "drazinkit/ring.hpp"

#include <numeric>

#include "drazinkit/errors.hpp"

namespace drazinkit {

namespace {

constexpr std::int64_t kMaxModulus = std::int64_t{1} << 31;

bool is_prime(std::int64_t p) {
    if (p < 2) return false;
    for (std::int64_t q = 2; q * q <= p; ++q)
        if (p % q == 0) return false;
    return true;
}

// Extended Euclid: returns (g, s) with s*a = g (mod m).
std::pair<std::int64_t, std::int64_t> ext_gcd(std::int64_t a, std::int64_t m) {
    std::int64_t old_r = a, r = m, old_s = 1, s = 0;
    while (r != 0) {
        const std::int64_t q = old_r / r;
        old_r = std::exchange(r, old_r - q * r);
        old_s = std::exchange(s, old_s - q * s);
    }
    return {old_r, old_s};
}

} // namespace

RingSpec::RingSpec(Kind kind, std::int64_t modulus) : kind_(kind), modulus_(modulus) {
    if (kind == Kind::ResidueRing) {
        std::int64_t rest = modulus;
        radical_ = 1;
        max_exponent_ = 0;
        for (std::int64_t q = 2; q * q <= rest; ++q) {
            if (rest % q != 0) continue;
            radical_ *= q;
            int e = 0;
            while (rest % q == 0) {
                rest /= q;
                ++e;
            }
            max_exponent_ = std::max(max_exponent_, e);
        }
        if (rest > 1) {
            radical_ *= rest;
            max_exponent_ = std::max(max_exponent_, 1);
        }
    }
}

RingSpec RingSpec::prime_field(std::int64_t p) {
    if (p >= kMaxModulus) fail(ErrorCode::InvalidRing, "modulus too large: " + std::to_string(p));
    if (!is_prime(p)) fail(ErrorCode::InvalidRing, "GF(" + std::to_string(p) + "): modulus is not prime");
    return RingSpec(Kind::PrimeField, p);
}

RingSpec RingSpec::residue_ring(std::int64_t n) {
    if (n < 2) fail(ErrorCode::InvalidRing, "Z/" + std::to_string(n) + ": modulus must be at least 2");
    if (n >= kMaxModulus) fail(ErrorCode::InvalidRing, "modulus too large: " + std::to_string(n));
    return RingSpec(Kind::ResidueRing, n);
}

std::optional<std::int64_t> RingSpec::radical_modulus() const {
    if (kind_ != Kind::ResidueRing) return std::nullopt;
    return radical_;
}

std::optional<std::int64_t> RingSpec::cardinality() const {
    if (!is_finite()) return std::nullopt;
    return modulus_;
}

std::size_t RingSpec::nilpotency_bound(std::size_t n) const noexcept {
    if (kind_ == Kind::ResidueRing) return n * static_cast<std::size_t>(max_exponent_);
    return n;
}

Rational RingSpec::reduce(const Rational& x) const {
    switch (kind_) {
    case Kind::Rationals:
        return x;
    case Kind::Integers:
        if (!x.is_integer()) fail(ErrorCode::ParseError, "non-integer " + x.to_string() + " in Z");
        return x;
    case Kind::PrimeField:
    case Kind::ResidueRing:
        return Rational(x.mod(modulus_));
    }
    return x;
}

Rational RingSpec::add(const Rational& x, const Rational& y) const {
    if (is_finite()) {
        const std::int64_t s = *x.to_int64() + *y.to_int64();
        return Rational(s >= modulus_ ? s - modulus_ : s);
    }
    return x + y;
}

Rational RingSpec::sub(const Rational& x, const Rational& y) const {
    if (is_finite()) {
        const std::int64_t s = *x.to_int64() - *y.to_int64();
        return Rational(s < 0 ? s + modulus_ : s);
    }
    return x - y;
}

Rational RingSpec::mul(const Rational& x, const Rational& y) const {
    if (is_finite()) return Rational((*x.to_int64() * *y.to_int64()) % modulus_);
    return x * y;
}

Rational RingSpec::neg(const Rational& x) const {
    if (is_finite()) {
        const std::int64_t v = *x.to_int64();
        return Rational(v == 0 ? 0 : modulus_ - v);
    }
    return -x;
}

bool RingSpec::is_unit(const Rational& x) const {
    switch (kind_) {
    case Kind::Rationals:
        return !x.is_zero();
    case Kind::Integers:
        return x == Rational(1) || x == Rational(-1);
    case Kind::PrimeField:
    case Kind::ResidueRing:
        return std::gcd(x.mod(modulus_), modulus_) == 1;
    }
    return false;
}

Rational RingSpec::inverse(const Rational& x) const {
    if (!is_unit(x)) fail(ErrorCode::NotInvertible, x.to_string() + " is not a unit in " + name());
    switch (kind_) {
    case Kind::Rationals:
        return x.reciprocal();
    case Kind::Integers:
        return x;
    case Kind::PrimeField:
    case Kind::ResidueRing: {
        auto [g, s] = ext_gcd(x.mod(modulus_), modulus_);
        (void)g;
        return Rational(s).mod(modulus_);
    }
    }
    return x;
}

std::string RingSpec::name() const {
    switch (kind_) {
    case Kind::Rationals: return "Q";
    case Kind::Integers: return "Z";
    case Kind::PrimeField: return "GF(" + std::to_string(modulus_) + ")";
    case Kind::ResidueRing: return "Z/" + std::to_string(modulus_);
    }
    return "?";
}

} // namespace drazinkit
