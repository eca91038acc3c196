#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace drazinkit {

/// Arbitrary-precision integer.
using BigInt = mpz_class;

/**
 * Exact rational number.
 *
 * Stored canonically: denominator positive, gcd(|num|, den) = 1, zero as 0/1.
 * Values whose numerator and denominator both fit in a signed 64-bit word
 * live inline; anything larger spills into a GMP rational. The split is
 * itself canonical (a value is inline iff it fits), so equality never has to
 * compare across representations.
 */
class Rational {
public:
    Rational() noexcept = default;
    Rational(std::int64_t value); // NOLINT(google-explicit-constructor)
    Rational(std::int64_t num, std::int64_t den);
    Rational(const BigInt& num, const BigInt& den);
    explicit Rational(const BigInt& value);

    Rational(const Rational& other);
    Rational(Rational&& other) noexcept = default;
    Rational& operator=(const Rational& other);
    Rational& operator=(Rational&& other) noexcept = default;
    ~Rational() = default;

    /// Parses "p" or "p/q"; the sign belongs to the numerator.
    static Rational parse(std::string_view text);

    BigInt numerator() const;
    BigInt denominator() const;

    bool is_zero() const noexcept { return !big_ && num_ == 0; }
    bool is_one() const noexcept { return !big_ && num_ == 1 && den_ == 1; }
    bool is_integer() const noexcept;
    int sign() const noexcept;

    /// The value as an int64 when it is an integer that fits inline.
    std::optional<std::int64_t> to_int64() const noexcept;

    /// Canonical residue in [0, modulus) of an integer value.
    std::int64_t mod(std::int64_t modulus) const;

    Rational abs() const;
    Rational reciprocal() const;

    std::string to_string() const;

    friend Rational operator+(const Rational& x, const Rational& y);
    friend Rational operator-(const Rational& x, const Rational& y);
    friend Rational operator*(const Rational& x, const Rational& y);
    friend Rational operator/(const Rational& x, const Rational& y);
    Rational operator-() const;

    Rational& operator+=(const Rational& y) { return *this = *this + y; }
    Rational& operator-=(const Rational& y) { return *this = *this - y; }
    Rational& operator*=(const Rational& y) { return *this = *this * y; }
    Rational& operator/=(const Rational& y) { return *this = *this / y; }

    friend bool operator==(const Rational& x, const Rational& y) noexcept;
    friend std::strong_ordering operator<=>(const Rational& x, const Rational& y);

private:
    mpq_class to_mpq() const;
    static Rational from_mpq(mpq_class value);
    static Rational from_wide(__int128 num, __int128 den);

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
    std::unique_ptr<mpq_class> big_;
};

std::ostream& operator<<(std::ostream& os, const Rational& x);

} // namespace drazinkit
