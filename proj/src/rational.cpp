#include "drazinkit/rational.hpp"

#include <cctype>
#include <limits>
#include <ostream>

#include "drazinkit/errors.hpp"

namespace drazinkit {

namespace {

using i128 = __int128;
using u128 = unsigned __int128;

// INT64_MIN is excluded so negation never overflows on the inline path.
constexpr std::int64_t kInlineMax = std::numeric_limits<std::int64_t>::max();

bool fits_inline(i128 v) { return v <= kInlineMax && v >= -kInlineMax; }

u128 gcd128(u128 a, u128 b) {
    if (a == 0) return b;
    if (b == 0) return a;
    int shift = 0;
    while (((a | b) & 1) == 0) {
        a >>= 1;
        b >>= 1;
        ++shift;
    }
    while ((a & 1) == 0) a >>= 1;
    do {
        while ((b & 1) == 0) b >>= 1;
        if (a > b) std::swap(a, b);
        b -= a;
    } while (b != 0);
    return a << shift;
}

BigInt to_mpz(i128 v) {
    const bool negative = v < 0;
    u128 mag = negative ? -static_cast<u128>(v) : static_cast<u128>(v);
    BigInt hi(static_cast<unsigned long>(static_cast<std::uint64_t>(mag >> 64)));
    BigInt lo(static_cast<unsigned long>(static_cast<std::uint64_t>(mag)));
    BigInt out = (hi << 64) + lo;
    return negative ? BigInt(-out) : out;
}

std::optional<std::int64_t> mpz_to_int64(const BigInt& v) {
    if (!v.fits_slong_p()) return std::nullopt;
    const long x = v.get_si();
    if (x == std::numeric_limits<long>::min()) return std::nullopt;
    return static_cast<std::int64_t>(x);
}

} // namespace

Rational::Rational(std::int64_t value) {
    if (value == std::numeric_limits<std::int64_t>::min()) {
        *this = from_mpq(mpq_class(BigInt(static_cast<long>(value))));
        return;
    }
    num_ = value;
}

Rational::Rational(std::int64_t num, std::int64_t den) {
    if (den == 0) fail(ErrorCode::DivisionByZero, "rational with zero denominator");
    *this = from_wide(num, den);
}

Rational::Rational(const BigInt& num, const BigInt& den) {
    if (den == 0) fail(ErrorCode::DivisionByZero, "rational with zero denominator");
    mpq_class q(num, den);
    q.canonicalize();
    *this = from_mpq(std::move(q));
}

Rational::Rational(const BigInt& value) : Rational(value, BigInt(1)) {}

Rational::Rational(const Rational& other)
    : num_(other.num_), den_(other.den_),
      big_(other.big_ ? std::make_unique<mpq_class>(*other.big_) : nullptr) {}

Rational& Rational::operator=(const Rational& other) {
    if (this != &other) {
        num_ = other.num_;
        den_ = other.den_;
        big_ = other.big_ ? std::make_unique<mpq_class>(*other.big_) : nullptr;
    }
    return *this;
}

Rational Rational::from_wide(i128 num, i128 den) {
    if (den < 0) {
        num = -num;
        den = -den;
    }
    if (num == 0) return Rational();
    const u128 g = gcd128(num < 0 ? -static_cast<u128>(num) : static_cast<u128>(num),
                          static_cast<u128>(den));
    num /= static_cast<i128>(g);
    den /= static_cast<i128>(g);
    if (fits_inline(num) && fits_inline(den)) {
        Rational r;
        r.num_ = static_cast<std::int64_t>(num);
        r.den_ = static_cast<std::int64_t>(den);
        return r;
    }
    Rational r;
    r.big_ = std::make_unique<mpq_class>(to_mpz(num), to_mpz(den));
    return r;
}

Rational Rational::from_mpq(mpq_class value) {
    auto n = mpz_to_int64(value.get_num());
    auto d = mpz_to_int64(value.get_den());
    Rational r;
    if (n && d) {
        r.num_ = *n;
        r.den_ = *d;
    } else {
        r.big_ = std::make_unique<mpq_class>(std::move(value));
    }
    return r;
}

mpq_class Rational::to_mpq() const {
    if (big_) return *big_;
    return mpq_class(BigInt(static_cast<long>(num_)), BigInt(static_cast<long>(den_)));
}

Rational Rational::parse(std::string_view text) {
    auto bad = [&]() -> Rational {
        fail(ErrorCode::ParseError, "malformed rational '" + std::string(text) + "'");
    };
    auto is_int = [](std::string_view s) {
        std::size_t i = 0;
        if (!s.empty() && (s[0] == '-' || s[0] == '+')) i = 1;
        if (i == s.size()) return false;
        for (; i < s.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
        return true;
    };
    auto to_big = [](std::string_view s) {
        if (!s.empty() && s[0] == '+') s.remove_prefix(1);
        return BigInt(std::string(s), 10);
    };
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        if (!is_int(text)) return bad();
        return Rational(to_big(text));
    }
    const auto num = text.substr(0, slash);
    const auto den = text.substr(slash + 1);
    if (!is_int(num) || !is_int(den) || den[0] == '-' || den[0] == '+') return bad();
    BigInt d = to_big(den);
    if (d == 0) fail(ErrorCode::ParseError, "zero denominator in '" + std::string(text) + "'");
    return Rational(to_big(num), d);
}

BigInt Rational::numerator() const {
    return big_ ? BigInt(big_->get_num()) : BigInt(static_cast<long>(num_));
}

BigInt Rational::denominator() const {
    return big_ ? BigInt(big_->get_den()) : BigInt(static_cast<long>(den_));
}

bool Rational::is_integer() const noexcept {
    return big_ ? big_->get_den() == 1 : den_ == 1;
}

int Rational::sign() const noexcept {
    if (big_) return sgn(*big_);
    return (num_ > 0) - (num_ < 0);
}

std::optional<std::int64_t> Rational::to_int64() const noexcept {
    if (big_ || den_ != 1) return std::nullopt;
    return num_;
}

std::int64_t Rational::mod(std::int64_t modulus) const {
    if (!is_integer()) fail(ErrorCode::ParseError, "residue of non-integer " + to_string());
    if (!big_) {
        std::int64_t r = num_ % modulus;
        return r < 0 ? r + modulus : r;
    }
    BigInt r;
    mpz_fdiv_r(r.get_mpz_t(), big_->get_num_mpz_t(), BigInt(static_cast<long>(modulus)).get_mpz_t());
    return static_cast<std::int64_t>(r.get_si());
}

Rational Rational::abs() const { return sign() < 0 ? -*this : *this; }

Rational Rational::reciprocal() const {
    if (is_zero()) fail(ErrorCode::DivisionByZero, "reciprocal of zero");
    return Rational(1) / *this;
}

std::string Rational::to_string() const {
    if (big_) {
        if (big_->get_den() == 1) return big_->get_num().get_str();
        return big_->get_num().get_str() + "/" + big_->get_den().get_str();
    }
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational operator+(const Rational& x, const Rational& y) {
    if (!x.big_ && !y.big_) {
        if (x.den_ == 1 && y.den_ == 1) return Rational::from_wide(i128(x.num_) + y.num_, 1);
        return Rational::from_wide(i128(x.num_) * y.den_ + i128(y.num_) * x.den_,
                                   i128(x.den_) * y.den_);
    }
    return Rational::from_mpq(x.to_mpq() + y.to_mpq());
}

Rational operator-(const Rational& x, const Rational& y) {
    if (!x.big_ && !y.big_) {
        if (x.den_ == 1 && y.den_ == 1) return Rational::from_wide(i128(x.num_) - y.num_, 1);
        return Rational::from_wide(i128(x.num_) * y.den_ - i128(y.num_) * x.den_,
                                   i128(x.den_) * y.den_);
    }
    return Rational::from_mpq(x.to_mpq() - y.to_mpq());
}

Rational operator*(const Rational& x, const Rational& y) {
    if (!x.big_ && !y.big_)
        return Rational::from_wide(i128(x.num_) * y.num_, i128(x.den_) * y.den_);
    return Rational::from_mpq(x.to_mpq() * y.to_mpq());
}

Rational operator/(const Rational& x, const Rational& y) {
    if (y.is_zero()) fail(ErrorCode::DivisionByZero, "division of " + x.to_string() + " by zero");
    if (!x.big_ && !y.big_)
        return Rational::from_wide(i128(x.num_) * y.den_, i128(x.den_) * y.num_);
    return Rational::from_mpq(x.to_mpq() / y.to_mpq());
}

Rational Rational::operator-() const {
    if (!big_) {
        Rational r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }
    return from_mpq(-*big_);
}

bool operator==(const Rational& x, const Rational& y) noexcept {
    if (!x.big_ && !y.big_) return x.num_ == y.num_ && x.den_ == y.den_;
    if (x.big_ && y.big_) return *x.big_ == *y.big_;
    return false;
}

std::strong_ordering operator<=>(const Rational& x, const Rational& y) {
    if (!x.big_ && !y.big_) {
        const i128 lhs = i128(x.num_) * y.den_;
        const i128 rhs = i128(y.num_) * x.den_;
        return lhs <=> rhs;
    }
    const int c = cmp(x.to_mpq(), y.to_mpq());
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

std::ostream& operator<<(std::ostream& os, const Rational& x) { return os << x.to_string(); }

} // namespace drazinkit
