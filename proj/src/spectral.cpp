#include "drazinkit/spectral.hpp"

#include <algorithm>

#include "drazinkit/errors.hpp"

namespace drazinkit {

namespace {

// Rational root candidates come from divisor lists; past this size the
// trial division is not worth attempting.
const BigInt kMaxDivisorSearch("1000000000000");

SquareMatrix as_rational(const SquareMatrix& a) {
    switch (a.ring().kind()) {
    case RingSpec::Kind::Rationals:
        return a;
    case RingSpec::Kind::Integers:
        return a.embed(RingSpec::rationals());
    default:
        fail(ErrorCode::UnsupportedRing, "characteristic polynomials need Q or Z entries, got " + a.ring().name());
    }
}

std::vector<BigInt> positive_divisors(const BigInt& value) {
    BigInt v = abs(value);
    if (v > kMaxDivisorSearch)
        fail(ErrorCode::BudgetExceeded, "rational root search: coefficient " + v.get_str() + " too large");
    const auto x = v.get_ui();
    std::vector<BigInt> small, large;
    for (unsigned long d = 1; d * d <= x; ++d) {
        if (x % d != 0) continue;
        small.emplace_back(d);
        if (d * d != x) large.emplace_back(x / d);
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

} // namespace

Poly char_poly(const SquareMatrix& input) {
    const SquareMatrix a = as_rational(input);
    const std::size_t n = a.dim();
    const RingSpec q = RingSpec::rationals();
    std::vector<Rational> coeffs(n + 1);
    coeffs[n] = Rational(1);
    SquareMatrix m(q, n);
    for (std::size_t k = 1; k <= n; ++k) {
        m = a * m + SquareMatrix::scalar(q, n, coeffs[n - k + 1]);
        const SquareMatrix am = a * m;
        Rational trace;
        for (std::size_t i = 0; i < n; ++i) trace += am(i, i);
        coeffs[n - k] = -trace / Rational(static_cast<std::int64_t>(k));
    }
    return Poly(std::move(coeffs));
}

SpectrumSummary summarize_spectrum(const SquareMatrix& a) {
    Poly p = char_poly(a);
    const std::size_t zeros = p.zero_root_multiplicity();
    Poly nonzero = squarefree_part(p.shift_down(zeros));
    return SpectrumSummary{std::move(p), zeros, std::move(nonzero)};
}

SpectrumComparison nonzero_spectrum_equal(const SquareMatrix& p, const SquareMatrix& q) {
    SpectrumComparison cmp{summarize_spectrum(p), summarize_spectrum(q)};
    cmp.equal = cmp.first.nonzero_part_squarefree == cmp.second.nonzero_part_squarefree;
    cmp.second_within_first =
        divmod(cmp.first.nonzero_part_squarefree, cmp.second.nonzero_part_squarefree).second.is_zero();
    cmp.multiplicities_equal = cmp.first.char_poly.shift_down(cmp.first.zero_multiplicity) ==
                               cmp.second.char_poly.shift_down(cmp.second.zero_multiplicity);
    return cmp;
}

std::vector<Rational> rational_roots(const Poly& input) {
    std::vector<Rational> roots;
    if (input.is_zero()) fail(ErrorCode::ZeroPolynomial, "roots of the zero polynomial");
    if (input.zero_root_multiplicity() > 0) roots.emplace_back(0);
    const Poly p = squarefree_part(input.shift_down(input.zero_root_multiplicity()));
    if (p.degree() < 1) return roots;

    BigInt lcm_den = 1;
    for (const auto& c : p.coefficients()) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.denominator().get_mpz_t());
    const Rational scale(lcm_den);
    const Rational lead = p.leading_coefficient() * scale;
    const Rational constant = p.coefficient(0) * scale;

    for (const auto& num : positive_divisors(constant.numerator()))
        for (const auto& den : positive_divisors(lead.numerator()))
            for (int sign : {1, -1}) {
                const Rational r(BigInt(sign * num), den);
                if (p.evaluate(r).is_zero() && std::find(roots.begin(), roots.end(), r) == roots.end())
                    roots.push_back(r);
            }
    std::sort(roots.begin(), roots.end());
    return roots;
}

bool InvertibilityTransfer::forward_holds() const {
    return std::all_of(verdicts.begin(), verdicts.end(), [](const LambdaVerdict& v) { return v.forward_holds(); });
}

bool InvertibilityTransfer::reverse_holds() const {
    return std::all_of(verdicts.begin(), verdicts.end(), [](const LambdaVerdict& v) { return v.reverse_holds(); });
}

InvertibilityTransfer invertibility_transfer(const Quadruple& q, const std::vector<Rational>& lambdas) {
    if (q.ring().kind() != RingSpec::Kind::Rationals)
        fail(ErrorCode::UnsupportedRing, "invertibility transfer needs a quadruple over Q, got " + q.ring().name());
    for (const auto& lambda : lambdas)
        if (lambda.is_zero()) fail(ErrorCode::ZeroLambda, "lambda must be nonzero");

    const SquareMatrix one = SquareMatrix::identity(q.ring(), q.dim());
    const SquareMatrix ac = q.ac();
    const SquareMatrix bd = q.bd();
    InvertibilityTransfer out;
    for (const auto& lambda : lambdas) {
        LambdaVerdict v;
        v.lambda = lambda;
        const Quadruple scaled = q.scaled(lambda);
        v.ac_side_invertible = is_invertible(one - scaled.ac());
        v.bd_side_invertible = is_invertible(one - scaled.bd());
        if (v.ac_side_invertible) {
            v.formula_checked = true;
            try {
                const SquareMatrix inv = jacobson_inverse(scaled);
                v.formula_inverts = (inv * (one - scaled.bd())).is_identity();
            } catch (const Error& e) {
                if (e.code() != ErrorCode::FormulaViolation) throw;
            }
        }
        try {
            const SquareMatrix shift = SquareMatrix::scalar(q.ring(), q.dim(), lambda);
            v.drazin_spectra_empty = drazin_inverse(shift - ac).valid && drazin_inverse(shift - bd).valid;
        } catch (const Error& e) {
            if (e.code() != ErrorCode::FormulaViolation) throw;
        }
        out.verdicts.push_back(std::move(v));
    }
    return out;
}

std::vector<Rational> fixed_lambdas() {
    return {Rational(1), Rational(-1), Rational(2), Rational(1, 2), Rational(3), Rational(-3), Rational(5, 7)};
}

std::vector<Rational> default_lambdas(const Quadruple& q) {
    std::vector<Rational> out = fixed_lambdas();
    if (q.ring().kind() != RingSpec::Kind::Rationals && q.ring().kind() != RingSpec::Kind::Integers) return out;
    std::vector<Rational> extra;
    for (const auto& m : {q.ac(), q.bd()}) {
        std::vector<Rational> roots;
        try {
            roots = rational_roots(char_poly(m));
        } catch (const Error& e) {
            if (e.code() != ErrorCode::BudgetExceeded) throw;
        }
        for (auto& r : roots)
            if (!r.is_zero() && std::find(out.begin(), out.end(), r) == out.end() &&
                std::find(extra.begin(), extra.end(), r) == extra.end())
                extra.push_back(std::move(r));
    }
    std::sort(extra.begin(), extra.end());
    out.insert(out.end(), extra.begin(), extra.end());
    return out;
}

} // namespace drazinkit
