#pragma once

#include <cstddef>
#include <vector>

#include "drazinkit/drazin.hpp"
#include "drazinkit/poly.hpp"

namespace drazinkit {

/// Characteristic polynomial split into its zero and nonzero root parts.
struct SpectrumSummary {
    Poly char_poly;                 // monic, degree n
    std::size_t zero_multiplicity;  // largest k with λ^k | char_poly
    Poly nonzero_part_squarefree;   // monic squarefree part of char_poly / λ^k
};

/// det(λI - A) via the Faddeev–LeVerrier recurrence. Q or Z entries only.
Poly char_poly(const SquareMatrix& a);

SpectrumSummary summarize_spectrum(const SquareMatrix& a);

struct SpectrumComparison {
    SpectrumSummary first;
    SpectrumSummary second;
    /// Same set of nonzero eigenvalues (identical squarefree nonzero parts).
    bool equal = false;
    /// Informational: nonzero eigenvalues agree with multiplicity.
    bool multiplicities_equal = false;
    /// Every nonzero eigenvalue of the second matrix is one of the first.
    bool second_within_first = false;
};

/// Compares the nonzero eigenvalue sets of two matrices, possibly of
/// different sizes. Eigenvalues are never extracted; the comparison is
/// between monic squarefree polynomials.
SpectrumComparison nonzero_spectrum_equal(const SquareMatrix& p, const SquareMatrix& q);

/// Distinct rational roots of a polynomial with rational coefficients,
/// ascending.
std::vector<Rational> rational_roots(const Poly& p);

struct LambdaVerdict {
    Rational lambda;
    bool ac_side_invertible = false;  // 1 - (a/λ)c
    bool bd_side_invertible = false;  // 1 - b(d/λ)
    bool formula_checked = false;     // jacobson_inverse ran on the scaled quadruple
    bool formula_inverts = false;
    /// λ - ac and λ - bd both admit certified Drazin inverses, so λ lies
    /// outside both Drazin spectra (which are empty for matrices).
    bool drazin_spectra_empty = false;

    /// ac-side invertible => bd-side invertible with the formula inverting it.
    bool forward_holds() const {
        return !ac_side_invertible || (bd_side_invertible && formula_checked && formula_inverts);
    }
    /// The converse, reported for exploration only.
    bool reverse_holds() const { return !bd_side_invertible || ac_side_invertible; }
};

struct InvertibilityTransfer {
    std::vector<LambdaVerdict> verdicts;
    bool forward_holds() const;
    bool reverse_holds() const;
};

/// For each λ ≠ 0, checks the scaled quadruple (a/λ, b, c, d/λ): if 1 - (a/λ)c
/// is invertible, 1 + b(1 - (a/λ)c)^(-1)(d/λ) must invert 1 - b(d/λ).
/// Quadruples over Q only; ZeroLambda on λ = 0.
InvertibilityTransfer invertibility_transfer(const Quadruple& q, const std::vector<Rational>& lambdas);

/// {1, -1, 2, 1/2, 3, -3, 5/7}.
std::vector<Rational> fixed_lambdas();
/// The fixed list followed by the nonzero rational eigenvalues of ac and bd
/// not already present, ascending.
std::vector<Rational> default_lambdas(const Quadruple& q);

} // namespace drazinkit
