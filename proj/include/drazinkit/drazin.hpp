#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "drazinkit/matrix.hpp"

namespace drazinkit {

/// Drazin: a - a^2 x nilpotent. PDrazin: a^k - a^(k+1) x in the radical.
/// GDrazin: a - a^2 x quasinilpotent. Group: Drazin with index <= 1.
enum class InverseFlavor { Drazin, PDrazin, GDrazin, Group };

std::string_view to_string(InverseFlavor flavor);
/// Accepts "drazin", "pdrazin", "gdrazin", "group" (case-insensitive).
InverseFlavor parse_flavor(std::string_view text);

struct AxiomCheck {
    std::string check;
    bool pass = false;
    std::string witness;
};

struct Transcript {
    std::vector<AxiomCheck> checks;
    /// Drazin index (Drazin, GDrazin, Group) or p-Drazin index i(a) (PDrazin).
    std::optional<std::size_t> index;

    bool passed() const;
};

/**
 * Checks a candidate x against the axioms of the given flavor:
 *   commutes     a·x = x·a
 *   outer        x·a·x = x
 *   <flavor>     the core condition, with the index recorded when found.
 *
 * The double-commutant axiom is replaced by plain commutation here; the
 * finite-ring brute force adds the literal comm² check on top. Quasinilpotence
 * is decided by definition over finite rings and as nilpotence otherwise.
 * Failures are recorded, never thrown.
 */
Transcript verify_axioms(const SquareMatrix& a, const SquareMatrix& x, InverseFlavor flavor);

struct DrazinCertificate {
    SquareMatrix element;
    SquareMatrix inverse;
    InverseFlavor flavor;
    std::optional<std::size_t> index;
    std::vector<AxiomCheck> transcript;
    bool valid = false;
};

/// Runs verify_axioms and packages the outcome.
DrazinCertificate certify(const SquareMatrix& a, const SquareMatrix& x, InverseFlavor flavor);

/// Smallest k >= 0 with rank(A^k) = rank(A^(k+1)). Fields only.
std::size_t index_of(const SquareMatrix& a);

/// A^k · (A^(2k+1))^- · A^k with k = index_of(A), released only after the
/// certificate re-verifies. Fields only.
DrazinCertificate drazin_inverse(const SquareMatrix& a);

/// Construction path over a field; NoGroupInverse when the index exceeds 1.
DrazinCertificate group_inverse(const SquareMatrix& a);
/// Verification path for any ring: checks a caller-supplied candidate.
DrazinCertificate group_inverse(const SquareMatrix& a, const SquareMatrix& candidate);

struct IntertwiningReport;
IntertwiningReport verify_intertwining(const SquareMatrix& a, const SquareMatrix& b,
                                       const SquareMatrix& c, const SquareMatrix& d);

/// Four same-shape matrices with b·d·b = b·a·c and d·b·d = a·c·d.
/// Only obtainable through verify_intertwining / make_quadruple.
class Quadruple {
public:
    const SquareMatrix& a() const noexcept { return a_; }
    const SquareMatrix& b() const noexcept { return b_; }
    const SquareMatrix& c() const noexcept { return c_; }
    const SquareMatrix& d() const noexcept { return d_; }
    const RingSpec& ring() const noexcept { return a_.ring(); }
    std::size_t dim() const noexcept { return a_.dim(); }

    SquareMatrix ac() const { return a_ * c_; }
    SquareMatrix bd() const { return b_ * d_; }

    /// (a/λ, b, c, d/λ); over Q only, λ ≠ 0.
    Quadruple scaled(const Rational& lambda) const;

    friend bool operator==(const Quadruple&, const Quadruple&) = default;

private:
    friend IntertwiningReport verify_intertwining(const SquareMatrix&, const SquareMatrix&,
                                                  const SquareMatrix&, const SquareMatrix&);
    Quadruple(SquareMatrix a, SquareMatrix b, SquareMatrix c, SquareMatrix d)
        : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {}

    SquareMatrix a_, b_, c_, d_;
};

struct RelationCheck {
    std::string relation; // "bdb = bac" or "dbd = acd"
    SquareMatrix lhs;
    SquareMatrix rhs;
    bool holds = false;
    /// (row, column) positions where lhs and rhs differ.
    std::vector<std::pair<std::size_t, std::size_t>> differing;
};

/// Produced by verify_intertwining, which throws DimensionMismatch /
/// RingMismatch; relation failures are reported, not thrown.
struct IntertwiningReport {
    std::vector<RelationCheck> relations;
    std::optional<Quadruple> quadruple;

    bool accepted() const { return quadruple.has_value(); }
    std::string describe() const;
};

/// As verify_intertwining, but throws RelationViolation on rejection.
Quadruple make_quadruple(const SquareMatrix& a, const SquareMatrix& b, const SquareMatrix& c,
                         const SquareMatrix& d);

/// Case split for bd when ac has a group inverse (index(ac) <= 1).
enum class GroupClassification {
    Invertible,    // index(bd) = 0
    GroupInverse,  // index(bd) = 1
    IndexTwo,      // index(bd) = 2, only the Drazin inverse exists
    NotApplicable, // index(ac) > 1
};

std::string_view to_string(GroupClassification c);

struct ClineResult {
    DrazinCertificate ac;  // h for a·c
    DrazinCertificate bd;  // e = b·h²·d checked against b·d
    bool index_bound_holds = false;
    GroupClassification classification = GroupClassification::NotApplicable;

    bool valid() const { return ac.valid && bd.valid && index_bound_holds; }
};

/**
 * (bd)^♮ = b·((ac)^♮)²·d for the chosen flavor ♮, with i(bd) <= i(ac) + 1.
 *
 * h comes from drazin_inverse over a field and from the brute-force oracle
 * over Z/n; Z has no construction path (NotAField). A Group request
 * verifies e as a Drazin inverse of bd and reports the case split.
 */
ClineResult cline_generalized(const Quadruple& q, InverseFlavor flavor);
/// Same, with h supplied by the caller and verified before use.
ClineResult cline_generalized(const Quadruple& q, InverseFlavor flavor, const SquareMatrix& h);

/// (ba)^D = b·((ab)^D)²·a, the c = b, d = a specialization. Fields only.
DrazinCertificate cline_classical(const SquareMatrix& a, const SquareMatrix& b);

/// 1 + b·(1 - ac)^(-1)·d, verified as a two-sided inverse of 1 - bd.
/// NotInvertible when 1 - ac is singular; FormulaViolation if the check fails.
SquareMatrix jacobson_inverse(const Quadruple& q);

} // namespace drazinkit
