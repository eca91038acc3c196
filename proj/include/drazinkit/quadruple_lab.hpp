#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "drazinkit/drazin.hpp"

namespace drazinkit {

/// Cap on how many matrices a finite-ring enumeration may visit by default.
inline constexpr std::uint64_t kDefaultEnumerationBudget = std::uint64_t{1} << 16;
inline constexpr std::uint64_t kDefaultSeed = 0x5EED;

/// |R|^(n²) when it fits in 64 bits.
std::optional<std::uint64_t> matrix_ring_size(const RingSpec& ring, std::size_t n);

/// Every n x n matrix over a finite ring in row-major lexicographic order.
/// Throws BudgetExceeded when there are more than `budget`.
std::vector<SquareMatrix> enumerate_matrices(const RingSpec& ring, std::size_t n,
                                             std::uint64_t budget = kDefaultEnumerationBudget);

enum class Strategy { Exhaustive, LinearSolve, Classical, PaperFixtures };

std::string_view to_string(Strategy s);
/// Accepts "exhaustive", "linear-solve", "classical", "paper-fixtures".
Strategy parse_strategy(std::string_view text);

/**
 * Exhaustive: every quadruple over M_n(R), R finite, |R|^(4n²) <= budget.
 * LinearSolve: up to `budget` quadruples from seeded (a, b, c) via solve_for_d.
 * Classical: `budget` seeded (a, b, b, a).
 * PaperFixtures: the two intertwined examples, one over Q and one over Z;
 * ring, n and budget are ignored.
 */
struct SearchSpace {
    RingSpec ring = RingSpec::rationals();
    std::size_t n = 2;
    Strategy strategy = Strategy::Exhaustive;
    std::uint64_t budget = std::uint64_t{1} << 20;
    std::uint64_t seed = kDefaultSeed;
};

/// Streams quadruples in deterministic order; throws BudgetExceeded.
void enumerate_quadruples(const SearchSpace& space, const std::function<void(const Quadruple&)>& sink);
std::vector<Quadruple> collect_quadruples(const SearchSpace& space);

/// Intertwined quadruples from the examples in the literature on this condition.
Quadruple fixture_example_2_5();
Quadruple fixture_example_3_6();
/// A near miss over Q: d·b·d = a·c·d holds but b·d·b ≠ b·a·c.
std::array<SquareMatrix, 4> fixture_example_2_4();

/**
 * All d with b·d·b = b·a·c and d·b·d = a·c·d, in deterministic order, at most
 * `budget` of them.
 *
 * Fields: the linear relation is solved exactly (particular solution plus
 * nullspace); over GF(p) the whole coset is walked, over Q the coset is
 * sampled on a small integer coefficient grid. Z/n: the full matrix ring is
 * enumerated. NoSolution when the linear relation is inconsistent.
 */
std::vector<SquareMatrix> solve_for_d(const SquareMatrix& a, const SquareMatrix& b, const SquareMatrix& c,
                                      std::uint64_t budget = kDefaultEnumerationBudget);

/// {x : x·a = a·x} over a finite ring.
std::vector<SquareMatrix> commutant(const SquareMatrix& a, std::uint64_t budget = kDefaultEnumerationBudget);

/// x commutes with every element of comm(a).
bool double_commutant_check(const SquareMatrix& a, const SquareMatrix& x);

/// An x in comm(a) with 1 + a·x not a unit, if one exists.
std::optional<SquareMatrix> qnil_witness(const SquareMatrix& a);
/// 1 + a·x is a unit for every x in comm(a).
bool is_qnil_by_definition(const SquareMatrix& a);

struct QnilTransferReport {
    bool ac_qnil = false;
    bool bd_qnil = false;
    /// x in comm(bd) with 1 + bd·x singular, when bd fails.
    std::optional<SquareMatrix> witness;
    bool pass() const { return !ac_qnil || bd_qnil; }
};

/// ac qnil => bd qnil. Definitional over finite rings, nilpotence over Q.
QnilTransferReport qnil_transfer_check(const Quadruple& q);

/// Every x passing verify_axioms plus the literal comm² check.
std::vector<DrazinCertificate> brute_force_inverse(const SquareMatrix& a, InverseFlavor flavor,
                                                   std::uint64_t budget = kDefaultEnumerationBudget);

/**
 * Memoizing front end to the finite-ring oracles for sweeps that revisit the
 * same matrices many times. Results are identical to the free functions.
 * Not thread-safe; give each worker its own.
 */
class FiniteOracle {
public:
    FiniteOracle(RingSpec ring, std::size_t n);

    const std::vector<SquareMatrix>& commutant(const SquareMatrix& a);
    bool is_qnil(const SquareMatrix& a);
    const std::vector<DrazinCertificate>& inverses(const SquareMatrix& a, InverseFlavor flavor);

private:
    RingSpec ring_;
    std::size_t n_;
    std::map<std::uint64_t, std::vector<SquareMatrix>> commutants_;
    std::map<std::uint64_t, bool> qnil_;
    std::map<std::pair<std::uint64_t, int>, std::vector<DrazinCertificate>> inverses_;
};

/// Seeded sampler for test matrices. Over Q entries are small integers;
/// over finite rings they are uniform residues.
class MatrixSampler {
public:
    explicit MatrixSampler(std::uint64_t seed) : rng_(seed) {}

    std::uint64_t next(std::uint64_t bound) { return rng_() % bound; }

    /// Entries in [-radius, radius] over Q/Z, uniform over finite rings.
    SquareMatrix uniform(const RingSpec& ring, std::size_t n, std::int64_t radius = 2);
    /// Strictly upper triangular, hence nilpotent.
    SquareMatrix nilpotent(const RingSpec& ring, std::size_t n, std::int64_t radius = 2);
    /// Rank at most r, as a product through a diagonal projection.
    SquareMatrix low_rank(const RingSpec& ring, std::size_t n, std::size_t r, std::int64_t radius = 2);
    /// One of the shapes above, chosen at random.
    SquareMatrix mixed(const RingSpec& ring, std::size_t n);

private:
    Rational scalar(const RingSpec& ring, std::int64_t radius);

    std::mt19937_64 rng_;
};

} // namespace drazinkit
