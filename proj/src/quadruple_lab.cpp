#include "drazinkit/quadruple_lab.hpp"

#include <algorithm>
#include <cctype>

#include "drazinkit/errors.hpp"

namespace drazinkit {

namespace {

// Distinct (a, b, c) draws keep a LinearSolve stream varied; one triple may
// otherwise contribute a whole coset.
constexpr std::size_t kSolutionsPerSample = 4;
constexpr std::uint64_t kAttemptsPerQuadruple = 64;

void require_finite(const RingSpec& ring, const char* op) {
    if (!ring.is_finite())
        fail(ErrorCode::UnsupportedRing, std::string(op) + " needs a finite ring, got " + ring.name());
}

std::uint64_t checked_size(const RingSpec& ring, std::size_t n, std::uint64_t budget, const char* what) {
    const auto size = matrix_ring_size(ring, n);
    if (!size || *size > budget)
        fail(ErrorCode::BudgetExceeded, std::string(what) + " over M_" + std::to_string(n) + "(" + ring.name() +
                                            ") exceeds budget " + std::to_string(budget));
    return *size;
}

SquareMatrix from_vector(const RingSpec& ring, std::size_t n, const std::vector<Rational>& v) {
    SquareMatrix m(ring, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m.set(i, j, v[i * n + j]);
    return m;
}

// Coefficient tuples for sampling an affine solution set over Q: the
// particular solution, each basis direction scaled by ±1 and ±2, then every
// pair of directions with ±1 coefficients.
std::vector<std::vector<Rational>> rational_grid(std::size_t dims) {
    std::vector<std::vector<Rational>> out;
    out.emplace_back(dims);
    for (std::size_t i = 0; i < dims; ++i)
        for (std::int64_t s : {1, -1, 2, -2}) {
            std::vector<Rational> t(dims);
            t[i] = Rational(s);
            out.push_back(std::move(t));
        }
    for (std::size_t i = 0; i < dims; ++i)
        for (std::size_t j = i + 1; j < dims; ++j)
            for (std::int64_t si : {1, -1})
                for (std::int64_t sj : {1, -1}) {
                    std::vector<Rational> t(dims);
                    t[i] = Rational(si);
                    t[j] = Rational(sj);
                    out.push_back(std::move(t));
                }
    return out;
}

} // namespace

std::optional<std::uint64_t> matrix_ring_size(const RingSpec& ring, std::size_t n) {
    const auto q = ring.cardinality();
    if (!q) return std::nullopt;
    unsigned __int128 size = 1;
    for (std::size_t k = 0; k < n * n; ++k) {
        size *= static_cast<unsigned __int128>(*q);
        if (size > std::numeric_limits<std::uint64_t>::max()) return std::nullopt;
    }
    return static_cast<std::uint64_t>(size);
}

std::vector<SquareMatrix> enumerate_matrices(const RingSpec& ring, std::size_t n, std::uint64_t budget) {
    require_finite(ring, "matrix enumeration");
    const std::uint64_t size = checked_size(ring, n, budget, "matrix enumeration");
    std::vector<SquareMatrix> out;
    out.reserve(size);
    for (std::uint64_t k = 0; k < size; ++k) out.push_back(SquareMatrix::from_index(ring, n, k));
    return out;
}

std::string_view to_string(Strategy s) {
    switch (s) {
    case Strategy::Exhaustive: return "exhaustive";
    case Strategy::LinearSolve: return "linear-solve";
    case Strategy::Classical: return "classical";
    case Strategy::PaperFixtures: return "paper-fixtures";
    }
    return "?";
}

Strategy parse_strategy(std::string_view text) {
    std::string lower(text);
    std::transform(lower.begin(), lower.end(), lower.begin(),
                   [](unsigned char ch) { return static_cast<char>(std::tolower(ch)); });
    if (lower == "exhaustive") return Strategy::Exhaustive;
    if (lower == "linear-solve") return Strategy::LinearSolve;
    if (lower == "classical") return Strategy::Classical;
    if (lower == "paper-fixtures") return Strategy::PaperFixtures;
    fail(ErrorCode::ParseError, "unknown strategy '" + std::string(text) + "'");
}

Quadruple fixture_example_2_5() {
    const auto q = RingSpec::rationals();
    return make_quadruple(SquareMatrix(q, {{0, 1}, {0, 0}}), SquareMatrix(q, {{0, 0}, {0, 1}}),
                          SquareMatrix(q, {{1, 0}, {1, 1}}), SquareMatrix(q, {{1, 0}, {-1, 0}}));
}

Quadruple fixture_example_3_6() {
    const auto z = RingSpec::integers();
    const SquareMatrix a(z, {{0, 1}, {0, 1}});
    return make_quadruple(a, SquareMatrix(z, {{1, 1}, {0, 0}}), SquareMatrix(z, {{1, -1}, {0, 0}}), a);
}

std::array<SquareMatrix, 4> fixture_example_2_4() {
    const auto q = RingSpec::rationals();
    return {SquareMatrix(q, {{0, 1}, {0, 0}}), SquareMatrix(q, {{1, 0}, {0, 0}}), SquareMatrix(q, {{1, 0}, {1, 1}}),
            SquareMatrix(q, {{1, 1}, {0, 0}})};
}

void enumerate_quadruples(const SearchSpace& space, const std::function<void(const Quadruple&)>& sink) {
    switch (space.strategy) {
    case Strategy::PaperFixtures:
        sink(fixture_example_2_5());
        sink(fixture_example_3_6());
        return;

    case Strategy::Exhaustive: {
        require_finite(space.ring, "exhaustive search");
        const std::uint64_t size = checked_size(space.ring, space.n, space.budget, "exhaustive search");
        const auto total = static_cast<unsigned __int128>(size) * size * size * size;
        if (total > space.budget)
            fail(ErrorCode::BudgetExceeded, "exhaustive search needs " + std::to_string(size) +
                                                "^4 candidates, budget is " + std::to_string(space.budget));
        const auto mats = enumerate_matrices(space.ring, space.n, size);
        for (const auto& a : mats)
            for (const auto& b : mats)
                for (const auto& c : mats) {
                    const SquareMatrix ac = a * c;
                    const SquareMatrix bac = b * ac;
                    for (const auto& d : mats) {
                        const SquareMatrix bd = b * d;
                        if (!(bd * b == bac) || !(d * bd == ac * d)) continue;
                        sink(make_quadruple(a, b, c, d));
                    }
                }
        return;
    }

    case Strategy::Classical: {
        MatrixSampler sampler(space.seed);
        for (std::uint64_t k = 0; k < space.budget; ++k) {
            const SquareMatrix a = sampler.mixed(space.ring, space.n);
            const SquareMatrix b = sampler.mixed(space.ring, space.n);
            sink(make_quadruple(a, b, b, a));
        }
        return;
    }

    case Strategy::LinearSolve: {
        if (!space.ring.is_field() && space.ring.kind() != RingSpec::Kind::ResidueRing)
            fail(ErrorCode::UnsupportedRing, "linear-solve search needs a field or Z/n, got " + space.ring.name());
        MatrixSampler sampler(space.seed);
        std::uint64_t produced = 0;
        const std::uint64_t max_attempts = std::max<std::uint64_t>(space.budget, 1) * kAttemptsPerQuadruple;
        for (std::uint64_t attempt = 0; attempt < max_attempts && produced < space.budget; ++attempt) {
            const SquareMatrix a = sampler.mixed(space.ring, space.n);
            const SquareMatrix b = sampler.mixed(space.ring, space.n);
            const SquareMatrix c = sampler.mixed(space.ring, space.n);
            std::vector<SquareMatrix> ds;
            try {
                ds = solve_for_d(a, b, c, std::min<std::uint64_t>(kSolutionsPerSample, space.budget - produced));
            } catch (const Error& e) {
                if (e.code() == ErrorCode::NoSolution) continue;
                throw;
            }
            for (const auto& d : ds) {
                sink(make_quadruple(a, b, c, d));
                ++produced;
            }
        }
        return;
    }
    }
}

std::vector<Quadruple> collect_quadruples(const SearchSpace& space) {
    std::vector<Quadruple> out;
    enumerate_quadruples(space, [&](const Quadruple& q) { out.push_back(q); });
    return out;
}

std::vector<SquareMatrix> solve_for_d(const SquareMatrix& a, const SquareMatrix& b, const SquareMatrix& c,
                                      std::uint64_t budget) {
    require_compatible(a, b);
    require_compatible(a, c);
    const RingSpec& ring = a.ring();
    const std::size_t n = a.dim();
    const SquareMatrix ac = a * c;
    const SquareMatrix bac = b * ac;

    std::vector<SquareMatrix> out;
    auto consider = [&](const SquareMatrix& x) {
        if (out.size() < budget && x * b * x == ac * x) out.push_back(x);
    };

    if (ring.kind() == RingSpec::Kind::ResidueRing) {
        bool consistent = false;
        for (const auto& x : enumerate_matrices(ring, n, kDefaultEnumerationBudget)) {
            if (!(b * x * b == bac)) continue;
            consistent = true;
            consider(x);
            if (out.size() >= budget) break;
        }
        if (!consistent) fail(ErrorCode::NoSolution, "b·X·b = b·a·c has no solution over " + ring.name());
        return out;
    }
    if (!ring.is_field()) fail(ErrorCode::UnsupportedRing, "solve_for_d needs a field or Z/n, got " + ring.name());

    // vec(b·X·b)[(i,j)] = sum over (k,l) of b(i,k)·b(l,j)·X(k,l).
    const std::size_t m = n * n;
    std::vector<std::vector<Rational>> system(m, std::vector<Rational>(m));
    std::vector<Rational> rhs(m);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            rhs[i * n + j] = bac(i, j);
            for (std::size_t k = 0; k < n; ++k)
                for (std::size_t l = 0; l < n; ++l) system[i * n + j][k * n + l] = ring.mul(b(i, k), b(l, j));
        }
    const auto sol = solve_linear_system(ring, std::move(system), rhs);
    if (!sol) fail(ErrorCode::NoSolution, "b·X·b = b·a·c is inconsistent");

    const std::size_t dims = sol->basis.size();
    auto point = [&](const std::vector<Rational>& coeffs) {
        std::vector<Rational> v = sol->particular;
        for (std::size_t t = 0; t < dims; ++t) {
            if (coeffs[t].is_zero()) continue;
            for (std::size_t k = 0; k < m; ++k) v[k] = ring.add(v[k], ring.mul(coeffs[t], sol->basis[t][k]));
        }
        return from_vector(ring, n, v);
    };

    if (ring.is_finite()) {
        const auto p = static_cast<std::uint64_t>(ring.modulus());
        unsigned __int128 coset = 1;
        for (std::size_t t = 0; t < dims; ++t) {
            coset *= p;
            if (coset > kDefaultEnumerationBudget)
                fail(ErrorCode::BudgetExceeded, "solution coset of size " + std::to_string(p) + "^" +
                                                    std::to_string(dims) + " exceeds the enumeration budget");
        }
        // Odometer over coefficient tuples, first coordinate most significant.
        std::vector<Rational> coeffs(dims);
        for (std::uint64_t idx = 0; idx < static_cast<std::uint64_t>(coset) && out.size() < budget; ++idx) {
            std::uint64_t rest = idx;
            for (std::size_t t = dims; t-- > 0;) {
                coeffs[t] = Rational(static_cast<std::int64_t>(rest % p));
                rest /= p;
            }
            consider(point(coeffs));
        }
        return out;
    }

    for (const auto& coeffs : rational_grid(dims)) {
        if (out.size() >= budget) break;
        consider(point(coeffs));
    }
    return out;
}

std::vector<SquareMatrix> commutant(const SquareMatrix& a, std::uint64_t budget) {
    require_finite(a.ring(), "commutant");
    std::vector<SquareMatrix> out;
    for (auto& x : enumerate_matrices(a.ring(), a.dim(), budget))
        if (x * a == a * x) out.push_back(std::move(x));
    return out;
}

bool double_commutant_check(const SquareMatrix& a, const SquareMatrix& x) {
    require_compatible(a, x);
    for (const auto& y : commutant(a))
        if (!(x * y == y * x)) return false;
    return true;
}

std::optional<SquareMatrix> qnil_witness(const SquareMatrix& a) {
    const SquareMatrix one = SquareMatrix::identity(a.ring(), a.dim());
    for (const auto& x : commutant(a))
        if (!is_invertible(one + a * x)) return x;
    return std::nullopt;
}

bool is_qnil_by_definition(const SquareMatrix& a) { return !qnil_witness(a).has_value(); }

QnilTransferReport qnil_transfer_check(const Quadruple& q) {
    QnilTransferReport r;
    if (q.ring().is_finite()) {
        r.ac_qnil = is_qnil_by_definition(q.ac());
        r.witness = qnil_witness(q.bd());
        r.bd_qnil = !r.witness.has_value();
        return r;
    }
    if (!q.ring().is_field())
        fail(ErrorCode::UnsupportedRing, "quasinilpotence is only decided over finite rings and fields");
    r.ac_qnil = is_nilpotent(q.ac());
    r.bd_qnil = is_nilpotent(q.bd());
    return r;
}

std::vector<DrazinCertificate> brute_force_inverse(const SquareMatrix& a, InverseFlavor flavor,
                                                   std::uint64_t budget) {
    require_finite(a.ring(), "brute-force inverse search");
    const auto candidates = enumerate_matrices(a.ring(), a.dim(), budget);
    std::optional<std::vector<SquareMatrix>> comm;
    std::vector<DrazinCertificate> out;
    for (const auto& x : candidates) {
        const SquareMatrix xa = x * a;
        if (!(a * x == xa) || !(xa * x == x)) continue;
        DrazinCertificate cert = certify(a, x, flavor);
        if (!cert.valid) continue;
        if (!comm) comm = commutant(a, budget);
        const bool in_comm2 = std::all_of(comm->begin(), comm->end(),
                                          [&](const SquareMatrix& y) { return x * y == y * x; });
        cert.transcript.push_back({"double_commutant", in_comm2, in_comm2 ? "" : "fails against comm(a)"});
        if (!in_comm2) continue;
        out.push_back(std::move(cert));
    }
    return out;
}

FiniteOracle::FiniteOracle(RingSpec ring, std::size_t n) : ring_(ring), n_(n) {
    require_finite(ring_, "finite oracle");
}

const std::vector<SquareMatrix>& FiniteOracle::commutant(const SquareMatrix& a) {
    const auto key = a.index();
    auto it = commutants_.find(key);
    if (it == commutants_.end()) it = commutants_.emplace(key, drazinkit::commutant(a)).first;
    return it->second;
}

bool FiniteOracle::is_qnil(const SquareMatrix& a) {
    const auto key = a.index();
    auto it = qnil_.find(key);
    if (it == qnil_.end()) it = qnil_.emplace(key, is_qnil_by_definition(a)).first;
    return it->second;
}

const std::vector<DrazinCertificate>& FiniteOracle::inverses(const SquareMatrix& a, InverseFlavor flavor) {
    const auto key = std::make_pair(a.index(), static_cast<int>(flavor));
    auto it = inverses_.find(key);
    if (it == inverses_.end()) it = inverses_.emplace(key, brute_force_inverse(a, flavor)).first;
    return it->second;
}

Rational MatrixSampler::scalar(const RingSpec& ring, std::int64_t radius) {
    if (ring.is_finite()) return Rational(static_cast<std::int64_t>(next(static_cast<std::uint64_t>(ring.modulus()))));
    return Rational(static_cast<std::int64_t>(next(static_cast<std::uint64_t>(2 * radius + 1))) - radius);
}

SquareMatrix MatrixSampler::uniform(const RingSpec& ring, std::size_t n, std::int64_t radius) {
    SquareMatrix m(ring, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m.set(i, j, scalar(ring, radius));
    return m;
}

SquareMatrix MatrixSampler::nilpotent(const RingSpec& ring, std::size_t n, std::int64_t radius) {
    SquareMatrix m(ring, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) m.set(i, j, scalar(ring, radius));
    return m;
}

SquareMatrix MatrixSampler::low_rank(const RingSpec& ring, std::size_t n, std::size_t r, std::int64_t radius) {
    SquareMatrix projection(ring, n);
    for (std::size_t i = 0; i < std::min(r, n); ++i) projection.set(i, i, Rational(1));
    return uniform(ring, n, radius) * projection * uniform(ring, n, radius);
}

SquareMatrix MatrixSampler::mixed(const RingSpec& ring, std::size_t n) {
    switch (next(4)) {
    case 0:
        return nilpotent(ring, n);
    case 1:
        return low_rank(ring, n, static_cast<std::size_t>(next(n)), 1);
    default:
        return uniform(ring, n);
    }
}

} // namespace drazinkit
