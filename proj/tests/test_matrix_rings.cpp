#include <doctest.h>

#include <numeric>

#include "drazinkit/errors.hpp"
#include "drazinkit/quadruple_lab.hpp"
#include "oracles.hpp"

using namespace drazinkit;

namespace {

const RingSpec Q = RingSpec::rationals();
const RingSpec Z = RingSpec::integers();

oracle::IntGrid to_grid(const SquareMatrix& m) {
    oracle::IntGrid g(m.dim(), std::vector<long long>(m.dim()));
    for (std::size_t i = 0; i < m.dim(); ++i)
        for (std::size_t j = 0; j < m.dim(); ++j) g[i][j] = *m(i, j).to_int64();
    return g;
}

SquareMatrix diag_identity_block(const RingSpec& ring, std::size_t n, std::size_t r) {
    SquareMatrix d(ring, n);
    for (std::size_t i = 0; i < r; ++i) d.set(i, i, Rational(1));
    return d;
}

ErrorCode code_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected an Error");
    return ErrorCode::ParseError;
}

} // namespace

TEST_CASE("ring construction and scalar arithmetic") {
    CHECK(RingSpec::prime_field(7).name() == "GF(7)");
    CHECK(RingSpec::residue_ring(12).name() == "Z/12");
    CHECK(code_of([] { RingSpec::prime_field(9); }) == ErrorCode::InvalidRing);
    CHECK(code_of([] { RingSpec::residue_ring(1); }) == ErrorCode::InvalidRing);
    CHECK(code_of([] { RingSpec::residue_ring(std::int64_t{1} << 40); }) == ErrorCode::InvalidRing);

    const RingSpec z12 = RingSpec::residue_ring(12);
    CHECK(z12.radical_modulus() == 6);
    CHECK(RingSpec::residue_ring(8).radical_modulus() == 2);
    CHECK(RingSpec::residue_ring(8).nilpotency_bound(2) == 6);
    CHECK(z12.reduce(Rational(-1)) == Rational(11));
    CHECK(z12.mul(Rational(5), Rational(7)) == Rational(11));
    CHECK(z12.is_unit(Rational(5)));
    CHECK(!z12.is_unit(Rational(4)));
    CHECK(z12.mul(z12.inverse(Rational(7)), Rational(7)) == Rational(1));
    CHECK(code_of([&] { z12.inverse(Rational(4)); }) == ErrorCode::NotInvertible);
    CHECK(code_of([] { Z.reduce(Rational(1, 2)); }) == ErrorCode::ParseError);
    CHECK(Z.is_unit(Rational(-1)));
    CHECK(!Z.is_unit(Rational(2)));
    CHECK(!RingSpec::prime_field(5).is_unit(Rational(0)));
}

TEST_CASE("matrix arithmetic and shape checks") {
    const SquareMatrix a(Q, {{1, 2}, {3, 4}});
    const SquareMatrix b(Q, {{0, 1}, {1, 0}});
    CHECK(a * b == SquareMatrix(Q, {{2, 1}, {4, 3}}));
    CHECK(a + b == SquareMatrix(Q, {{1, 3}, {4, 4}}));
    CHECK(a - a == SquareMatrix::zero(Q, 2));
    CHECK(a.power(0).is_identity());
    CHECK(a.power(3) == a * a * a);
    CHECK(a.transpose() == SquareMatrix(Q, {{1, 3}, {2, 4}}));
    CHECK(a.to_string() == "[[1, 2], [3, 4]]");
    CHECK(SquareMatrix(RingSpec::residue_ring(4), {{5, -1}, {2, 3}}) ==
          SquareMatrix(RingSpec::residue_ring(4), {{1, 3}, {2, 3}}));

    const SquareMatrix c(Q, 3);
    CHECK(code_of([&] { (void)(a * c); }) == ErrorCode::DimensionMismatch);
    CHECK(code_of([&] { (void)(a + a.embed(RingSpec::prime_field(5))); }) == ErrorCode::RingMismatch);
    CHECK(code_of([&] { SquareMatrix(Q, {{1, 2}, {3}}); }) == ErrorCode::DimensionMismatch);
}

TEST_CASE("matrix index encoding round-trips over finite rings") {
    const RingSpec gf3 = RingSpec::prime_field(3);
    for (std::uint64_t i = 0; i < 81; ++i) CHECK(SquareMatrix::from_index(gf3, 2, i).index() == i);
    const auto all = enumerate_matrices(RingSpec::residue_ring(4), 2);
    CHECK(all.size() == 256);
    for (std::size_t i = 0; i < all.size(); ++i) CHECK(all[i].index() == i);
    CHECK(code_of([] { enumerate_matrices(RingSpec::residue_ring(4), 3); }) == ErrorCode::BudgetExceeded);
}

TEST_CASE("determinants agree with cofactor expansion") {
    MatrixSampler sampler(11);
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t n = 1 + trial % 4;
        const SquareMatrix m = sampler.uniform(Z, n, 5);
        const long long expected = oracle::det_cofactor(to_grid(m));
        CHECK(det(m) == Rational(expected));
        CHECK(det(m.embed(Q)) == Rational(expected));
        for (std::int64_t mod : {4, 6, 7, 9}) {
            const RingSpec r = mod == 7 ? RingSpec::prime_field(7) : RingSpec::residue_ring(mod);
            CHECK(det(m.embed(r)) == Rational(expected).mod(mod));
        }
    }
}

TEST_CASE("determinant is multiplicative and the adjugate inverts") {
    MatrixSampler sampler(12);
    const RingSpec z6 = RingSpec::residue_ring(6);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = 1 + trial % 4;
        for (const RingSpec& r : {Q, z6}) {
            const SquareMatrix a = sampler.uniform(r, n), b = sampler.uniform(r, n);
            CHECK(det(a * b) == r.mul(det(a), det(b)));
            CHECK(a * adjugate(a) == SquareMatrix::scalar(r, n, det(a)));
            if (is_invertible(a)) {
                CHECK((a * inverse(a)).is_identity());
                CHECK((inverse(a) * a).is_identity());
            } else {
                CHECK(code_of([&] { inverse(a); }) == ErrorCode::NotInvertible);
            }
        }
    }
    // det 2 is not a unit in Z/6 although it is nonzero.
    CHECK(!is_invertible(SquareMatrix(z6, {{2, 0}, {0, 1}})));
    CHECK(is_invertible(SquareMatrix(z6, {{5, 0}, {0, 1}})));
    CHECK(!is_invertible(SquareMatrix(Z, {{2, 0}, {0, 1}})));
    CHECK(inverse(SquareMatrix(Z, {{2, 1}, {1, 1}})) == SquareMatrix(Z, {{1, -1}, {-1, 2}}));
}

TEST_CASE("rank normal form and inner inverses over fields") {
    MatrixSampler sampler(13);
    const RingSpec gf5 = RingSpec::prime_field(5);
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t n = 1 + trial % 4;
        const RingSpec& r = trial % 2 ? Q : gf5;
        const SquareMatrix a = trial % 3 == 0 ? sampler.low_rank(r, n, trial % n) : sampler.mixed(r, n);
        const RankNormalForm f = rank_normal_form(a);
        CHECK(f.rank == rank(a));
        CHECK(is_invertible(f.p));
        CHECK(is_invertible(f.q));
        CHECK(f.p * a * f.q == diag_identity_block(r, n, f.rank));
        const SquareMatrix x = inner_inverse(a);
        CHECK(a * x * a == a);
        CHECK(rank(a) == rank(a.transpose()));
    }
    CHECK(rank(SquareMatrix(Q, {{1, 2}, {2, 4}})) == 1);
    CHECK(rank(SquareMatrix(RingSpec::prime_field(2), {{1, 1}, {1, 1}})) == 1);
    CHECK(code_of([] { rank(SquareMatrix(Z, 2)); }) == ErrorCode::NotAField);
}

TEST_CASE("linear systems over fields") {
    // x + y = 2, 2x + 2y = 4 -> particular (2, 0), basis spans (-1, 1).
    const auto sol = solve_linear_system(Q, {{1, 1}, {2, 2}}, {2, 4});
    REQUIRE(sol);
    CHECK(sol->particular[0] + sol->particular[1] == Rational(2));
    REQUIRE(sol->basis.size() == 1);
    CHECK(sol->basis[0][0] + sol->basis[0][1] == Rational(0));
    CHECK(!solve_linear_system(Q, {{1, 1}, {2, 2}}, {2, 5}));

    const RingSpec gf3 = RingSpec::prime_field(3);
    const auto s3 = solve_linear_system(gf3, {{1, 2}, {2, 1}}, {1, 2});
    REQUIRE(s3);
    const auto& v = s3->particular;
    CHECK(gf3.add(v[0], gf3.mul(Rational(2), v[1])) == Rational(1));
    CHECK(code_of([] { solve_linear_system(RingSpec::residue_ring(4), {{1}}, {1}); }) == ErrorCode::NotAField);
}

TEST_CASE("nilpotency and the radical") {
    const RingSpec z4 = RingSpec::residue_ring(4);
    CHECK(nilpotency_degree(SquareMatrix(z4, {{2, 0}, {0, 2}})) == 2u);
    CHECK(nilpotency_degree(SquareMatrix(z4, {{2, 1}, {0, 2}})) == 2u);
    CHECK(nilpotency_degree(SquareMatrix(z4, {{0, 1}, {0, 2}})) == 3u);
    CHECK(nilpotency_degree(SquareMatrix(Q, {{0, 1, 0}, {0, 0, 1}, {0, 0, 0}})) == 3u);
    CHECK(!is_nilpotent(SquareMatrix(Q, {{1, 0}, {0, 0}})));
    CHECK(in_radical(SquareMatrix(z4, {{2, 2}, {0, 2}})));
    CHECK(!in_radical(SquareMatrix(z4, {{0, 1}, {0, 0}})));
    CHECK(in_radical(SquareMatrix(Q, 2)));
    CHECK(!in_radical(SquareMatrix(Q, {{0, 1}, {0, 0}})));

    // Nilpotent counts computed independently (tests/oracles/derive.py).
    auto count = [](const RingSpec& r) {
        std::size_t total = 0;
        for (const auto& m : enumerate_matrices(r, 2)) total += is_nilpotent(m);
        return total;
    };
    CHECK(count(RingSpec::prime_field(2)) == 4);
    CHECK(count(RingSpec::prime_field(3)) == 9);
    CHECK(count(z4) == 64);
}

TEST_CASE("embedding between rings") {
    const SquareMatrix m(Z, {{-1, 5}, {2, 0}});
    CHECK(m.embed(RingSpec::residue_ring(4)) == SquareMatrix(RingSpec::residue_ring(4), {{3, 1}, {2, 0}}));
    CHECK(m.embed(Q).embed(Z) == m);
    CHECK(code_of([] { SquareMatrix(Q, {{Rational(1, 2)}}).embed(Z); }) == ErrorCode::ParseError);
}
