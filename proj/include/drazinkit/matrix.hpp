#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "drazinkit/rational.hpp"
#include "drazinkit/ring.hpp"

namespace drazinkit {

/// n x n matrix over a RingSpec, entries row-major and always canonical for
/// the ring. Arithmetic between matrices requires identical ring and size.
class SquareMatrix {
public:
    using Rows = std::vector<std::vector<Rational>>;

    /// Zero matrix.
    SquareMatrix(RingSpec ring, std::size_t n);
    /// Entries are reduced into the ring; rows must form a square.
    SquareMatrix(RingSpec ring, const Rows& rows);

    static SquareMatrix zero(RingSpec ring, std::size_t n) { return SquareMatrix(ring, n); }
    static SquareMatrix identity(RingSpec ring, std::size_t n);
    static SquareMatrix scalar(RingSpec ring, std::size_t n, const Rational& s);

    const RingSpec& ring() const noexcept { return ring_; }
    std::size_t dim() const noexcept { return n_; }

    const Rational& operator()(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }
    /// Stores the reduced form of v.
    void set(std::size_t i, std::size_t j, const Rational& v);
    const std::vector<Rational>& entries() const noexcept { return entries_; }
    Rows rows() const;

    bool is_zero() const;
    bool is_identity() const;

    SquareMatrix scaled(const Rational& s) const;
    SquareMatrix power(std::size_t k) const;
    SquareMatrix transpose() const;
    /// Same entries viewed in another ring (Z -> Q, or reduction into Z/n).
    SquareMatrix embed(const RingSpec& target) const;

    /// Row-major base-|R| index; finite rings only. Inverse of from_index.
    std::uint64_t index() const;
    static SquareMatrix from_index(const RingSpec& ring, std::size_t n, std::uint64_t index);

    std::string to_string() const;

    friend SquareMatrix operator+(const SquareMatrix& a, const SquareMatrix& b);
    friend SquareMatrix operator-(const SquareMatrix& a, const SquareMatrix& b);
    friend SquareMatrix operator*(const SquareMatrix& a, const SquareMatrix& b);
    SquareMatrix operator-() const;
    friend bool operator==(const SquareMatrix& a, const SquareMatrix& b);

private:
    RingSpec ring_;
    std::size_t n_;
    std::vector<Rational> entries_;
};

/// Throws RingMismatch / DimensionMismatch.
void require_compatible(const SquareMatrix& a, const SquareMatrix& b);

/// Row rank by exact elimination; fields only (NotAField otherwise).
std::size_t rank(const SquareMatrix& a);

/// Exact determinant: elimination over fields, Bareiss over Z and Z/n.
Rational det(const SquareMatrix& a);

/// Transposed cofactor matrix; any supported ring.
SquareMatrix adjugate(const SquareMatrix& a);

/// True iff a is a unit of the matrix ring.
bool is_invertible(const SquareMatrix& a);

/// Two-sided inverse; throws NotInvertible with the reason.
SquareMatrix inverse(const SquareMatrix& a);

/// Invertible P, Q with P·A·Q = diag(I_r, 0).
struct RankNormalForm {
    SquareMatrix p;
    SquareMatrix q;
    std::size_t rank;
};
RankNormalForm rank_normal_form(const SquareMatrix& a);

/// X with A·X·A = A, built as Q·diag(I_r, 0)·P. Fields only.
SquareMatrix inner_inverse(const SquareMatrix& a);

/// Solution set {particular + span(basis)} of a linear system over a field.
struct AffineSolution {
    std::vector<Rational> particular;
    std::vector<std::vector<Rational>> basis;
};

/// Solves coefficients·v = rhs exactly over a field (free variables set to
/// zero in the particular solution). nullopt when inconsistent.
std::optional<AffineSolution> solve_linear_system(const RingSpec& field,
                                                  std::vector<std::vector<Rational>> coefficients,
                                                  const std::vector<Rational>& rhs);

/// Smallest k >= 1 with A^k = 0, searched up to the ring's nilpotency bound.
std::optional<std::size_t> nilpotency_degree(const SquareMatrix& a);
inline bool is_nilpotent(const SquareMatrix& a) { return nilpotency_degree(a).has_value(); }

/// Membership in the Jacobson radical of the matrix ring: M_k(m·Z/n) for Z/n,
/// {0} for Q, Z and GF(p).
bool in_radical(const SquareMatrix& a);

} // namespace drazinkit
