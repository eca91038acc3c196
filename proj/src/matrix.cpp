#include "drazinkit/matrix.hpp"

#include <sstream>
#include <utility>

#include "drazinkit/errors.hpp"

namespace drazinkit {

SquareMatrix::SquareMatrix(RingSpec ring, std::size_t n)
    : ring_(ring), n_(n), entries_(n * n) {
    if (n == 0) fail(ErrorCode::DimensionMismatch, "matrix dimension must be at least 1");
}

SquareMatrix::SquareMatrix(RingSpec ring, const Rows& rows) : SquareMatrix(ring, rows.size()) {
    for (std::size_t i = 0; i < n_; ++i) {
        if (rows[i].size() != n_)
            fail(ErrorCode::DimensionMismatch, "row " + std::to_string(i) + " has " +
                                                   std::to_string(rows[i].size()) + " entries, expected " +
                                                   std::to_string(n_));
        for (std::size_t j = 0; j < n_; ++j) entries_[i * n_ + j] = ring_.reduce(rows[i][j]);
    }
}

SquareMatrix SquareMatrix::identity(RingSpec ring, std::size_t n) {
    return scalar(ring, n, Rational(1));
}

SquareMatrix SquareMatrix::scalar(RingSpec ring, std::size_t n, const Rational& s) {
    SquareMatrix m(ring, n);
    const Rational v = ring.reduce(s);
    for (std::size_t i = 0; i < n; ++i) m.entries_[i * n + i] = v;
    return m;
}

void SquareMatrix::set(std::size_t i, std::size_t j, const Rational& v) {
    entries_[i * n_ + j] = ring_.reduce(v);
}

SquareMatrix::Rows SquareMatrix::rows() const {
    Rows out(n_, std::vector<Rational>(n_));
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j) out[i][j] = (*this)(i, j);
    return out;
}

bool SquareMatrix::is_zero() const {
    for (const auto& e : entries_)
        if (!e.is_zero()) return false;
    return true;
}

bool SquareMatrix::is_identity() const {
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j) {
            const Rational& e = (*this)(i, j);
            if (i == j ? !e.is_one() : !e.is_zero()) return false;
        }
    return true;
}

SquareMatrix SquareMatrix::scaled(const Rational& s) const {
    SquareMatrix out(ring_, n_);
    const Rational r = ring_.reduce(s);
    for (std::size_t k = 0; k < entries_.size(); ++k) out.entries_[k] = ring_.mul(entries_[k], r);
    return out;
}

SquareMatrix SquareMatrix::power(std::size_t k) const {
    SquareMatrix result = identity(ring_, n_);
    SquareMatrix base = *this;
    while (k > 0) {
        if (k & 1) result = result * base;
        k >>= 1;
        if (k > 0) base = base * base;
    }
    return result;
}

SquareMatrix SquareMatrix::transpose() const {
    SquareMatrix out(ring_, n_);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j) out.entries_[j * n_ + i] = (*this)(i, j);
    return out;
}

SquareMatrix SquareMatrix::embed(const RingSpec& target) const { return SquareMatrix(target, rows()); }

std::uint64_t SquareMatrix::index() const {
    if (!ring_.is_finite()) fail(ErrorCode::UnsupportedRing, "matrix index needs a finite ring");
    const auto q = static_cast<std::uint64_t>(ring_.modulus());
    std::uint64_t idx = 0;
    for (const auto& e : entries_) idx = idx * q + static_cast<std::uint64_t>(*e.to_int64());
    return idx;
}

SquareMatrix SquareMatrix::from_index(const RingSpec& ring, std::size_t n, std::uint64_t index) {
    if (!ring.is_finite()) fail(ErrorCode::UnsupportedRing, "matrix index needs a finite ring");
    SquareMatrix m(ring, n);
    const auto q = static_cast<std::uint64_t>(ring.modulus());
    for (std::size_t k = n * n; k-- > 0;) {
        m.entries_[k] = Rational(static_cast<std::int64_t>(index % q));
        index /= q;
    }
    return m;
}

std::string SquareMatrix::to_string() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < n_; ++i) {
        os << (i ? ", [" : "[");
        for (std::size_t j = 0; j < n_; ++j) os << (j ? ", " : "") << (*this)(i, j);
        os << "]";
    }
    os << "]";
    return os.str();
}

void require_compatible(const SquareMatrix& a, const SquareMatrix& b) {
    if (!(a.ring() == b.ring()))
        fail(ErrorCode::RingMismatch, "ring mismatch: " + a.ring().name() + " vs " + b.ring().name());
    if (a.dim() != b.dim())
        fail(ErrorCode::DimensionMismatch,
             "dimension mismatch: " + std::to_string(a.dim()) + " vs " + std::to_string(b.dim()));
}

SquareMatrix operator+(const SquareMatrix& a, const SquareMatrix& b) {
    require_compatible(a, b);
    SquareMatrix out(a.ring_, a.n_);
    for (std::size_t k = 0; k < a.entries_.size(); ++k)
        out.entries_[k] = a.ring_.add(a.entries_[k], b.entries_[k]);
    return out;
}

SquareMatrix operator-(const SquareMatrix& a, const SquareMatrix& b) {
    require_compatible(a, b);
    SquareMatrix out(a.ring_, a.n_);
    for (std::size_t k = 0; k < a.entries_.size(); ++k)
        out.entries_[k] = a.ring_.sub(a.entries_[k], b.entries_[k]);
    return out;
}

SquareMatrix operator*(const SquareMatrix& a, const SquareMatrix& b) {
    require_compatible(a, b);
    const std::size_t n = a.n_;
    SquareMatrix out(a.ring_, n);
    if (a.ring_.is_finite()) {
        // Residues are < 2^31, so a row of n products accumulates safely
        // for any n we can afford to enumerate.
        const std::int64_t m = a.ring_.modulus();
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                std::int64_t acc = 0;
                for (std::size_t k = 0; k < n; ++k) {
                    acc += *a.entries_[i * n + k].to_int64() * *b.entries_[k * n + j].to_int64();
                    acc %= m;
                }
                out.entries_[i * n + j] = Rational(acc);
            }
        return out;
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            const Rational& aik = a.entries_[i * n + k];
            if (aik.is_zero()) continue;
            for (std::size_t j = 0; j < n; ++j) {
                const Rational& bkj = b.entries_[k * n + j];
                if (!bkj.is_zero()) out.entries_[i * n + j] += aik * bkj;
            }
        }
    return out;
}

SquareMatrix SquareMatrix::operator-() const {
    SquareMatrix out(ring_, n_);
    for (std::size_t k = 0; k < entries_.size(); ++k) out.entries_[k] = ring_.neg(entries_[k]);
    return out;
}

bool operator==(const SquareMatrix& a, const SquareMatrix& b) {
    return a.ring_ == b.ring_ && a.n_ == b.n_ && a.entries_ == b.entries_;
}

namespace {

void require_field(const SquareMatrix& a, const char* op) {
    if (!a.ring().is_field())
        fail(ErrorCode::NotAField, std::string(op) + " requires a field, got " + a.ring().name());
}

using Grid = std::vector<std::vector<Rational>>;

// Reduced row echelon form over a field. Row operations are mirrored onto
// `track` when given, so track ends up as P with P·A = RREF.
std::vector<std::size_t> rref_in_place(const RingSpec& ring, Grid& m, Grid* track) {
    const std::size_t rows = m.size();
    const std::size_t cols = rows ? m[0].size() : 0;
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && m[p][c].is_zero()) ++p;
        if (p == rows) continue;
        std::swap(m[p], m[r]);
        if (track) std::swap((*track)[p], (*track)[r]);
        const Rational inv = ring.inverse(m[r][c]);
        for (auto& v : m[r]) v = ring.mul(v, inv);
        if (track)
            for (auto& v : (*track)[r]) v = ring.mul(v, inv);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c].is_zero()) continue;
            const Rational f = m[i][c];
            for (std::size_t j = 0; j < cols; ++j) m[i][j] = ring.sub(m[i][j], ring.mul(f, m[r][j]));
            if (track)
                for (std::size_t j = 0; j < (*track)[i].size(); ++j)
                    (*track)[i][j] = ring.sub((*track)[i][j], ring.mul(f, (*track)[r][j]));
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

Rational bareiss_det(Grid m) {
    const std::size_t n = m.size();
    Rational prev(1);
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k].is_zero()) {
            std::size_t p = k + 1;
            while (p < n && m[p][k].is_zero()) ++p;
            if (p == n) return Rational();
            std::swap(m[p], m[k]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            m[i][k] = Rational();
        }
        prev = m[k][k];
    }
    return sign > 0 ? m[n - 1][n - 1] : -m[n - 1][n - 1];
}

} // namespace

std::size_t rank(const SquareMatrix& a) {
    require_field(a, "rank");
    Grid m = a.rows();
    return rref_in_place(a.ring(), m, nullptr).size();
}

Rational det(const SquareMatrix& a) {
    const RingSpec& ring = a.ring();
    if (ring.is_field()) {
        Grid m = a.rows();
        const std::size_t n = m.size();
        Rational acc(1);
        for (std::size_t c = 0; c < n; ++c) {
            std::size_t p = c;
            while (p < n && m[p][c].is_zero()) ++p;
            if (p == n) return Rational();
            if (p != c) {
                std::swap(m[p], m[c]);
                acc = ring.neg(acc);
            }
            acc = ring.mul(acc, m[c][c]);
            const Rational inv = ring.inverse(m[c][c]);
            for (std::size_t i = c + 1; i < n; ++i) {
                if (m[i][c].is_zero()) continue;
                const Rational f = ring.mul(m[i][c], inv);
                for (std::size_t j = c; j < n; ++j) m[i][j] = ring.sub(m[i][j], ring.mul(f, m[c][j]));
            }
        }
        return acc;
    }
    // Z and Z/n: fraction-free over the integer representatives; the
    // determinant is a polynomial in the entries, so reducing afterwards is exact.
    return ring.reduce(bareiss_det(a.rows()));
}

SquareMatrix adjugate(const SquareMatrix& a) {
    const std::size_t n = a.dim();
    SquareMatrix adj(a.ring(), n);
    if (n == 1) {
        adj.set(0, 0, Rational(1));
        return adj;
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            SquareMatrix::Rows minor;
            for (std::size_t r = 0; r < n; ++r) {
                if (r == i) continue;
                std::vector<Rational> row;
                for (std::size_t c = 0; c < n; ++c)
                    if (c != j) row.push_back(a(r, c));
                minor.push_back(std::move(row));
            }
            Rational cof = det(SquareMatrix(a.ring(), minor));
            if ((i + j) % 2 == 1) cof = a.ring().neg(cof);
            adj.set(j, i, cof);
        }
    return adj;
}

bool is_invertible(const SquareMatrix& a) { return a.ring().is_unit(det(a)); }

SquareMatrix inverse(const SquareMatrix& a) {
    const RingSpec& ring = a.ring();
    const std::size_t n = a.dim();
    if (ring.is_field()) {
        Grid m = a.rows();
        Grid p = SquareMatrix::identity(ring, n).rows();
        const auto pivots = rref_in_place(ring, m, &p);
        if (pivots.size() < n)
            fail(ErrorCode::NotInvertible, "rank deficiency: rank " + std::to_string(pivots.size()) +
                                               " < " + std::to_string(n) + " for " + a.to_string());
        return SquareMatrix(ring, p);
    }
    const Rational d = det(a);
    if (!ring.is_unit(d))
        fail(ErrorCode::NotInvertible,
             "det " + d.to_string() + " is not a unit in " + ring.name() + " for " + a.to_string());
    return adjugate(a).scaled(ring.inverse(d));
}

RankNormalForm rank_normal_form(const SquareMatrix& a) {
    require_field(a, "rank normal form");
    const RingSpec& ring = a.ring();
    const std::size_t n = a.dim();
    Grid m = a.rows();
    Grid p = SquareMatrix::identity(ring, n).rows();
    const auto pivots = rref_in_place(ring, m, &p);
    const std::size_t r = pivots.size();

    // Column order: pivots first, then the free columns in increasing order.
    std::vector<std::size_t> order = pivots;
    std::vector<bool> is_pivot(n, false);
    for (auto c : pivots) is_pivot[c] = true;
    for (std::size_t c = 0; c < n; ++c)
        if (!is_pivot[c]) order.push_back(c);

    SquareMatrix perm(ring, n);
    for (std::size_t j = 0; j < n; ++j) perm.set(order[j], j, Rational(1));

    // After permuting, RREF reads [[I_r, F], [0, 0]]; [[I, -F], [0, I]] clears F.
    SquareMatrix clear = SquareMatrix::identity(ring, n);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = r; j < n; ++j) clear.set(i, j, ring.neg(m[i][order[j]]));

    return {SquareMatrix(ring, p), perm * clear, r};
}

SquareMatrix inner_inverse(const SquareMatrix& a) {
    require_field(a, "inner inverse");
    auto nf = rank_normal_form(a);
    SquareMatrix core(a.ring(), a.dim());
    for (std::size_t i = 0; i < nf.rank; ++i) core.set(i, i, Rational(1));
    return nf.q * core * nf.p;
}

std::optional<AffineSolution> solve_linear_system(const RingSpec& field, Grid coefficients,
                                                  const std::vector<Rational>& rhs) {
    if (!field.is_field()) fail(ErrorCode::NotAField, "linear solve requires a field, got " + field.name());
    const std::size_t rows = coefficients.size();
    if (rhs.size() != rows) fail(ErrorCode::DimensionMismatch, "right-hand side length mismatch");
    const std::size_t unknowns = rows ? coefficients[0].size() : 0;
    for (std::size_t i = 0; i < rows; ++i) coefficients[i].push_back(field.reduce(rhs[i]));
    const auto pivots = rref_in_place(field, coefficients, nullptr);
    if (!pivots.empty() && pivots.back() == unknowns) return std::nullopt;

    AffineSolution sol;
    sol.particular.assign(unknowns, Rational());
    std::vector<bool> is_pivot(unknowns, false);
    for (std::size_t r = 0; r < pivots.size(); ++r) {
        is_pivot[pivots[r]] = true;
        sol.particular[pivots[r]] = coefficients[r][unknowns];
    }
    for (std::size_t f = 0; f < unknowns; ++f) {
        if (is_pivot[f]) continue;
        std::vector<Rational> v(unknowns);
        v[f] = Rational(1);
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = field.neg(coefficients[r][f]);
        sol.basis.push_back(std::move(v));
    }
    return sol;
}

std::optional<std::size_t> nilpotency_degree(const SquareMatrix& a) {
    const std::size_t bound = a.ring().nilpotency_bound(a.dim());
    SquareMatrix power = a;
    for (std::size_t k = 1; k <= bound; ++k) {
        if (power.is_zero()) return k;
        power = power * a;
    }
    return std::nullopt;
}

bool in_radical(const SquareMatrix& a) {
    if (auto m = a.ring().radical_modulus()) {
        for (const auto& e : a.entries())
            if (*e.to_int64() % *m != 0) return false;
        return true;
    }
    return a.is_zero();
}

} // namespace drazinkit
