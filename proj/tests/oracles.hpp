#pragma once

// Reference implementations used only by the tests. They work on plain
// integers and share no code with the library.

#include <array>
#include <cstdint>
#include <vector>

namespace oracle {

using IntGrid = std::vector<std::vector<long long>>;

/// Laplace expansion along the first row.
inline long long det_cofactor(const IntGrid& m) {
    const std::size_t n = m.size();
    if (n == 0) return 1;
    if (n == 1) return m[0][0];
    long long total = 0;
    for (std::size_t col = 0; col < n; ++col) {
        IntGrid minor;
        for (std::size_t i = 1; i < n; ++i) {
            std::vector<long long> row;
            for (std::size_t j = 0; j < n; ++j)
                if (j != col) row.push_back(m[i][j]);
            minor.push_back(row);
        }
        const long long term = m[0][col] * det_cofactor(minor);
        total += (col % 2 == 0) ? term : -term;
    }
    return total;
}

/// det(t·I - A) for an integer point t.
inline long long char_poly_at(const IntGrid& a, long long t) {
    IntGrid m = a;
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m.size(); ++j) m[i][j] = (i == j ? t : 0) - a[i][j];
    return det_cofactor(m);
}

/// 2x2 matrices over GF(2) packed as 4 bits: bit (2i + j) holds entry (i, j).
inline unsigned gf2_mul(unsigned x, unsigned y) {
    auto at = [](unsigned m, unsigned i, unsigned j) { return (m >> (2 * i + j)) & 1u; };
    unsigned out = 0;
    for (unsigned i = 0; i < 2; ++i)
        for (unsigned j = 0; j < 2; ++j) {
            const unsigned v = (at(x, i, 0) & at(y, 0, j)) ^ (at(x, i, 1) & at(y, 1, j));
            out |= v << (2 * i + j);
        }
    return out;
}

/// Number of (a, b, c, d) in M_2(GF(2))^4 with bdb = bac and dbd = acd.
inline std::uint64_t count_intertwined_gf2() {
    std::array<std::array<unsigned, 16>, 16> table{};
    for (unsigned x = 0; x < 16; ++x)
        for (unsigned y = 0; y < 16; ++y) table[x][y] = gf2_mul(x, y);
    std::uint64_t count = 0;
    for (unsigned a = 0; a < 16; ++a)
        for (unsigned c = 0; c < 16; ++c) {
            const unsigned ac = table[a][c];
            for (unsigned b = 0; b < 16; ++b)
                for (unsigned d = 0; d < 16; ++d) {
                    const unsigned bd = table[b][d];
                    if (table[bd][b] == table[b][ac] && table[d][bd] == table[ac][d]) ++count;
                }
        }
    return count;
}

/// Number of (a, b, c, d) in (Z/n)^4 with the relations, scalars commuting.
inline std::uint64_t count_intertwined_scalar(unsigned n) {
    std::uint64_t count = 0;
    for (unsigned a = 0; a < n; ++a)
        for (unsigned b = 0; b < n; ++b)
            for (unsigned c = 0; c < n; ++c)
                for (unsigned d = 0; d < n; ++d)
                    if ((b * d * b) % n == (b * a * c) % n && (d * b * d) % n == (a * c * d) % n) ++count;
    return count;
}

} // namespace oracle
