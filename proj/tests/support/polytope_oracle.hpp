#pragma once

// Independent extreme-point enumeration for the dominant weight polytope
// {mu dominant : lam >= mu}, used to validate the orbit-average vertex
// formula. Works in the coefficient space lam - mu = sum c_i alpha_i with the
// inequalities c_i >= 0 and <mu, alpha_j^vee> >= 0, enumerating basic
// solutions of every n-subset of the 2n inequalities. Deliberately
// self-contained: it shares no linear algebra with the library.

#include <optional>
#include <set>
#include <vector>

#include "tensorcone/rootsys.hpp"

namespace tctest {

using tensorcone::Rat;
using tensorcone::RatVec;

// Gaussian elimination, local to the oracle.
inline std::optional<RatVec> solve_square(std::vector<RatVec> m, RatVec b) {
    const std::size_t n = b.size();
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && m[p][c] == 0) ++p;
        if (p == n) return std::nullopt;
        std::swap(m[p], m[c]);
        std::swap(b[p], b[c]);
        Rat inv = 1 / m[c][c];
        for (std::size_t j = 0; j < n; ++j) m[c][j] *= inv;
        b[c] *= inv;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c || m[i][c] == 0) continue;
            Rat f = m[i][c];
            for (std::size_t j = 0; j < n; ++j) m[i][j] -= f * m[c][j];
            b[i] -= f * b[c];
        }
    }
    return b;
}

inline std::set<RatVec> polytope_vertices(const tensorcone::RootSystem& rs,
                                          const tensorcone::Weight& lam) {
    const int n = rs.rank();
    // inequalities <row, c> >= rhs
    std::vector<RatVec> rows;
    std::vector<Rat> rhs;
    for (int i = 0; i < n; ++i) {
        RatVec e(n, Rat(0));
        e[i] = 1;
        rows.push_back(e); // c_i >= 0
        rhs.push_back(Rat(0));
    }
    for (int j = 0; j < n; ++j) {
        RatVec row(n);
        for (int i = 0; i < n; ++i)
            row[i] = -rs.coroot_pairing(rs.simple_roots[i], rs.simple_roots[j]);
        rows.push_back(row); // <lam - sum c alpha, alpha_j^vee> >= 0
        rhs.push_back(-rs.coroot_pairing(lam, rs.simple_roots[j]));
    }

    std::set<RatVec> vertices;
    const int total = 2 * n;
    std::vector<int> pick(n);
    auto emit = [&](const RatVec& c) {
        for (std::size_t k = 0; k < rows.size(); ++k) {
            Rat v = 0;
            for (int i = 0; i < n; ++i) v += rows[k][i] * c[i];
            if (v < rhs[k]) return; // infeasible basic solution
        }
        RatVec mu = lam.coords;
        for (int i = 0; i < n; ++i)
            mu = tensorcone::vec_sub(mu, tensorcone::vec_scale(c[i], rs.simple_roots[i].coords));
        vertices.insert(mu);
    };
    auto rec = [&](auto&& self, int pos, int next) -> void {
        if (pos == n) {
            std::vector<RatVec> m;
            RatVec b;
            for (int k : pick) {
                m.push_back(rows[k]);
                b.push_back(rhs[k]);
            }
            if (auto c = solve_square(std::move(m), std::move(b))) emit(*c);
            return;
        }
        for (int k = next; k < total; ++k) {
            pick[pos] = k;
            self(self, pos + 1, k + 1);
        }
    };
    rec(rec, 0, 0);
    return vertices;
}

} // namespace tctest
