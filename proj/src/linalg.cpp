#include "tensorcone/linalg.hpp"

namespace tensorcone {

std::optional<RatVec> solve_linear(std::vector<RatVec> rows, RatVec rhs) {
    const std::size_t m = rows.size();
    require(m == rhs.size(), Errc::invalid_argument, "solve_linear: shape mismatch");
    const std::size_t n = m == 0 ? 0 : rows[0].size();
    for (const auto& r : rows)
        require(r.size() == n, Errc::invalid_argument, "solve_linear: ragged matrix");

    std::vector<std::size_t> pivot_row_of_col(n, SIZE_MAX);
    std::size_t r = 0;
    for (std::size_t c = 0; c < n && r < m; ++c) {
        std::size_t p = r;
        while (p < m && rows[p][c] == 0) ++p;
        if (p == m) continue;
        std::swap(rows[p], rows[r]);
        std::swap(rhs[p], rhs[r]);
        Rat inv = 1 / rows[r][c];
        for (std::size_t j = c; j < n; ++j) rows[r][j] *= inv;
        rhs[r] *= inv;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == r || rows[i][c] == 0) continue;
            Rat f = rows[i][c];
            for (std::size_t j = c; j < n; ++j) rows[i][j] -= f * rows[r][j];
            rhs[i] -= f * rhs[r];
        }
        pivot_row_of_col[c] = r;
        ++r;
    }
    if (r < n) return std::nullopt; // rank deficient: no unique solution
    for (std::size_t i = r; i < m; ++i)
        if (rhs[i] != 0) return std::nullopt; // inconsistent

    RatVec x(n);
    for (std::size_t c = 0; c < n; ++c) x[c] = rhs[pivot_row_of_col[c]];
    return x;
}

} // namespace tensorcone
