#include "tensorcone/kostka.hpp"

#include <algorithm>

#include "tensorcone/weyl.hpp"

namespace tensorcone {

DominanceCertificate dominance_coefficients(const RootSystem& rs, const Weight& lam, const Weight& mu) {
    require(lam.type == rs.type && mu.type == rs.type, Errc::invalid_argument,
            "dominance_coefficients: type mismatch");
    DominanceCertificate cert;
    auto c = rs.root_coefficients(vec_sub(lam.coords, mu.coords));
    if (!c) return cert; // family A with unequal coordinate sums
    cert.in_root_span = true;
    cert.coefficients = std::move(*c);
    return cert;
}

bool dominates(const RootSystem& rs, const Weight& lam, const Weight& mu) {
    return dominance_coefficients(rs, lam, mu).nonnegative();
}

Weight vertex(const RootSystem& rs, const Weight& lam, const std::vector<int>& I) {
    require(lam.type == rs.type, Errc::invalid_argument, "vertex: type mismatch");
    require(lam.is_dominant(), Errc::invalid_argument, "vertex requires a dominant weight");
    auto elements = parabolic_elements(rs, I);
    RatVec sum(rs.ambient(), Rat(0));
    for (const auto& w : elements) sum = vec_add(sum, act(w, lam).coords);
    return Weight{rs.type, vec_scale(Rat(1, (long)elements.size()), sum)};
}

VertexTable vertex_table(const RootSystem& rs, const Weight& lam, int max_rank) {
    const int n = rs.rank();
    require(n <= max_rank, Errc::resource_limit,
            "vertex_table: rank " + std::to_string(n) + " exceeds enumeration bound " + std::to_string(max_rank));
    VertexTable table;
    table.weight = lam;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        std::vector<int> I;
        for (int i = 0; i < n; ++i)
            if (mask & (1u << i)) I.push_back(i + 1);
        table.entries.emplace_back(I, vertex(rs, lam, I));
    }
    return table;
}

std::vector<DedupedVertex> deduplicate(const VertexTable& table) {
    std::vector<DedupedVertex> out;
    for (const auto& [I, v] : table.entries) {
        auto it = std::find_if(out.begin(), out.end(),
                               [&](const DedupedVertex& d) { return d.vertex.same_weight(v); });
        if (it == out.end())
            out.push_back(DedupedVertex{v, {I}});
        else
            it->subsets.push_back(I);
    }
    return out;
}

} // namespace tensorcone
