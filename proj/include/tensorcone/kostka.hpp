#pragma once

#include <vector>

#include "tensorcone/rootsys.hpp"

namespace tensorcone {

// Coefficients of lam - mu in the simple root basis; lam >= mu in dominance
// order exactly when the decomposition exists with all coefficients >= 0.
struct DominanceCertificate {
    bool in_root_span = false;
    RatVec coefficients;

    bool nonnegative() const {
        if (!in_root_span) return false;
        for (const auto& c : coefficients)
            if (c < 0) return false;
        return true;
    }
};

DominanceCertificate dominance_coefficients(const RootSystem& rs, const Weight& lam, const Weight& mu);
bool dominates(const RootSystem& rs, const Weight& lam, const Weight& mu);

// Vertex v_I(lam) of the dominant weight polytope: the orbit average of lam
// over the parabolic subgroup W_I.
Weight vertex(const RootSystem& rs, const Weight& lam, const std::vector<int>& I);

struct VertexTable {
    Weight weight;
    // one entry per subset I of [n], in increasing bitmask order
    std::vector<std::pair<std::vector<int>, Weight>> entries;
};

VertexTable vertex_table(const RootSystem& rs, const Weight& lam, int max_rank = 8);

struct DedupedVertex {
    Weight vertex;
    std::vector<std::vector<int>> subsets; // every I with v_I equal to this vertex
};

std::vector<DedupedVertex> deduplicate(const VertexTable& table);

} // namespace tensorcone
