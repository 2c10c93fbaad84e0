#pragma once

#include <vector>

#include "tensorcone/cones.hpp"
#include "tensorcone/kostka.hpp"
#include "tensorcone/oracle.hpp"

namespace tensorcone {

// Closed form of the main characterization: lam = N rho in families A/D,
// lam = N rho + k omega_n with N >= 0, k >= -N in families B/C.
bool predict(const RootSystem& rs, const Weight& lam);

struct VertexVerdict {
    std::vector<std::vector<int>> subsets; // all I with v_I(2 lam) equal to this vertex
    Weight vertex;
    MembershipVerdict verdict;
};

struct EqualityReport {
    Weight lam;
    bool predicted = false;
    bool computed = false;
    std::vector<VertexVerdict> per_vertex;
};

// Decides D_{2 lam} = T_lam vertex by vertex: Horn in family A, extended
// Horn in B/C, the saturation oracle in family D.
EqualityReport decide_equality(const RootSystem& rs, const Weight& lam,
                               MultiplicityCache* cache = nullptr);

struct ApWitness {
    Weight mu; // v_{m, m+1}(2 lam)
    Rat lhs_pair, rhs_pair;
    bool holds_pair = false; // mu_{m+1} + mu_{m+2} <= 2 (lam_m + lam_{m+2})
    Rat lhs_single, rhs_single;
    bool holds_single = false; // mu_{m+2} <= 2 lam_{m+1}
};

// The arithmetic-progression obstruction: requires lam_m + lam_{m+2} !=
// 2 lam_{m+1}; exactly one of the two inequalities fails on the returned
// vertex.
ApWitness ap_obstruction_witness(const RootSystem& rs, const Weight& lam, int m);

// All dominant integral weights with coordinates bounded by `bound` in
// absolute value, graded-lexicographic order.
std::vector<Weight> enumerate_dominant_integral(const LieType& t, int bound);

std::vector<EqualityReport> sweep(const RootSystem& rs, int bound, MultiplicityCache* cache = nullptr);

} // namespace tensorcone
