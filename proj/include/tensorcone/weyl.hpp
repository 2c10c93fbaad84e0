#pragma once

#include <vector>

#include "tensorcone/rootsys.hpp"

namespace tensorcone {

// Weyl group element in one-line notation. Family A stores a permutation of
// [rank+1]; B/C/D store a signed permutation of [rank] (negative image means
// a sign flip). Family D admits only an even number of negatives.
struct WeylElement {
    LieType type;
    std::vector<int> images;

    static WeylElement identity(LieType t);
    static WeylElement simple_reflection(LieType t, int i); // 1-based generator index
    static WeylElement from_word(LieType t, const std::vector<int>& word);

    int letters() const { return (int)images.size(); }
    // v(i) with the signed convention v(-i) = -v(i).
    int apply(int i) const;
    WeylElement inverse() const;
    bool is_identity() const;
    // Determinant of the underlying orthogonal map, = (-1)^(Coxeter length).
    int det() const;
    void validate() const;

    bool operator==(const WeylElement&) const = default;
    bool operator<(const WeylElement& o) const { return images < o.images; }
};

// (u v)(i) = u(v(i)).
WeylElement compose(const WeylElement& u, const WeylElement& v);

// Coordinate action: (v.w)_{|v(i)|} = sign(v(i)) w_i.
Weight act(const WeylElement& v, const Weight& w);

// All elements of the parabolic subgroup W_I (1-based generator indices),
// by breadth-first closure; sorted, no duplicates.
std::vector<WeylElement> parabolic_elements(const RootSystem& rs, const std::vector<int>& I);

// Longest element of W_I.
WeylElement longest_element(const RootSystem& rs, const std::vector<int>& I);

// Coxeter length (distance from identity in the Cayley graph of W).
int coxeter_length(const RootSystem& rs, const WeylElement& v);

// A reduced word for v (1-based generator indices).
std::vector<int> reduced_word(const RootSystem& rs, const WeylElement& v);

// mu(v x_P) for P = P_r via the one-line formula sum_{i<=r} mu_{v(i)} with
// mu_{-i} = -mu_i; family A sums coordinates without signs.
Rat pair_xP(const Weight& mu, const WeylElement& v, int r);

} // namespace tensorcone
