#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tensorcone/lr.hpp"
#include "tensorcone/rootsys.hpp"
#include "tensorcone/weyl.hpp"

namespace tensorcone {

// A Horn triple for sl_n: subsets I, J, K of [n] of equal cardinality d < n
// with c_{tau(I), tau(J)}^{tau(K)} > 0.
struct HornTriple {
    int d;
    std::vector<int> I, J, K;
};

// All Horn triples for sl_n, d ascending then lexicographic; cached per n.
const std::vector<HornTriple>& horn_triples(int n);

struct HornCertificate {
    HornTriple triple;
    Rat nu_side;     // sum_{k in K} nu_k
    Rat lambda_side; // sum_I lambda + sum_J mu
};

// Extended Horn datum for the sp_{2n} saturated cone: disjoint pairs
// (A,A'), (B,B'), (C,C') with the size conditions and an LR-positive
// cyclic witness chain.
struct ExtHornDatum {
    std::vector<int> A, Ap, B, Bp, C, Cp;
    int r = 0;
    ChainWitness witness;
};

// All data for rank n satisfying conditions (1)-(3); cached per n.
const std::vector<ExtHornDatum>& ext_horn_data(int n);

struct ExtHornCertificate {
    ExtHornDatum datum;
    Rat value; // the inequality reads 0 <= value
};

struct MembershipVerdict {
    bool member = false;
    std::string method; // "horn" | "ext-horn" | "oracle"
    std::string reason; // set when member == false
    std::optional<HornCertificate> horn_certificate;
    std::optional<ExtHornCertificate> ext_certificate;
};

// Family A: (lam, mu, nu) in the saturated tensor cone iff the coordinate
// sums match and every Horn inequality holds.
MembershipVerdict horn_member(const RootSystem& rs, const Weight& lam, const Weight& mu, const Weight& nu);

// Families B and C (identical verdicts under the coordinate identification
// e_i -> e_i): extended Horn inequality system.
MembershipVerdict ext_horn_member(const RootSystem& rs, const Weight& lam, const Weight& mu, const Weight& nu);

// Left-hand side of the Berenstein-Sjamaar inequality
// lam(u x_P) + mu(v x_P) + nu*(w x_P) for P = P_r, via the one-line formula.
Rat evaluate_tpineq(const RootSystem& rs, const Weight& lam, const Weight& mu, const Weight& nu, int r,
                    const WeylElement& u, const WeylElement& v, const WeylElement& w);

// Signed permutation with the first r entries realizing (neg, pos) as the
// sets of negative/positive values; used to convert extended Horn data into
// Weyl elements for the pairing identities.
WeylElement datum_to_weyl(const LieType& t, const std::vector<int>& neg, const std::vector<int>& pos, int r);

} // namespace tensorcone
