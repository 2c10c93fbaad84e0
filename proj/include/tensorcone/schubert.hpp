#pragma once

#include <map>
#include <vector>

#include "tensorcone/weyl.hpp"

namespace tensorcone {

// Integer polynomial in x_1..x_k, sparse map from exponent vectors.
struct SchubertPolynomial {
    std::map<std::vector<int>, long long> terms;

    bool is_zero() const { return terms.empty(); }
    int degree() const;
    bool operator==(const SchubertPolynomial&) const = default;
};

SchubertPolynomial poly_mul(const SchubertPolynomial& a, const SchubertPolynomial& b);
SchubertPolynomial poly_sub(const SchubertPolynomial& a, const SchubertPolynomial& b);
SchubertPolynomial poly_scale(long long c, const SchubertPolynomial& p);
std::string to_string(const SchubertPolynomial& p);

// Permutations in one-line notation (trailing fixed points irrelevant).
int permutation_length(const std::vector<int>& w); // inversions
std::vector<int> lehmer_code(const std::vector<int>& w);
std::vector<int> permutation_from_code(const std::vector<int>& code);
std::vector<int> trim_permutation(std::vector<int> w);

// Schubert polynomial of w; resource guard: w in S_n with n <= 6 at the
// public entry (internal recursion is unbounded).
SchubertPolynomial schubert_poly(const std::vector<int>& w);

// Unguarded variant for permutations of any size, as they arise in product
// expansions (the polynomials are stable under the inclusions S_n < S_m).
SchubertPolynomial stable_schubert_poly(const std::vector<int>& w);

// Structure constant c_{u,v}^w of H*(SL(n)/B) in the Schubert basis,
// extracted from the polynomial product by the transition expansion.
// Returns 0 unless l(u) + l(v) = l(w). Guard: n <= 5.
long long structure_constant(const std::vector<int>& u, const std::vector<int>& v, const std::vector<int>& w);

// Full Schubert expansion of schubert_poly(u) * schubert_poly(v):
// map from permutation one-line (trimmed) to coefficient. The remainder of
// the expansion is required to be identically zero.
std::map<std::vector<int>, long long> schubert_expand_product(const std::vector<int>& u,
                                                              const std::vector<int>& v);

// The D3 <-> A3 dictionary: alpha_1 = e1-e2, alpha_2 = e2-e3, alpha_3 = e2+e3
// matched with beta_1 = e2-e3, beta_2 = e1-e2, beta_3 = e3-e4. The induced
// map on Weyl groups sends s_{alpha_i} to s_{beta_i}.
struct DynkinDictionary {
    std::vector<std::pair<Weight, Weight>> pairs; // (alpha_i of D3, beta_i of A3)
};
DynkinDictionary d3_a3_dictionary();

// Image of a D3 Weyl element in S4 under the dictionary, by rewriting a
// reduced word.
std::vector<int> d3_to_a3(const WeylElement& w);

} // namespace tensorcone
