#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tensorcone/rational.hpp"

namespace tensorcone {

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D' };

Family family_from_char(char c);
inline char family_char(Family f) { return static_cast<char>(f); }

struct LieType {
    Family family;
    int rank;

    // Family A weights carry rank+1 coordinates, all others rank.
    int ambient() const { return family == Family::A ? rank + 1 : rank; }
    bool operator==(const LieType&) const = default;
};

// Throws on invalid rank (A/B/C need rank >= 1, D needs rank >= 3).
void validate(const LieType& t);
std::string to_string(const LieType& t);

// A weight in the e_i coordinates of its type. Family A weights are
// identified modulo the constant vector; normalized() picks the
// representative with smallest coordinate 0.
struct Weight {
    LieType type;
    RatVec coords;

    Rat sum() const { return vec_sum(coords); }
    bool is_dominant() const;
    bool is_integral_weight() const;
    bool is_zero() const;
    Weight normalized() const;
    // Equality as weights: exact in B/C/D, modulo constant shift in A.
    bool same_weight(const Weight& other) const;
    bool operator==(const Weight& other) const = default;
    bool operator<(const Weight& other) const;
};

Weight operator+(const Weight& a, const Weight& b);
Weight operator-(const Weight& a, const Weight& b);
Weight operator*(const Rat& c, const Weight& w);
std::string to_string(const Weight& w);

struct RootSystem {
    LieType type;
    std::vector<Weight> simple_roots;        // alpha_1 .. alpha_n
    std::vector<Weight> fundamental_weights; // omega_1 .. omega_n
    Weight rho;                              // = sum of fundamental weights
    std::vector<RatVec> x_vectors;           // alpha_i(x_j) = delta_ij
    std::vector<Weight> positive_roots;      // closure from the simple roots

    static RootSystem build(LieType t);

    int rank() const { return type.rank; }
    int ambient() const { return type.ambient(); }

    // <w, alpha^vee> for a root alpha.
    Rat coroot_pairing(const Weight& w, const Weight& root) const;

    // Evaluation of w on x_j (1-based index). In family A the x_j are
    // normalized to the sum-zero hyperplane.
    Rat pair_x(const Weight& w, int x_index) const;

    // mu* = -w0 mu; requires mu dominant. Identity in B/C and even-rank D.
    Weight dual(const Weight& w) const;

    // Half-sum of the positive roots; must agree with rho.
    Weight half_sum_positive_roots() const;

    // Solve v = sum c_i alpha_i; nullopt when v is not in the root span
    // (family A with nonzero coordinate sum).
    std::optional<RatVec> root_coefficients(const RatVec& v) const;

    // Classification of a connected sub-diagram selected by 1-based nodes.
    LieType sub_type(const std::vector<int>& sub_nodes) const;

    // Orthogonal projection onto span of the selected sub-diagram, expressed
    // in the sub-root-system's own coordinates. sub_nodes must be nonempty
    // and connected in the Dynkin diagram.
    Weight project(const Weight& w, const std::vector<int>& sub_nodes) const;

    // dim V_lambda for dominant integral lambda (Weyl dimension formula).
    Int weyl_dimension(const Weight& lam) const;

    Weight zero_weight() const;
    Weight weight(RatVec coords) const;
};

} // namespace tensorcone
