#pragma once

#include <array>
#include <optional>
#include <vector>

#include "tensorcone/error.hpp"

namespace tensorcone {

// Weakly decreasing nonnegative integers; trailing zeros trimmed.
struct Partition {
    std::vector<long> parts;

    Partition() = default;
    explicit Partition(std::vector<long> p);

    long size() const;                  // sum of parts
    int length() const { return (int)parts.size(); }
    long part(int i) const { return i < length() ? parts[i] : 0; } // 0-based
    bool empty() const { return parts.empty(); }
    bool contains(const Partition& inner) const;

    bool operator==(const Partition&) const = default;
    bool operator<(const Partition& o) const { return parts < o.parts; }
};

std::string to_string(const Partition& p);

// tau(I) = (i_d - d, ..., i_2 - 2, i_1 - 1) for I = {i_1 < ... < i_d}.
// Errors on empty I; tau_of (below) maps the empty set to the empty partition.
Partition tau(const std::vector<int>& I);
Partition tau_or_empty(const std::vector<int>& I);

// Littlewood-Richardson coefficient c_{lam,mu}^{nu} by exhaustive enumeration
// of LR skew tableaux of shape nu/lam and content mu.
long lr_coefficient(const Partition& lam, const Partition& mu, const Partition& nu);

// Memoized positivity check (shared process-wide cache, mutex guarded).
bool lr_positive(const Partition& lam, const Partition& mu, const Partition& nu);

struct ChainWitness {
    std::array<Partition, 6> alpha;
};

// Existence of partitions alpha_1..alpha_6 with all six LR coefficients
// c_{alpha_i, alpha_{i+1}}^{targets[i]} positive (indices cyclic). The
// targets come in the order (tau(A), tau(C'), tau(B), tau(A'), tau(C),
// tau(B')) of the extended Horn condition.
std::optional<ChainWitness> lr_positive_chain(const std::array<Partition, 6>& targets);

// Number of semistandard Young tableaux of shape p with entries <= n
// (hook content formula); independent route used by the dimension identity.
long ssyt_count(const Partition& p, int n);

} // namespace tensorcone
