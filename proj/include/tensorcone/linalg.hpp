#pragma once

#include <optional>
#include <vector>

#include "tensorcone/rational.hpp"

namespace tensorcone {

// Exact Gaussian elimination on the augmented system [M | b], M row-major.
// Returns the solution when it exists and is unique; nullopt when the system
// is inconsistent or underdetermined.
std::optional<RatVec> solve_linear(std::vector<RatVec> rows, RatVec rhs);

} // namespace tensorcone
