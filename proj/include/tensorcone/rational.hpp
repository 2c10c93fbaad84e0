#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "tensorcone/error.hpp"

namespace tensorcone {

using Int = mpz_class;
using Rat = mpq_class;
using RatVec = std::vector<Rat>;

// Accepts "3", "-3", "3/2", "-3/2"; always canonicalized.
Rat rat_from_string(const std::string& s);
std::string rat_to_string(const Rat& q);

inline bool rat_is_integer(const Rat& q) { return q.get_den() == 1; }

// q must be an integer that fits in long.
long rat_to_long(const Rat& q);

Int denominator_lcm(const RatVec& v);

Rat dot(const RatVec& a, const RatVec& b);
Rat vec_sum(const RatVec& v);
RatVec vec_add(const RatVec& a, const RatVec& b);
RatVec vec_sub(const RatVec& a, const RatVec& b);
RatVec vec_scale(const Rat& c, const RatVec& v);

std::string vec_to_string(const RatVec& v);

} // namespace tensorcone
