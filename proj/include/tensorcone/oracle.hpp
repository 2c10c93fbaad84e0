#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "tensorcone/rootsys.hpp"

namespace tensorcone {

struct OracleLimits {
    std::size_t max_table_entries = 1'000'000;
    std::size_t max_weyl_order = 50'000;
};

// Dominant chamber representative of an arbitrary point, no sign tracking.
RatVec dominant_representative(const LieType& t, RatVec x);

// Representative together with the determinant of the Weyl element used;
// regular = false when the point lies on a reflection wall.
struct ChamberRep {
    RatVec rep;
    int det = 1;
    bool regular = true;
};
ChamberRep regular_dominant_rep(const LieType& t, RatVec x);

// Full Weyl orbit of a point, as distinct coordinate vectors.
std::vector<RatVec> weyl_orbit(const RootSystem& rs, const RatVec& x);

// Weight multiplicities of V_lambda stored on the dominant chamber.
struct WeightMultTable {
    Weight highest;
    std::map<RatVec, Int> mult;

    // W-invariant lookup; zero when absent.
    Int multiplicity(const RatVec& any_point) const;
};

// Freudenthal recursion over all dominant integral mu <= lambda.
WeightMultTable weight_multiplicities(const RootSystem& rs, const Weight& lam,
                                      const OracleLimits& limits = {});

// Shared table cache; optionally backed by a directory of JSON files
// (advisory: recomputation must reproduce cached content exactly).
class MultiplicityCache {
public:
    MultiplicityCache() = default;
    explicit MultiplicityCache(std::string cache_dir) : dir_(std::move(cache_dir)) {}

    std::shared_ptr<const WeightMultTable> get(const RootSystem& rs, const Weight& lam,
                                               const OracleLimits& limits = {});

private:
    std::mutex mutex_;
    std::map<std::string, std::shared_ptr<const WeightMultTable>> memo_;
    std::string dir_;
};

// Multiplicity of V_nu in V_lambda (x) V_mu by the alternating Weyl sum over
// the weight multiplicities of mu.
Int tensor_multiplicity(const RootSystem& rs, const Weight& lam, const Weight& mu, const Weight& nu,
                        MultiplicityCache* cache = nullptr, const OracleLimits& limits = {});

// Full decomposition of V_lambda (x) V_mu as map nu -> multiplicity
// (Brauer-Klimyk over the expanded weight system of mu).
std::map<RatVec, Int> tensor_decompose(const RootSystem& rs, const Weight& lam, const Weight& mu,
                                       MultiplicityCache* cache = nullptr, const OracleLimits& limits = {});

// d = 1 in family A, 2 in B/C/D.
int saturation_factor(Family f);

// Saturated tensor cone membership for rational dominant triples: scale to an
// integral triple with lambda+mu-nu in the root lattice, then test
// c_{d t lam, d t mu}^{d t nu} > 0. d_override replaces the built-in factor
// when positive.
bool saturated_member(const RootSystem& rs, const Weight& lam, const Weight& mu, const Weight& nu,
                      MultiplicityCache* cache = nullptr, const OracleLimits& limits = {},
                      int d_override = 0);

} // namespace tensorcone
