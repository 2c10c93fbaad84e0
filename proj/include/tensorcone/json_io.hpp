#pragma once

#include <string>

#include "tensorcone/cones.hpp"
#include "tensorcone/kostka.hpp"
#include "tensorcone/oracle.hpp"
#include "tensorcone/verifier.hpp"
#include "tensorcone/weyl.hpp"

namespace tensorcone {

inline constexpr const char* kJsonSchema = "tensorcone/1";

// Weight: {"family":"B","rank":2,"coords":["3/2","1/2"]}
std::string weight_to_json_string(const Weight& w);
Weight weight_from_json_string(const std::string& text);

// WeylElement: {"family":"D","rank":3,"images":[-3,1,-2]}
std::string weyl_to_json_string(const WeylElement& w);
WeylElement weyl_from_json_string(const std::string& text);

// Partition: [3,2,1]
std::string partition_to_json_string(const Partition& p);
Partition partition_from_json_string(const std::string& text);

std::string vertex_table_to_json_string(const VertexTable& t);
std::string dominance_to_json_string(const DominanceCertificate& c);
std::string verdict_to_json_string(const MembershipVerdict& v);
std::string equality_report_to_json_string(const EqualityReport& r);
std::string sweep_to_json_string(const RootSystem& rs, int bound, const std::vector<EqualityReport>& reports);
std::string decomposition_to_json_string(const RootSystem& rs, const std::map<RatVec, Int>& components);
std::string ap_witness_to_json_string(const ApWitness& w);

// Weight multiplicity tables (the oracle's cache file format).
std::string mult_table_to_json_string(const WeightMultTable& t);
WeightMultTable mult_table_from_json_string(const std::string& text);

} // namespace tensorcone
