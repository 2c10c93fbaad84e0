#include "tensorcone/json_io.hpp"

#include <json.hpp>

namespace tensorcone {

using nlohmann::json;

namespace {

json coords_to_json(const RatVec& v) {
    json a = json::array();
    for (const auto& q : v) a.push_back(rat_to_string(q));
    return a;
}

RatVec coords_from_json(const json& a) {
    require(a.is_array(), Errc::invalid_argument, "expected a JSON array of rationals");
    RatVec v;
    for (const auto& e : a) {
        if (e.is_number_integer())
            v.push_back(Rat((long)e.get<long long>()));
        else if (e.is_string())
            v.push_back(rat_from_string(e.get<std::string>()));
        else
            fail(Errc::invalid_argument, "coordinates must be strings or integers");
    }
    return v;
}

json weight_to_json(const Weight& w) {
    return json{{"family", std::string(1, family_char(w.type.family))},
                {"rank", w.type.rank},
                {"coords", coords_to_json(w.coords)}};
}

Weight weight_from_json(const json& j) {
    require(j.is_object() && j.contains("family") && j.contains("rank") && j.contains("coords"),
            Errc::invalid_argument, "weight JSON needs family, rank, coords");
    std::string fam = j["family"].get<std::string>();
    require(fam.size() == 1, Errc::invalid_argument, "family must be a single letter");
    LieType t{family_from_char(fam[0]), j["rank"].get<int>()};
    validate(t);
    RatVec coords = coords_from_json(j["coords"]);
    require((int)coords.size() == t.ambient(), Errc::invalid_argument,
            "expected " + std::to_string(t.ambient()) + " coordinates for " + to_string(t));
    return Weight{t, std::move(coords)};
}

json subset_to_json(const std::vector<int>& I) {
    json a = json::array();
    for (int i : I) a.push_back(i);
    return a;
}

json partition_to_json(const Partition& p) {
    json a = json::array();
    for (long q : p.parts) a.push_back(q);
    return a;
}

json verdict_to_json(const MembershipVerdict& v) {
    json j{{"member", v.member}, {"method", v.method}};
    if (!v.reason.empty()) j["reason"] = v.reason;
    if (v.horn_certificate) {
        const auto& c = *v.horn_certificate;
        j["certificate"] = json{{"d", c.triple.d},
                                {"I", subset_to_json(c.triple.I)},
                                {"J", subset_to_json(c.triple.J)},
                                {"K", subset_to_json(c.triple.K)},
                                {"nu_side", rat_to_string(c.nu_side)},
                                {"lambda_mu_side", rat_to_string(c.lambda_side)}};
    }
    if (v.ext_certificate) {
        const auto& c = *v.ext_certificate;
        json witness = json::array();
        for (const auto& a : c.datum.witness.alpha) witness.push_back(partition_to_json(a));
        j["certificate"] = json{{"r", c.datum.r},
                                {"A", subset_to_json(c.datum.A)},
                                {"A'", subset_to_json(c.datum.Ap)},
                                {"B", subset_to_json(c.datum.B)},
                                {"B'", subset_to_json(c.datum.Bp)},
                                {"C", subset_to_json(c.datum.C)},
                                {"C'", subset_to_json(c.datum.Cp)},
                                {"witness", witness},
                                {"value", rat_to_string(c.value)}};
    }
    return j;
}

json equality_report_to_json(const EqualityReport& r) {
    json per = json::array();
    for (const auto& v : r.per_vertex) {
        json subsets = json::array();
        for (const auto& I : v.subsets) subsets.push_back(subset_to_json(I));
        per.push_back(json{{"I", subset_to_json(v.subsets.front())},
                           {"all_I", subsets},
                           {"vertex", coords_to_json(v.vertex.coords)},
                           {"member", v.verdict.member},
                           {"method", v.verdict.method},
                           {"certificate", v.verdict.member ? json(nullptr) : verdict_to_json(v.verdict)}});
    }
    return json{{"schema", kJsonSchema},
                {"weight", weight_to_json(r.lam)},
                {"predicted", r.predicted},
                {"computed", r.computed},
                {"equality", r.computed},
                {"per_vertex", per}};
}

} // namespace

std::string weight_to_json_string(const Weight& w) { return weight_to_json(w).dump(); }

Weight weight_from_json_string(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    require(!j.is_discarded(), Errc::invalid_argument, "invalid JSON");
    return weight_from_json(j);
}

std::string weyl_to_json_string(const WeylElement& w) {
    json images = json::array();
    for (int i : w.images) images.push_back(i);
    return json{{"family", std::string(1, family_char(w.type.family))},
                {"rank", w.type.rank},
                {"images", images}}
        .dump();
}

WeylElement weyl_from_json_string(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    require(!j.is_discarded() && j.is_object(), Errc::invalid_argument, "invalid JSON");
    require(j.contains("family") && j.contains("rank") && j.contains("images"), Errc::invalid_argument,
            "Weyl element JSON needs family, rank, images");
    std::string fam = j["family"].get<std::string>();
    require(fam.size() == 1, Errc::invalid_argument, "family must be a single letter");
    LieType t{family_from_char(fam[0]), j["rank"].get<int>()};
    validate(t);
    std::vector<int> images;
    for (const auto& e : j["images"]) images.push_back(e.get<int>());
    WeylElement w{t, std::move(images)};
    w.validate();
    return w;
}

std::string partition_to_json_string(const Partition& p) { return partition_to_json(p).dump(); }

Partition partition_from_json_string(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    require(!j.is_discarded() && j.is_array(), Errc::invalid_argument, "partition JSON must be an array");
    std::vector<long> parts;
    for (const auto& e : j) parts.push_back(e.get<long>());
    return Partition(std::move(parts));
}

std::string vertex_table_to_json_string(const VertexTable& t) {
    json entries = json::array();
    for (const auto& [I, v] : t.entries)
        entries.push_back(json{{"I", subset_to_json(I)}, {"vertex", coords_to_json(v.coords)}});
    return json{{"schema", kJsonSchema}, {"weight", weight_to_json(t.weight)}, {"vertices", entries}}.dump();
}

std::string dominance_to_json_string(const DominanceCertificate& c) {
    json j{{"schema", kJsonSchema}, {"in_root_span", c.in_root_span}, {"dominates", c.nonnegative()}};
    if (c.in_root_span) j["coefficients"] = coords_to_json(c.coefficients);
    return j.dump();
}

std::string verdict_to_json_string(const MembershipVerdict& v) {
    json j = verdict_to_json(v);
    j["schema"] = kJsonSchema;
    return j.dump();
}

std::string equality_report_to_json_string(const EqualityReport& r) {
    return equality_report_to_json(r).dump();
}

std::string sweep_to_json_string(const RootSystem& rs, int bound, const std::vector<EqualityReport>& reports) {
    json arr = json::array();
    std::size_t agree = 0, equal = 0;
    for (const auto& r : reports) {
        arr.push_back(equality_report_to_json(r));
        if (r.predicted == r.computed) ++agree;
        if (r.computed) ++equal;
    }
    return json{{"schema", kJsonSchema},
                {"family", std::string(1, family_char(rs.type.family))},
                {"rank", rs.rank()},
                {"bound", bound},
                {"reports", arr},
                {"summary",
                 json{{"total", reports.size()}, {"agree", agree}, {"equality_holds", equal}}}}
        .dump();
}

std::string decomposition_to_json_string(const RootSystem& rs, const std::map<RatVec, Int>& components) {
    json arr = json::array();
    for (const auto& [nu, mult] : components) {
        Weight w{rs.type, nu};
        arr.push_back(json{{"weight", coords_to_json(nu)},
                           {"multiplicity", mult.get_str()},
                           {"dimension", rs.weyl_dimension(w).get_str()}});
    }
    return json{{"schema", kJsonSchema}, {"components", arr}}.dump();
}

std::string ap_witness_to_json_string(const ApWitness& w) {
    return json{{"schema", kJsonSchema},
                {"vertex", coords_to_json(w.mu.coords)},
                {"pair_bound", json{{"lhs", rat_to_string(w.lhs_pair)}, {"rhs", rat_to_string(w.rhs_pair)}, {"holds", w.holds_pair}}},
                {"single_bound", json{{"lhs", rat_to_string(w.lhs_single)}, {"rhs", rat_to_string(w.rhs_single)}, {"holds", w.holds_single}}}}
        .dump();
}

std::string mult_table_to_json_string(const WeightMultTable& t) {
    json entries = json::array();
    for (const auto& [mu, m] : t.mult)
        entries.push_back(json{{"mu", coords_to_json(mu)}, {"mult", m.get_str()}});
    return json{{"schema", kJsonSchema},
                {"kind", "weight-multiplicities"},
                {"highest", weight_to_json(t.highest)},
                {"entries", entries}}
        .dump();
}

WeightMultTable mult_table_from_json_string(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    require(!j.is_discarded() && j.is_object(), Errc::invalid_argument, "invalid multiplicity table JSON");
    require(j.value("kind", "") == std::string("weight-multiplicities"), Errc::invalid_argument,
            "unexpected cache file kind");
    WeightMultTable t;
    t.highest = weight_from_json(j.at("highest"));
    for (const auto& e : j.at("entries")) {
        RatVec mu = coords_from_json(e.at("mu"));
        Int m(e.at("mult").get<std::string>());
        t.mult.emplace(std::move(mu), std::move(m));
    }
    return t;
}

} // namespace tensorcone
