// Command line front end. Talks to the library exclusively through the C
// interface in tensorcone/tensorcone.h; JSON responses are pretty-printed
// here or passed through verbatim with --json.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <iostream>
#include <memory>
#include <string>

#include "tensorcone/tensorcone.h"

using nlohmann::json;

namespace {

struct ContextHandle {
    tc_context* ctx = nullptr;
    ~ContextHandle() { tc_context_free(ctx); }
};

struct OwnedString {
    char* s = nullptr;
    ~OwnedString() { tc_string_free(s); }
    std::string str() const { return s ? std::string(s) : std::string(); }
};

[[noreturn]] void die(tc_context* ctx, tc_status rc) {
    std::cerr << "error: " << (ctx ? tc_last_error(ctx) : "context allocation failed") << "\n";
    std::exit(rc == TC_OK ? 1 : 1);
}

std::string weight_json(tc_context* ctx, const std::string& family, int rank, const std::string& coords) {
    OwnedString out;
    tc_status rc = tc_weight_json(ctx, family.c_str(), rank, coords.c_str(), &out.s);
    if (rc != TC_OK) die(ctx, rc);
    return out.str();
}

std::string fmt_coords(const json& coords) {
    std::string s = "(";
    for (std::size_t i = 0; i < coords.size(); ++i) {
        if (i) s += ", ";
        s += coords[i].get<std::string>();
    }
    return s + ")";
}

std::string fmt_subset(const json& idx) {
    std::string s = "{";
    for (std::size_t i = 0; i < idx.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(idx[i].get<int>());
    }
    return s + "}";
}

void print_verdict(const json& j) {
    std::cout << (j["member"].get<bool>() ? "member" : "NOT a member") << "  [" << j["method"].get<std::string>()
              << "]\n";
    if (j.contains("reason")) std::cout << "reason: " << j["reason"].get<std::string>() << "\n";
    if (j.contains("certificate") && !j["certificate"].is_null()) {
        const json& c = j["certificate"];
        if (c.contains("nu_side")) {
            std::cout << "violated Horn triple d=" << c["d"] << " I=" << fmt_subset(c["I"])
                      << " J=" << fmt_subset(c["J"]) << " K=" << fmt_subset(c["K"]) << ": "
                      << c["nu_side"].get<std::string>() << " > " << c["lambda_mu_side"].get<std::string>()
                      << "\n";
        } else if (c.contains("value")) {
            std::cout << "violated extended Horn datum r=" << c["r"] << " A=" << fmt_subset(c["A"])
                      << " A'=" << fmt_subset(c["A'"]) << " B=" << fmt_subset(c["B"]) << " B'="
                      << fmt_subset(c["B'"]) << " C=" << fmt_subset(c["C"]) << " C'=" << fmt_subset(c["C'"])
                      << ": value " << c["value"].get<std::string>() << " < 0\n";
        }
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact computations in the Kostka and saturated tensor cones of classical Lie types"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string family = "A";
    int rank = 2;
    bool as_json = false;
    std::string cache_dir;
    app.add_option("--family", family, "Lie family A|B|C|D")->check(CLI::IsMember({"A", "B", "C", "D"}));
    app.add_option("--rank", rank, "rank of the root system");
    app.add_flag("--json", as_json, "print raw JSON");
    app.add_option("--cache-dir", cache_dir, "directory for weight multiplicity caches");

    std::string weight, lam, mu, nu, u, v, w;
    int bound = 2;

    auto* cmd_vertices = app.add_subcommand("vertices", "vertices of the dominant weight polytope D_lambda");
    cmd_vertices->add_option("--weight", weight, "weight coordinates a/b,c/d,...")->required();

    auto* cmd_dominates = app.add_subcommand("dominates", "decide lambda >= mu in dominance order");
    cmd_dominates->add_option("--lam", lam)->required();
    cmd_dominates->add_option("--mu", mu)->required();

    auto* cmd_lr = app.add_subcommand("lr", "Littlewood-Richardson coefficient of three partitions");
    cmd_lr->add_option("--lam", lam, "partition, e.g. 2,1")->required();
    cmd_lr->add_option("--mu", mu)->required();
    cmd_lr->add_option("--nu", nu)->required();

    auto* cmd_tensor = app.add_subcommand("tensor", "tensor product multiplicities");
    cmd_tensor->add_option("--lam", lam)->required();
    cmd_tensor->add_option("--mu", mu)->required();
    cmd_tensor->add_option("--nu", nu, "when omitted, prints the full decomposition");

    auto* cmd_horn = app.add_subcommand("horn", "Horn system membership (family A)");
    cmd_horn->add_option("--lam", lam)->required();
    cmd_horn->add_option("--mu", mu)->required();
    cmd_horn->add_option("--nu", nu)->required();

    auto* cmd_ext = app.add_subcommand("ext-horn", "extended Horn membership (families B/C)");
    cmd_ext->add_option("--lam", lam)->required();
    cmd_ext->add_option("--mu", mu)->required();
    cmd_ext->add_option("--nu", nu)->required();

    auto* cmd_schubert = app.add_subcommand("schubert", "Schubert structure constant c_{u,v}^w");
    cmd_schubert->add_option("--u", u)->required();
    cmd_schubert->add_option("--v", v)->required();
    cmd_schubert->add_option("--w", w)->required();

    auto* cmd_verify = app.add_subcommand("verify", "decide D_{2 lambda} = T_lambda");
    cmd_verify->add_option("--weight", weight)->required();

    auto* cmd_sweep = app.add_subcommand("sweep", "verify every dominant integral weight in a box");
    cmd_sweep->add_option("--bound", bound, "coordinate bound");

    CLI11_PARSE(app, argc, argv);

    ContextHandle handle;
    handle.ctx = tc_context_new(cache_dir.empty() ? nullptr : cache_dir.c_str());
    tc_context* ctx = handle.ctx;
    if (!ctx) die(nullptr, TC_ERR_INTERNAL);

    auto partition_json = [](const std::string& csv) {
        if (csv.empty()) return std::string("[]");
        return "[" + csv + "]";
    };

    if (*cmd_vertices) {
        std::string lj = weight_json(ctx, family, rank, weight);
        OwnedString out;
        tc_status rc = tc_vertex_table(ctx, lj.c_str(), &out.s);
        if (rc != TC_OK) die(ctx, rc);
        if (as_json) {
            std::cout << out.str() << "\n";
        } else {
            json j = json::parse(out.str());
            for (const auto& e : j["vertices"])
                std::cout << "I=" << fmt_subset(e["I"]) << "  v_I = " << fmt_coords(e["vertex"]) << "\n";
        }
        return 0;
    }

    if (*cmd_dominates) {
        std::string lj = weight_json(ctx, family, rank, lam);
        std::string mj = weight_json(ctx, family, rank, mu);
        int member = 0;
        OwnedString cert;
        tc_status rc = tc_dominates(ctx, lj.c_str(), mj.c_str(), &member, &cert.s);
        if (rc != TC_OK) die(ctx, rc);
        if (as_json) {
            std::cout << cert.str() << "\n";
        } else {
            json j = json::parse(cert.str());
            std::cout << (member ? "true" : "false") << "\n";
            if (j["in_root_span"].get<bool>())
                std::cout << "coefficients: " << fmt_coords(j["coefficients"]) << "\n";
            else
                std::cout << "difference not in the rational root span\n";
        }
        return 0;
    }

    if (*cmd_lr) {
        long long value = 0;
        tc_status rc = tc_lr_coefficient(ctx, partition_json(lam).c_str(), partition_json(mu).c_str(),
                                         partition_json(nu).c_str(), &value);
        if (rc != TC_OK) die(ctx, rc);
        if (as_json)
            std::cout << json{{"schema", "tensorcone/1"}, {"value", value}}.dump() << "\n";
        else
            std::cout << value << "\n";
        return 0;
    }

    if (*cmd_tensor) {
        std::string lj = weight_json(ctx, family, rank, lam);
        std::string mj = weight_json(ctx, family, rank, mu);
        if (!nu.empty()) {
            std::string nj = weight_json(ctx, family, rank, nu);
            long long value = 0;
            tc_status rc = tc_tensor_multiplicity(ctx, lj.c_str(), mj.c_str(), nj.c_str(), &value);
            if (rc != TC_OK) die(ctx, rc);
            if (as_json)
                std::cout << json{{"schema", "tensorcone/1"}, {"multiplicity", value}}.dump() << "\n";
            else
                std::cout << value << "\n";
        } else {
            OwnedString out;
            tc_status rc = tc_tensor_decompose(ctx, lj.c_str(), mj.c_str(), &out.s);
            if (rc != TC_OK) die(ctx, rc);
            if (as_json) {
                std::cout << out.str() << "\n";
            } else {
                json j = json::parse(out.str());
                for (const auto& c : j["components"])
                    std::cout << fmt_coords(c["weight"]) << "  x" << c["multiplicity"].get<std::string>()
                              << "  (dim " << c["dimension"].get<std::string>() << ")\n";
            }
        }
        return 0;
    }

    if (*cmd_horn || *cmd_ext) {
        std::string lj = weight_json(ctx, family, rank, lam);
        std::string mj = weight_json(ctx, family, rank, mu);
        std::string nj = weight_json(ctx, family, rank, nu);
        OwnedString out;
        tc_status rc = *cmd_horn ? tc_horn_member(ctx, lj.c_str(), mj.c_str(), nj.c_str(), &out.s)
                                 : tc_ext_horn_member(ctx, lj.c_str(), mj.c_str(), nj.c_str(), &out.s);
        if (rc != TC_OK) die(ctx, rc);
        if (as_json)
            std::cout << out.str() << "\n";
        else
            print_verdict(json::parse(out.str()));
        return 0;
    }

    if (*cmd_schubert) {
        long long value = 0;
        tc_status rc = tc_schubert_constant(ctx, u.c_str(), v.c_str(), w.c_str(), &value);
        if (rc != TC_OK) die(ctx, rc);
        if (as_json)
            std::cout << json{{"schema", "tensorcone/1"}, {"value", value}}.dump() << "\n";
        else
            std::cout << value << "\n";
        return 0;
    }

    if (*cmd_verify) {
        std::string lj = weight_json(ctx, family, rank, weight);
        int equal = 0;
        OwnedString out;
        tc_status rc = tc_verify(ctx, lj.c_str(), &equal, &out.s);
        if (rc != TC_OK) die(ctx, rc);
        if (as_json) {
            std::cout << out.str() << "\n";
        } else {
            json j = json::parse(out.str());
            std::cout << "predicted: " << (j["predicted"].get<bool>() ? "equal" : "not equal") << "\n";
            std::cout << "computed:  " << (j["computed"].get<bool>() ? "equal" : "not equal") << "\n";
            for (const auto& pv : j["per_vertex"]) {
                std::cout << "  vertex " << fmt_coords(pv["vertex"]) << " from I=" << fmt_subset(pv["I"])
                          << ": " << (pv["member"].get<bool>() ? "member" : "NOT a member") << " ["
                          << pv["method"].get<std::string>() << "]\n";
            }
        }
        return equal ? 0 : 2;
    }

    if (*cmd_sweep) {
        OwnedString out;
        tc_status rc = tc_sweep(ctx, family.c_str(), rank, bound, &out.s);
        if (rc != TC_OK) die(ctx, rc);
        if (as_json) {
            std::cout << out.str() << "\n";
        } else {
            json j = json::parse(out.str());
            for (const auto& r : j["reports"]) {
                std::cout << fmt_coords(r["weight"]["coords"]) << "  predicted="
                          << (r["predicted"].get<bool>() ? "equal" : "differ") << " computed="
                          << (r["computed"].get<bool>() ? "equal" : "differ")
                          << (r["predicted"] == r["computed"] ? "" : "  MISMATCH") << "\n";
            }
            const auto& s = j["summary"];
            std::cout << "total " << s["total"] << ", agree " << s["agree"] << ", equality holds on "
                      << s["equality_holds"] << "\n";
        }
        return 0;
    }

    return 1;
}
