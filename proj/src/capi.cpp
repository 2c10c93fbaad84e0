#include "tensorcone/tensorcone.h"

#include <cstring>
#include <sstream>

#include "tensorcone/json_io.hpp"
#include "tensorcone/schubert.hpp"

using namespace tensorcone;

struct tc_context {
    MultiplicityCache cache;
    std::string last_error;

    explicit tc_context(const char* dir) : cache(dir ? std::string(dir) : std::string()) {}
};

namespace {

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

tc_status map_error(tc_context* ctx, const Error& e) {
    if (ctx) ctx->last_error = e.what();
    switch (e.code()) {
        case Errc::invalid_argument: return TC_ERR_INVALID_ARGUMENT;
        case Errc::resource_limit: return TC_ERR_RESOURCE_LIMIT;
        case Errc::internal: return TC_ERR_INTERNAL;
    }
    return TC_ERR_INTERNAL;
}

template <typename F>
tc_status guarded(tc_context* ctx, F&& f) {
    if (!ctx) return TC_ERR_INVALID_ARGUMENT;
    try {
        ctx->last_error.clear();
        f();
        return TC_OK;
    } catch (const Error& e) {
        return map_error(ctx, e);
    } catch (const std::exception& e) {
        ctx->last_error = e.what();
        return TC_ERR_INTERNAL;
    }
}

Weight parse_weight(const char* json) {
    require(json != nullptr, Errc::invalid_argument, "null weight JSON");
    return weight_from_json_string(json);
}

Partition parse_partition(const char* json) {
    require(json != nullptr, Errc::invalid_argument, "null partition JSON");
    return partition_from_json_string(json);
}

std::vector<int> parse_one_line(const char* s) {
    require(s != nullptr, Errc::invalid_argument, "null permutation");
    std::vector<int> w;
    std::string text(s);
    if (text.find(',') != std::string::npos || text.find(' ') != std::string::npos) {
        std::string tok;
        std::istringstream in(text);
        while (std::getline(in, tok, text.find(',') != std::string::npos ? ',' : ' '))
            if (!tok.empty()) w.push_back(std::stoi(tok));
    } else {
        for (char c : text) {
            require(c >= '1' && c <= '9', Errc::invalid_argument,
                    "permutation must be digits or a comma-separated list");
            w.push_back(c - '0');
        }
    }
    return w;
}

} // namespace

extern "C" {

tc_context* tc_context_new(const char* cache_dir) {
    try {
        return new tc_context(cache_dir);
    } catch (...) {
        return nullptr;
    }
}

void tc_context_free(tc_context* ctx) { delete ctx; }

const char* tc_last_error(const tc_context* ctx) { return ctx ? ctx->last_error.c_str() : "null context"; }

void tc_string_free(char* s) { std::free(s); }

const char* tc_version(void) { return "1.0.0"; }

tc_status tc_weight_json(tc_context* ctx, const char* family, int rank, const char* coords,
                         char** out_json) {
    return guarded(ctx, [&] {
        require(family && std::strlen(family) == 1, Errc::invalid_argument, "family must be one of A,B,C,D");
        require(coords != nullptr, Errc::invalid_argument, "null coordinates");
        LieType t{family_from_char(family[0]), rank};
        validate(t);
        RatVec v;
        std::string tok;
        std::istringstream in(coords);
        while (std::getline(in, tok, ',')) v.push_back(rat_from_string(tok));
        RootSystem rs = RootSystem::build(t);
        *out_json = dup_string(weight_to_json_string(rs.weight(std::move(v))));
    });
}

tc_status tc_vertex_table(tc_context* ctx, const char* weight_json, char** out_json) {
    return guarded(ctx, [&] {
        Weight lam = parse_weight(weight_json);
        RootSystem rs = RootSystem::build(lam.type);
        *out_json = dup_string(vertex_table_to_json_string(vertex_table(rs, lam)));
    });
}

tc_status tc_dominates(tc_context* ctx, const char* lam_json, const char* mu_json, int* out_member,
                       char** out_certificate_json) {
    return guarded(ctx, [&] {
        Weight lam = parse_weight(lam_json), mu = parse_weight(mu_json);
        require(lam.type == mu.type, Errc::invalid_argument, "weights have different types");
        RootSystem rs = RootSystem::build(lam.type);
        auto cert = dominance_coefficients(rs, lam, mu);
        if (out_member) *out_member = cert.nonnegative() ? 1 : 0;
        if (out_certificate_json) *out_certificate_json = dup_string(dominance_to_json_string(cert));
    });
}

tc_status tc_lr_coefficient(tc_context* ctx, const char* lam_json, const char* mu_json,
                            const char* nu_json, long long* out_value) {
    return guarded(ctx, [&] {
        require(out_value != nullptr, Errc::invalid_argument, "null output");
        *out_value = lr_coefficient(parse_partition(lam_json), parse_partition(mu_json),
                                    parse_partition(nu_json));
    });
}

tc_status tc_tensor_multiplicity(tc_context* ctx, const char* lam_json, const char* mu_json,
                                 const char* nu_json, long long* out_value) {
    return guarded(ctx, [&] {
        require(out_value != nullptr, Errc::invalid_argument, "null output");
        Weight lam = parse_weight(lam_json), mu = parse_weight(mu_json), nu = parse_weight(nu_json);
        require(lam.type == mu.type && lam.type == nu.type, Errc::invalid_argument,
                "weights have different types");
        RootSystem rs = RootSystem::build(lam.type);
        Int m = tensor_multiplicity(rs, lam, mu, nu, &ctx->cache);
        require(m.fits_slong_p(), Errc::resource_limit, "multiplicity out of range");
        *out_value = m.get_si();
    });
}

tc_status tc_tensor_decompose(tc_context* ctx, const char* lam_json, const char* mu_json,
                              char** out_json) {
    return guarded(ctx, [&] {
        Weight lam = parse_weight(lam_json), mu = parse_weight(mu_json);
        require(lam.type == mu.type, Errc::invalid_argument, "weights have different types");
        RootSystem rs = RootSystem::build(lam.type);
        auto comps = tensor_decompose(rs, lam, mu, &ctx->cache);
        *out_json = dup_string(decomposition_to_json_string(rs, comps));
    });
}

tc_status tc_weyl_dimension(tc_context* ctx, const char* weight_json, char** out_dim) {
    return guarded(ctx, [&] {
        Weight lam = parse_weight(weight_json);
        RootSystem rs = RootSystem::build(lam.type);
        *out_dim = dup_string(rs.weyl_dimension(lam).get_str());
    });
}

tc_status tc_horn_member(tc_context* ctx, const char* lam_json, const char* mu_json,
                         const char* nu_json, char** out_verdict_json) {
    return guarded(ctx, [&] {
        Weight lam = parse_weight(lam_json), mu = parse_weight(mu_json), nu = parse_weight(nu_json);
        RootSystem rs = RootSystem::build(lam.type);
        *out_verdict_json = dup_string(verdict_to_json_string(horn_member(rs, lam, mu, nu)));
    });
}

tc_status tc_ext_horn_member(tc_context* ctx, const char* lam_json, const char* mu_json,
                             const char* nu_json, char** out_verdict_json) {
    return guarded(ctx, [&] {
        Weight lam = parse_weight(lam_json), mu = parse_weight(mu_json), nu = parse_weight(nu_json);
        RootSystem rs = RootSystem::build(lam.type);
        *out_verdict_json = dup_string(verdict_to_json_string(ext_horn_member(rs, lam, mu, nu)));
    });
}

tc_status tc_saturated_member(tc_context* ctx, const char* lam_json, const char* mu_json,
                              const char* nu_json, int* out_member) {
    return guarded(ctx, [&] {
        require(out_member != nullptr, Errc::invalid_argument, "null output");
        Weight lam = parse_weight(lam_json), mu = parse_weight(mu_json), nu = parse_weight(nu_json);
        RootSystem rs = RootSystem::build(lam.type);
        *out_member = saturated_member(rs, lam, mu, nu, &ctx->cache) ? 1 : 0;
    });
}

tc_status tc_schubert_constant(tc_context* ctx, const char* u, const char* v, const char* w,
                               long long* out_value) {
    return guarded(ctx, [&] {
        require(out_value != nullptr, Errc::invalid_argument, "null output");
        *out_value = structure_constant(parse_one_line(u), parse_one_line(v), parse_one_line(w));
    });
}

tc_status tc_verify(tc_context* ctx, const char* weight_json, int* out_equal, char** out_report_json) {
    return guarded(ctx, [&] {
        Weight lam = parse_weight(weight_json);
        RootSystem rs = RootSystem::build(lam.type);
        EqualityReport report = decide_equality(rs, lam, &ctx->cache);
        if (out_equal) *out_equal = report.computed ? 1 : 0;
        if (out_report_json) *out_report_json = dup_string(equality_report_to_json_string(report));
    });
}

tc_status tc_sweep(tc_context* ctx, const char* family, int rank, int bound, char** out_json) {
    return guarded(ctx, [&] {
        require(family && std::strlen(family) == 1, Errc::invalid_argument, "family must be one of A,B,C,D");
        LieType t{family_from_char(family[0]), rank};
        validate(t);
        RootSystem rs = RootSystem::build(t);
        auto reports = sweep(rs, bound, &ctx->cache);
        *out_json = dup_string(sweep_to_json_string(rs, bound, reports));
    });
}

} // extern "C"
