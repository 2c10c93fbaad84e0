#include "tensorcone/oracle.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <set>

#include "tensorcone/json_io.hpp"
#include "tensorcone/kostka.hpp"
#include "tensorcone/weyl.hpp"

namespace tensorcone {

namespace {

int sort_descending_sign(RatVec& v) {
    // insertion sort, counting swaps
    int sign = 1;
    for (std::size_t i = 1; i < v.size(); ++i) {
        std::size_t j = i;
        while (j > 0 && v[j - 1] < v[j]) {
            std::swap(v[j - 1], v[j]);
            sign = -sign;
            --j;
        }
    }
    return sign;
}

} // namespace

RatVec dominant_representative(const LieType& t, RatVec x) {
    switch (t.family) {
        case Family::A:
            std::sort(x.begin(), x.end(), std::greater<Rat>());
            return x;
        case Family::B:
        case Family::C: {
            for (auto& q : x)
                if (q < 0) q = -q;
            std::sort(x.begin(), x.end(), std::greater<Rat>());
            return x;
        }
        case Family::D: {
            int negatives = 0;
            bool has_zero = false;
            for (auto& q : x) {
                if (q < 0) {
                    q = -q;
                    ++negatives;
                } else if (q == 0) {
                    has_zero = true;
                }
            }
            std::sort(x.begin(), x.end(), std::greater<Rat>());
            if (negatives % 2 == 1 && !has_zero) x.back() = -x.back();
            return x;
        }
    }
    fail(Errc::internal, "unreachable");
}

ChamberRep regular_dominant_rep(const LieType& t, RatVec x) {
    ChamberRep out;
    int flips = 0;
    if (t.family != Family::A) {
        bool has_zero = false;
        for (auto& q : x) {
            if (q < 0) {
                q = -q;
                ++flips;
            } else if (q == 0) {
                has_zero = true;
            }
        }
        if (t.family != Family::D && has_zero) {
            out.regular = false; // short/long root e_i (or 2e_i) wall
            return out;
        }
    }
    int sign = sort_descending_sign(x);
    for (std::size_t i = 0; i + 1 < x.size(); ++i)
        if (x[i] == x[i + 1]) {
            out.regular = false;
            return out;
        }
    if (t.family == Family::D && flips % 2 == 1) {
        if (x.back() == 0) {
            ++flips; // flip the zero coordinate, rep unchanged
        } else {
            x.back() = -x.back();
            --flips; // smallest entry stays negative
        }
    }
    out.rep = std::move(x);
    out.det = (flips % 2 == 0) ? sign : -sign;
    return out;
}

std::vector<RatVec> weyl_orbit(const RootSystem& rs, const RatVec& x) {
    std::vector<WeylElement> gens;
    for (int i = 1; i <= rs.rank(); ++i) gens.push_back(WeylElement::simple_reflection(rs.type, i));
    std::set<RatVec> seen{x};
    std::vector<RatVec> frontier{x};
    while (!frontier.empty()) {
        std::vector<RatVec> next;
        for (const auto& v : frontier) {
            for (const auto& s : gens) {
                Weight img = act(s, Weight{rs.type, v});
                if (seen.insert(img.coords).second) next.push_back(img.coords);
            }
        }
        frontier = std::move(next);
    }
    return {seen.begin(), seen.end()};
}

Int WeightMultTable::multiplicity(const RatVec& any_point) const {
    auto it = mult.find(dominant_representative(highest.type, any_point));
    return it == mult.end() ? Int(0) : it->second;
}

namespace {

// Dominant integral weights mu <= lam lying in lam + root lattice.
std::vector<Weight> dominant_weights_below(const RootSystem& rs, const Weight& lam,
                                           const OracleLimits& limits) {
    const int dim = rs.ambient();
    const bool famA = rs.type.family == Family::A;
    const Rat hi = lam.coords[0];
    Rat lo;
    if (famA)
        lo = lam.coords[dim - 1];
    else
        lo = 0; // D's last coordinate handled separately

    // all coordinates share lam's fractional part
    Rat frac = lam.coords[0] - Rat(Int(lam.coords[0].get_num() / lam.coords[0].get_den()));
    if (frac < 0) frac += 1;

    std::vector<Weight> out;
    RatVec acc(dim);
    auto emit = [&](const RatVec& v) {
        Weight mu{rs.type, v};
        if (!mu.is_dominant()) return;
        auto cert = dominance_coefficients(rs, lam, mu);
        if (!cert.in_root_span || !cert.nonnegative()) return;
        for (const auto& c : cert.coefficients)
            if (!rat_is_integer(c)) return;
        out.push_back(std::move(mu));
        require(out.size() <= limits.max_table_entries, Errc::resource_limit,
                "weight table exceeds " + std::to_string(limits.max_table_entries) + " entries");
    };
    // recursive grid walk, weakly decreasing prefix
    auto walk = [&](auto&& self, int pos, Rat cap) -> void {
        if (pos == dim) {
            emit(acc);
            return;
        }
        bool last = pos == dim - 1;
        Rat floor_lo = lo;
        if (famA) floor_lo = lo;
        if (!famA && rs.type.family == Family::D && last) floor_lo = -cap;
        // start at the largest candidate <= cap with the right fractional part
        Rat start = cap;
        {
            Rat shifted = start - frac;
            Int fl = shifted.get_num() / shifted.get_den();
            if (Rat(fl) > shifted) fl -= 1; // floor for negatives
            start = Rat(fl) + frac;
        }
        for (Rat v = start; v >= floor_lo; v -= 1) {
            acc[pos] = v;
            self(self, pos + 1, last ? cap : v);
        }
    };
    walk(walk, 0, hi);
    return out;
}

} // namespace

WeightMultTable weight_multiplicities(const RootSystem& rs, const Weight& lam,
                                      const OracleLimits& limits) {
    require(lam.type == rs.type, Errc::invalid_argument, "weight_multiplicities: type mismatch");
    require(lam.is_dominant() && lam.is_integral_weight(), Errc::invalid_argument,
            "weight_multiplicities requires a dominant integral weight");

    auto candidates = dominant_weights_below(rs, lam, limits);
    // process by increasing height of lam - mu
    std::vector<std::pair<long, Weight>> by_height;
    for (auto& mu : candidates) {
        auto cert = dominance_coefficients(rs, lam, mu);
        long h = rat_to_long(vec_sum(cert.coefficients));
        by_height.emplace_back(h, std::move(mu));
    }
    std::sort(by_height.begin(), by_height.end(),
              [](const auto& a, const auto& b) { return a.first < b.first || (a.first == b.first && a.second < b.second); });

    WeightMultTable table;
    table.highest = lam;
    const RatVec& rho = rs.rho.coords;
    RatVec lr = vec_add(lam.coords, rho);
    Rat norm_l = dot(lr, lr);
    Rat norm_top = dot(lam.coords, lam.coords);

    for (const auto& [h, mu] : by_height) {
        if (h == 0) {
            table.mult[mu.coords] = 1;
            continue;
        }
        RatVec mr = vec_add(mu.coords, rho);
        Rat denom = norm_l - dot(mr, mr);
        require(denom > 0, Errc::internal, "Freudenthal denominator must be positive");
        Rat acc = 0;
        for (const auto& alpha : rs.positive_roots) {
            RatVec p = mu.coords;
            for (long k = 1;; ++k) {
                p = vec_add(p, alpha.coords);
                if (dot(p, p) > norm_top) break; // outside the weight polytope
                Int m = table.multiplicity(p);
                if (m != 0) acc += Rat(m) * dot(p, alpha.coords);
            }
        }
        Rat val = 2 * acc / denom;
        require(rat_is_integer(val) && val > 0, Errc::internal,
                "Freudenthal multiplicity must be a positive integer");
        table.mult[mu.coords] = val.get_num();
    }
    return table;
}

namespace {

std::string table_key(const RootSystem& rs, const Weight& lam) {
    std::string k = to_string(rs.type) + "|";
    for (std::size_t i = 0; i < lam.coords.size(); ++i) {
        if (i) k += ",";
        k += rat_to_string(lam.coords[i]);
    }
    return k;
}

std::string sanitize_filename(const std::string& key) {
    std::string s = "mult_";
    for (char c : key) {
        if (c == '|' || c == ',')
            s += '_';
        else if (c == '/')
            s += 'c';
        else if (c == '-')
            s += 'm';
        else
            s += c;
    }
    return s + ".json";
}

} // namespace

std::shared_ptr<const WeightMultTable> MultiplicityCache::get(const RootSystem& rs, const Weight& lam,
                                                              const OracleLimits& limits) {
    std::string key = table_key(rs, lam);
    {
        std::lock_guard<std::mutex> lock(mutex_);
        auto it = memo_.find(key);
        if (it != memo_.end()) return it->second;
    }
    std::shared_ptr<const WeightMultTable> table;
    std::filesystem::path file;
    if (!dir_.empty()) {
        file = std::filesystem::path(dir_) / sanitize_filename(key);
        if (std::filesystem::exists(file)) {
            std::ifstream in(file);
            std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
            table = std::make_shared<WeightMultTable>(mult_table_from_json_string(text));
        }
    }
    if (!table) {
        table = std::make_shared<WeightMultTable>(weight_multiplicities(rs, lam, limits));
        if (!dir_.empty()) {
            std::error_code ec;
            std::filesystem::create_directories(dir_, ec);
            std::ofstream out(file);
            out << mult_table_to_json_string(*table) << "\n";
        }
    }
    std::lock_guard<std::mutex> lock(mutex_);
    auto [it, inserted] = memo_.emplace(key, table);
    return it->second;
}

namespace {

std::shared_ptr<const WeightMultTable> resolve_table(const RootSystem& rs, const Weight& mu,
                                                     MultiplicityCache* cache, const OracleLimits& limits) {
    if (cache) return cache->get(rs, mu, limits);
    return std::make_shared<WeightMultTable>(weight_multiplicities(rs, mu, limits));
}

void check_integral_dominant(const Weight& w, const char* what) {
    require(w.is_dominant(), Errc::invalid_argument, std::string(what) + " must be dominant");
    require(w.is_integral_weight(), Errc::invalid_argument, std::string(what) + " must be integral");
}

// Family A only: weights are identified modulo constant vectors, so shift nu
// to the representative whose coordinate sum matches lam + mu.
Weight match_sum_by_shift(const Weight& lam, const Weight& mu, const Weight& nu) {
    Rat diff = lam.sum() + mu.sum() - nu.sum();
    if (diff == 0) return nu;
    Rat c = diff / (int)nu.coords.size();
    Weight shifted = nu;
    for (auto& q : shifted.coords) q += c;
    return shifted;
}

} // namespace

Int tensor_multiplicity(const RootSystem& rs, const Weight& lam, const Weight& mu, const Weight& nu_in,
                        MultiplicityCache* cache, const OracleLimits& limits) {
    require(lam.type == rs.type && mu.type == rs.type && nu_in.type == rs.type, Errc::invalid_argument,
            "tensor_multiplicity: type mismatch");
    check_integral_dominant(lam, "lambda");
    check_integral_dominant(mu, "mu");
    check_integral_dominant(nu_in, "nu");

    Weight nu = nu_in;
    if (rs.type.family == Family::A) nu = match_sum_by_shift(lam, mu, nu);
    // lam + mu - nu must lie in the root lattice
    auto cert = rs.root_coefficients(vec_sub(vec_add(lam.coords, mu.coords), nu.coords));
    if (!cert) return 0;
    for (const auto& c : *cert)
        if (!rat_is_integer(c)) return 0;

    std::vector<int> full(rs.rank());
    for (int i = 0; i < rs.rank(); ++i) full[i] = i + 1;
    auto weyl = parabolic_elements(rs, full);
    require(weyl.size() <= limits.max_weyl_order, Errc::resource_limit, "Weyl group order exceeds limit");

    auto table = resolve_table(rs, mu, cache, limits);
    RatVec nr = vec_add(nu.coords, rs.rho.coords);
    RatVec lr = vec_add(lam.coords, rs.rho.coords);
    Int acc = 0;
    for (const auto& w : weyl) {
        RatVec arg = vec_sub(act(w, Weight{rs.type, nr}).coords, lr);
        Int m = table->multiplicity(arg);
        if (m != 0) acc += w.det() * m;
    }
    require(acc >= 0, Errc::internal, "tensor multiplicity must be nonnegative");
    return acc;
}

std::map<RatVec, Int> tensor_decompose(const RootSystem& rs, const Weight& lam, const Weight& mu,
                                       MultiplicityCache* cache, const OracleLimits& limits) {
    require(lam.type == rs.type && mu.type == rs.type, Errc::invalid_argument, "tensor_decompose: type mismatch");
    check_integral_dominant(lam, "lambda");
    check_integral_dominant(mu, "mu");

    auto table = resolve_table(rs, mu, cache, limits);
    const RatVec& rho = rs.rho.coords;
    RatVec lr = vec_add(lam.coords, rho);
    std::map<RatVec, Int> out;
    for (const auto& [rep, m] : table->mult) {
        for (const auto& beta : weyl_orbit(rs, rep)) {
            ChamberRep rr = regular_dominant_rep(rs.type, vec_add(lr, beta));
            if (!rr.regular) continue;
            out[vec_sub(rr.rep, rho)] += rr.det * m;
        }
    }
    for (auto it = out.begin(); it != out.end();) {
        require(it->second >= 0, Errc::internal, "Klimyk multiplicity must be nonnegative");
        if (it->second == 0)
            it = out.erase(it);
        else
            ++it;
    }
    return out;
}

int saturation_factor(Family f) { return f == Family::A ? 1 : 2; }

bool saturated_member(const RootSystem& rs, const Weight& lam, const Weight& mu, const Weight& nu,
                      MultiplicityCache* cache, const OracleLimits& limits, int d_override) {
    require(lam.type == rs.type && mu.type == rs.type && nu.type == rs.type, Errc::invalid_argument,
            "saturated_member: type mismatch");
    require(lam.is_dominant() && mu.is_dominant() && nu.is_dominant(), Errc::invalid_argument,
            "saturated_member requires dominant weights");
    if (rs.type.family == Family::A && lam.sum() + mu.sum() != nu.sum())
        return false; // not in the rational root span

    RatVec all = lam.coords;
    all.insert(all.end(), mu.coords.begin(), mu.coords.end());
    all.insert(all.end(), nu.coords.begin(), nu.coords.end());
    Int t0 = denominator_lcm(all);
    require(t0.fits_slong_p(), Errc::resource_limit, "scaling factor out of range");

    auto lattice_ok = [&](long t) {
        Weight tl = Rat(t) * lam, tm = Rat(t) * mu, tn = Rat(t) * nu;
        if (!tl.is_integral_weight() || !tm.is_integral_weight() || !tn.is_integral_weight()) return false;
        auto cert = rs.root_coefficients(vec_sub(vec_add(tl.coords, tm.coords), tn.coords));
        if (!cert) return false;
        for (const auto& c : *cert)
            if (!rat_is_integer(c)) return false;
        return true;
    };
    long t = 0;
    for (long cand : {t0.get_si(), 2 * t0.get_si()}) {
        if (lattice_ok(cand)) {
            t = cand;
            break;
        }
    }
    require(t > 0, Errc::internal, "no integral scaling puts the triple in the root lattice");

    int d = d_override > 0 ? d_override : saturation_factor(rs.type.family);
    Rat s = Rat(d) * Rat(t);
    return tensor_multiplicity(rs, s * lam, s * mu, s * nu, cache, limits) > 0;
}

} // namespace tensorcone
