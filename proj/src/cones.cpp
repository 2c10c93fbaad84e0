#include "tensorcone/cones.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>

namespace tensorcone {

namespace {

// subsets of [n] of size d in lexicographic order
std::vector<std::vector<int>> subsets_of_size(int n, int d) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int next) -> void {
        if ((int)cur.size() == d) {
            out.push_back(cur);
            return;
        }
        for (int i = next; i <= n; ++i) {
            if (n - i + 1 < d - (int)cur.size()) break;
            cur.push_back(i);
            self(self, i + 1);
            cur.pop_back();
        }
    };
    rec(rec, 1);
    return out;
}

std::vector<std::vector<int>> all_subsets(int n) {
    std::vector<std::vector<int>> out;
    for (int d = 0; d <= n; ++d) {
        auto s = subsets_of_size(n, d);
        out.insert(out.end(), s.begin(), s.end());
    }
    return out;
}

Rat sum_over(const RatVec& coords, const std::vector<int>& idx) {
    Rat s = 0;
    for (int i : idx) s += coords[i - 1];
    return s;
}

std::mutex horn_mutex;
std::map<int, std::vector<HornTriple>> horn_cache;

std::mutex ext_mutex;
std::map<int, std::vector<ExtHornDatum>> ext_cache;

} // namespace

const std::vector<HornTriple>& horn_triples(int n) {
    require(n >= 2, Errc::invalid_argument, "horn_triples needs n >= 2");
    {
        std::lock_guard<std::mutex> lock(horn_mutex);
        auto it = horn_cache.find(n);
        if (it != horn_cache.end()) return it->second;
    }
    std::vector<HornTriple> triples;
    for (int d = 1; d < n; ++d) {
        auto subs = subsets_of_size(n, d);
        std::vector<Partition> taus;
        taus.reserve(subs.size());
        for (const auto& s : subs) taus.push_back(tau(s));
        for (std::size_t a = 0; a < subs.size(); ++a)
            for (std::size_t b = 0; b < subs.size(); ++b)
                for (std::size_t c = 0; c < subs.size(); ++c)
                    if (lr_positive(taus[a], taus[b], taus[c]))
                        triples.push_back(HornTriple{d, subs[a], subs[b], subs[c]});
    }
    std::lock_guard<std::mutex> lock(horn_mutex);
    return horn_cache.emplace(n, std::move(triples)).first->second;
}

MembershipVerdict horn_member(const RootSystem& rs, const Weight& lam, const Weight& mu, const Weight& nu) {
    require(rs.type.family == Family::A, Errc::invalid_argument, "horn_member applies to family A");
    require(lam.type == rs.type && mu.type == rs.type && nu.type == rs.type, Errc::invalid_argument,
            "horn_member: type mismatch");
    require(lam.is_dominant() && mu.is_dominant() && nu.is_dominant(), Errc::invalid_argument,
            "horn_member requires dominant weights");
    MembershipVerdict verdict;
    verdict.method = "horn";
    if (lam.sum() + mu.sum() != nu.sum()) {
        verdict.member = false;
        verdict.reason = "root lattice";
        return verdict;
    }
    const int n = rs.ambient();
    for (const auto& t : horn_triples(n)) {
        Rat lhs = sum_over(nu.coords, t.K);
        Rat rhs = sum_over(lam.coords, t.I) + sum_over(mu.coords, t.J);
        if (lhs > rhs) {
            verdict.member = false;
            verdict.reason = "inequality violated";
            verdict.horn_certificate = HornCertificate{t, lhs, rhs};
            return verdict;
        }
    }
    verdict.member = true;
    return verdict;
}

namespace {

std::vector<ExtHornDatum> build_ext_horn_data(int n) {
    std::vector<ExtHornDatum> data;
    auto subsets = all_subsets(n);
    // disjoint pairs (X, X') grouped by |X| + |X'|
    std::map<int, std::vector<std::pair<std::vector<int>, std::vector<int>>>> pairs_by_r;
    for (const auto& X : subsets) {
        for (const auto& Xp : subsets) {
            bool disjoint = true;
            for (int x : X)
                if (std::find(Xp.begin(), Xp.end(), x) != Xp.end()) {
                    disjoint = false;
                    break;
                }
            if (!disjoint) continue;
            int r = (int)(X.size() + Xp.size());
            if (r == 0 || r > n) continue;
            pairs_by_r[r].emplace_back(X, Xp);
        }
    }
    for (const auto& [r, pairs] : pairs_by_r) {
        for (const auto& [A, Ap] : pairs) {
            for (const auto& [B, Bp] : pairs) {
                for (const auto& [C, Cp] : pairs) {
                    if ((int)(Ap.size() + Bp.size() + Cp.size()) != r) continue;
                    std::array<Partition, 6> targets{tau_or_empty(A),  tau_or_empty(Cp),
                                                     tau_or_empty(B),  tau_or_empty(Ap),
                                                     tau_or_empty(C),  tau_or_empty(Bp)};
                    auto witness = lr_positive_chain(targets);
                    if (!witness) continue;
                    data.push_back(ExtHornDatum{A, Ap, B, Bp, C, Cp, r, *witness});
                }
            }
        }
    }
    return data;
}

} // namespace

const std::vector<ExtHornDatum>& ext_horn_data(int n) {
    require(n >= 1, Errc::invalid_argument, "ext_horn_data needs n >= 1");
    {
        std::lock_guard<std::mutex> lock(ext_mutex);
        auto it = ext_cache.find(n);
        if (it != ext_cache.end()) return it->second;
    }
    auto data = build_ext_horn_data(n);
    std::lock_guard<std::mutex> lock(ext_mutex);
    return ext_cache.emplace(n, std::move(data)).first->second;
}

MembershipVerdict ext_horn_member(const RootSystem& rs, const Weight& lam, const Weight& mu, const Weight& nu) {
    require(rs.type.family == Family::B || rs.type.family == Family::C, Errc::invalid_argument,
            "ext_horn_member applies to families B and C");
    require(lam.type == rs.type && mu.type == rs.type && nu.type == rs.type, Errc::invalid_argument,
            "ext_horn_member: type mismatch");
    require(lam.is_dominant() && mu.is_dominant() && nu.is_dominant(), Errc::invalid_argument,
            "ext_horn_member requires dominant weights");
    MembershipVerdict verdict;
    verdict.method = "ext-horn";
    // nu* = nu: w0 = -1 in types B and C
    for (const auto& d : ext_horn_data(rs.rank())) {
        Rat value = sum_over(lam.coords, d.A) - sum_over(lam.coords, d.Ap) + sum_over(mu.coords, d.B) -
                    sum_over(mu.coords, d.Bp) + sum_over(nu.coords, d.C) - sum_over(nu.coords, d.Cp);
        if (value < 0) {
            verdict.member = false;
            verdict.reason = "inequality violated";
            verdict.ext_certificate = ExtHornCertificate{d, value};
            return verdict;
        }
    }
    verdict.member = true;
    return verdict;
}

Rat evaluate_tpineq(const RootSystem& rs, const Weight& lam, const Weight& mu, const Weight& nu, int r,
                    const WeylElement& u, const WeylElement& v, const WeylElement& w) {
    return pair_xP(lam, u, r) + pair_xP(mu, v, r) + pair_xP(rs.dual(nu), w, r);
}

WeylElement datum_to_weyl(const LieType& t, const std::vector<int>& neg, const std::vector<int>& pos, int r) {
    require(t.family != Family::A, Errc::invalid_argument, "datum_to_weyl needs a signed family");
    require((int)(neg.size() + pos.size()) == r && r <= t.rank, Errc::invalid_argument,
            "datum_to_weyl: sizes do not match r");
    std::vector<int> images;
    for (int x : neg) images.push_back(-x);
    for (int x : pos) images.push_back(x);
    std::set<int> used;
    for (int x : images) used.insert(std::abs(x));
    require((int)used.size() == r, Errc::invalid_argument, "datum_to_weyl: overlapping sets");
    for (int i = 1; i <= t.rank; ++i)
        if (!used.count(i)) images.push_back(i);
    if (t.family == Family::D) {
        int negs = (int)neg.size();
        if (negs % 2 == 1) images.back() = -images.back(); // fix parity outside [r]
    }
    WeylElement out{t, images};
    out.validate();
    return out;
}

} // namespace tensorcone
