#include "tensorcone/weyl.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace tensorcone {

WeylElement WeylElement::identity(LieType t) {
    tensorcone::validate(t);
    int m = t.ambient();
    std::vector<int> img(m);
    for (int i = 0; i < m; ++i) img[i] = i + 1;
    return {t, img};
}

WeylElement WeylElement::simple_reflection(LieType t, int i) {
    require(i >= 1 && i <= t.rank, Errc::invalid_argument, "generator index out of range");
    WeylElement s = identity(t);
    const int n = t.rank;
    switch (t.family) {
        case Family::A:
            std::swap(s.images[i - 1], s.images[i]);
            break;
        case Family::B:
        case Family::C:
            if (i < n)
                std::swap(s.images[i - 1], s.images[i]);
            else
                s.images[n - 1] = -n;
            break;
        case Family::D:
            if (i < n) {
                std::swap(s.images[i - 1], s.images[i]);
            } else {
                s.images[n - 2] = -n;
                s.images[n - 1] = -(n - 1);
            }
            break;
    }
    return s;
}

WeylElement WeylElement::from_word(LieType t, const std::vector<int>& word) {
    WeylElement v = identity(t);
    for (int i : word) v = compose(v, simple_reflection(t, i));
    return v;
}

int WeylElement::apply(int i) const {
    int a = i < 0 ? -i : i;
    require(a >= 1 && a <= letters(), Errc::invalid_argument, "apply: index out of range");
    int r = images[a - 1];
    return i < 0 ? -r : r;
}

WeylElement WeylElement::inverse() const {
    WeylElement r{type, std::vector<int>(images.size())};
    for (int i = 1; i <= letters(); ++i) {
        int j = images[i - 1];
        if (j > 0)
            r.images[j - 1] = i;
        else
            r.images[-j - 1] = -i;
    }
    return r;
}

bool WeylElement::is_identity() const {
    for (int i = 0; i < letters(); ++i)
        if (images[i] != i + 1) return false;
    return true;
}

int WeylElement::det() const {
    // permutation sign times (-1)^(number of sign flips)
    int m = letters();
    std::vector<int> p(m);
    int flips = 0;
    for (int i = 0; i < m; ++i) {
        p[i] = std::abs(images[i]) - 1;
        if (images[i] < 0) ++flips;
    }
    int sign = 1;
    std::vector<bool> seen(m, false);
    for (int i = 0; i < m; ++i) {
        if (seen[i]) continue;
        int len = 0;
        for (int j = i; !seen[j]; j = p[j]) {
            seen[j] = true;
            ++len;
        }
        if (len % 2 == 0) sign = -sign;
    }
    return (flips % 2 == 0) ? sign : -sign;
}

void WeylElement::validate() const {
    int m = letters();
    require(m == type.ambient(), Errc::invalid_argument, "one-line length mismatch");
    std::vector<bool> seen(m, false);
    int negatives = 0;
    for (int v : images) {
        int a = std::abs(v);
        require(a >= 1 && a <= m && !seen[a - 1], Errc::invalid_argument, "not a signed permutation");
        seen[a - 1] = true;
        if (v < 0) ++negatives;
    }
    if (type.family == Family::A)
        require(negatives == 0, Errc::invalid_argument, "family A admits no sign flips");
    if (type.family == Family::D)
        require(negatives % 2 == 0, Errc::invalid_argument, "family D requires an even number of sign flips");
}

WeylElement compose(const WeylElement& u, const WeylElement& v) {
    require(u.type == v.type, Errc::invalid_argument, "compose: type mismatch");
    WeylElement r{u.type, std::vector<int>(u.images.size())};
    for (int i = 1; i <= u.letters(); ++i) r.images[i - 1] = u.apply(v.images[i - 1]);
    return r;
}

Weight act(const WeylElement& v, const Weight& w) {
    require(v.type == w.type, Errc::invalid_argument, "act: type mismatch");
    RatVec out(w.coords.size());
    for (int i = 1; i <= v.letters(); ++i) {
        int j = v.images[i - 1];
        if (j > 0)
            out[j - 1] = w.coords[i - 1];
        else
            out[-j - 1] = -w.coords[i - 1];
    }
    return Weight{w.type, std::move(out)};
}

namespace {

std::vector<WeylElement> generators(const RootSystem& rs, const std::vector<int>& I) {
    std::vector<int> idx = I;
    std::sort(idx.begin(), idx.end());
    idx.erase(std::unique(idx.begin(), idx.end()), idx.end());
    std::vector<WeylElement> gens;
    for (int i : idx) gens.push_back(WeylElement::simple_reflection(rs.type, i));
    return gens;
}

// BFS over W_I; returns each element with its Cayley distance (Coxeter length).
std::map<WeylElement, int> closure_with_length(const RootSystem& rs, const std::vector<int>& I) {
    auto gens = generators(rs, I);
    std::map<WeylElement, int> dist;
    WeylElement e = WeylElement::identity(rs.type);
    dist[e] = 0;
    std::vector<WeylElement> frontier{e};
    int d = 0;
    while (!frontier.empty()) {
        ++d;
        std::vector<WeylElement> next;
        for (const auto& w : frontier) {
            for (const auto& s : gens) {
                WeylElement ws = compose(w, s);
                if (dist.emplace(ws, d).second) next.push_back(ws);
            }
        }
        frontier = std::move(next);
    }
    return dist;
}

} // namespace

std::vector<WeylElement> parabolic_elements(const RootSystem& rs, const std::vector<int>& I) {
    for (int i : I)
        require(i >= 1 && i <= rs.rank(), Errc::invalid_argument, "parabolic index out of range");
    auto dist = closure_with_length(rs, I);
    std::vector<WeylElement> out;
    out.reserve(dist.size());
    for (const auto& [w, d] : dist) out.push_back(w);
    return out;
}

WeylElement longest_element(const RootSystem& rs, const std::vector<int>& I) {
    auto dist = closure_with_length(rs, I);
    int best = -1;
    const WeylElement* arg = nullptr;
    int count = 0;
    for (const auto& [w, d] : dist) {
        if (d > best) {
            best = d;
            arg = &w;
            count = 1;
        } else if (d == best) {
            ++count;
        }
    }
    require(count == 1, Errc::internal, "longest element is not unique");
    return *arg;
}

int coxeter_length(const RootSystem& rs, const WeylElement& v) {
    std::vector<int> full(rs.rank());
    for (int i = 0; i < rs.rank(); ++i) full[i] = i + 1;
    auto dist = closure_with_length(rs, full);
    auto it = dist.find(v);
    require(it != dist.end(), Errc::invalid_argument, "element not in the Weyl group");
    return it->second;
}

std::vector<int> reduced_word(const RootSystem& rs, const WeylElement& v) {
    std::vector<int> full(rs.rank());
    for (int i = 0; i < rs.rank(); ++i) full[i] = i + 1;
    auto dist = closure_with_length(rs, full);
    require(dist.count(v), Errc::invalid_argument, "element not in the Weyl group");

    std::vector<int> word;
    WeylElement w = v;
    int len = dist.at(w);
    while (len > 0) {
        bool found = false;
        for (int i = 1; i <= rs.rank(); ++i) {
            WeylElement ws = compose(w, WeylElement::simple_reflection(rs.type, i));
            int l = dist.at(ws);
            if (l == len - 1) {
                word.push_back(i);
                w = ws;
                len = l;
                found = true;
                break;
            }
        }
        require(found, Errc::internal, "no descent found");
    }
    std::reverse(word.begin(), word.end());
    return word;
}

Rat pair_xP(const Weight& mu, const WeylElement& v, int r) {
    require(mu.type == v.type, Errc::invalid_argument, "pair_xP: type mismatch");
    require(r >= 1 && r <= mu.type.rank, Errc::invalid_argument, "pair_xP: parabolic index out of range");
    Rat s = 0;
    for (int i = 1; i <= r; ++i) {
        int j = v.images[i - 1];
        if (j > 0)
            s += mu.coords[j - 1];
        else
            s -= mu.coords[-j - 1];
    }
    return s;
}

} // namespace tensorcone
