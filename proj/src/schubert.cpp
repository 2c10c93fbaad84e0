#include "tensorcone/schubert.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>

namespace tensorcone {

int SchubertPolynomial::degree() const {
    int d = 0;
    for (const auto& [e, c] : terms) {
        int s = 0;
        for (int x : e) s += x;
        d = std::max(d, s);
    }
    return d;
}

namespace {

std::vector<int> pad(std::vector<int> e, std::size_t k) {
    e.resize(std::max(e.size(), k), 0);
    return e;
}

std::vector<int> trim_exponent(std::vector<int> e) {
    while (!e.empty() && e.back() == 0) e.pop_back();
    return e;
}

void add_term(SchubertPolynomial& p, std::vector<int> e, long long c) {
    if (c == 0) return;
    e = trim_exponent(std::move(e));
    auto it = p.terms.find(e);
    if (it == p.terms.end()) {
        p.terms.emplace(std::move(e), c);
    } else {
        it->second += c;
        if (it->second == 0) p.terms.erase(it);
    }
}

} // namespace

SchubertPolynomial poly_mul(const SchubertPolynomial& a, const SchubertPolynomial& b) {
    SchubertPolynomial r;
    for (const auto& [ea, ca] : a.terms) {
        for (const auto& [eb, cb] : b.terms) {
            std::vector<int> e = pad(ea, eb.size());
            for (std::size_t i = 0; i < eb.size(); ++i) e[i] += eb[i];
            add_term(r, std::move(e), ca * cb);
        }
    }
    return r;
}

SchubertPolynomial poly_sub(const SchubertPolynomial& a, const SchubertPolynomial& b) {
    SchubertPolynomial r = a;
    for (const auto& [e, c] : b.terms) add_term(r, e, -c);
    return r;
}

SchubertPolynomial poly_scale(long long c, const SchubertPolynomial& p) {
    SchubertPolynomial r;
    if (c == 0) return r;
    for (const auto& [e, k] : p.terms) r.terms[e] = c * k;
    return r;
}

std::string to_string(const SchubertPolynomial& p) {
    if (p.terms.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : p.terms) {
        if (!first) os << " + ";
        first = false;
        os << c;
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] > 0) os << "*x" << (i + 1) << "^" << e[i];
    }
    return os.str();
}

int permutation_length(const std::vector<int>& w) {
    int inv = 0;
    for (std::size_t i = 0; i < w.size(); ++i)
        for (std::size_t j = i + 1; j < w.size(); ++j)
            if (w[i] > w[j]) ++inv;
    return inv;
}

std::vector<int> lehmer_code(const std::vector<int>& w) {
    std::vector<int> code(w.size(), 0);
    for (std::size_t i = 0; i < w.size(); ++i)
        for (std::size_t j = i + 1; j < w.size(); ++j)
            if (w[j] < w[i]) ++code[i];
    while (!code.empty() && code.back() == 0) code.pop_back();
    return code;
}

std::vector<int> permutation_from_code(const std::vector<int>& code) {
    int m = (int)code.size();
    int need = m;
    for (int i = 0; i < m; ++i) need = std::max(need, i + 1 + code[i]);
    std::vector<int> values(need);
    for (int i = 0; i < need; ++i) values[i] = i + 1;
    std::vector<int> w;
    std::vector<int> pool = values;
    for (int i = 0; i < need; ++i) {
        int idx = i < m ? code[i] : 0;
        require(idx < (int)pool.size(), Errc::internal, "invalid Lehmer code");
        w.push_back(pool[idx]);
        pool.erase(pool.begin() + idx);
    }
    return trim_permutation(std::move(w));
}

std::vector<int> trim_permutation(std::vector<int> w) {
    while (!w.empty() && w.back() == (int)w.size()) w.pop_back();
    return w;
}

namespace {

void validate_permutation(const std::vector<int>& w) {
    std::vector<bool> seen(w.size(), false);
    for (int v : w) {
        require(v >= 1 && v <= (int)w.size() && !seen[v - 1], Errc::invalid_argument,
                "not a permutation one-line");
        seen[v - 1] = true;
    }
}

// divided difference d_i f = (f - s_i f)/(x_i - x_{i+1}), 1-based i
SchubertPolynomial divided_difference(int i, const SchubertPolynomial& f) {
    SchubertPolynomial r;
    for (const auto& [e0, c] : f.terms) {
        std::vector<int> e = pad(e0, i + 1);
        int a = e[i - 1], b = e[i];
        if (a == b) continue;
        // d_i(x^a y^b) = sign * sum_{j} x^j y^{a+b-1-j}
        int lo = std::min(a, b), hi = std::max(a, b);
        long long sgn = a > b ? c : -c;
        for (int j = lo; j < hi; ++j) {
            std::vector<int> t = e;
            t[i - 1] = j;
            t[i] = a + b - 1 - j;
            add_term(r, std::move(t), sgn);
        }
    }
    return r;
}

std::mutex schubert_mutex;
std::map<std::vector<int>, SchubertPolynomial> schubert_memo;

SchubertPolynomial schubert_poly_impl(const std::vector<int>& w_in) {
    std::vector<int> w = trim_permutation(w_in);
    {
        std::lock_guard<std::mutex> lock(schubert_mutex);
        auto it = schubert_memo.find(w);
        if (it != schubert_memo.end()) return it->second;
    }
    SchubertPolynomial result;
    std::vector<int> code = lehmer_code(w);
    bool dominant = std::is_sorted(code.begin(), code.end(), std::greater<int>());
    if (dominant) {
        // weakly decreasing code: single monomial x^code
        result.terms.emplace(code, 1);
    } else {
        // bubble one ascent of the code: i with code_i < code_{i+1} is an
        // ascent of w, and S_w = d_i S_{w s_i} with l(w s_i) = l(w) + 1
        std::size_t i = 0;
        std::vector<int> full = code;
        full.resize(w.size(), 0);
        while (i + 1 < full.size() && full[i] >= full[i + 1]) ++i;
        std::vector<int> ws = w;
        std::swap(ws[i], ws[i + 1]);
        result = divided_difference((int)i + 1, schubert_poly_impl(ws));
    }
    std::lock_guard<std::mutex> lock(schubert_mutex);
    return schubert_memo.emplace(std::move(w), std::move(result)).first->second;
}

} // namespace

SchubertPolynomial schubert_poly(const std::vector<int>& w) {
    validate_permutation(w);
    require(trim_permutation(w).size() <= 6, Errc::resource_limit, "schubert_poly guard: n <= 6");
    return schubert_poly_impl(w);
}

SchubertPolynomial stable_schubert_poly(const std::vector<int>& w) {
    validate_permutation(w);
    return schubert_poly_impl(w);
}

std::map<std::vector<int>, long long> schubert_expand_product(const std::vector<int>& u,
                                                              const std::vector<int>& v) {
    validate_permutation(u);
    validate_permutation(v);
    SchubertPolynomial p = poly_mul(schubert_poly_impl(u), schubert_poly_impl(v));
    std::map<std::vector<int>, long long> out;
    while (!p.is_zero()) {
        // the lex-least exponent of a Schubert polynomial is its code, with
        // coefficient 1, so the expansion strips terms lex-increasingly
        const auto& [e, c] = *p.terms.begin();
        std::vector<int> w = permutation_from_code(e);
        out[w] = c;
        p = poly_sub(p, poly_scale(c, schubert_poly_impl(w)));
        require(!p.terms.count(e), Errc::internal, "transition failed to strip the leading term");
    }
    return out;
}

long long structure_constant(const std::vector<int>& u, const std::vector<int>& v, const std::vector<int>& w) {
    validate_permutation(u);
    validate_permutation(v);
    validate_permutation(w);
    std::size_t n = std::max({trim_permutation(u).size(), trim_permutation(v).size(), trim_permutation(w).size()});
    require(n <= 5, Errc::resource_limit, "structure_constant guard: n <= 5");
    if (permutation_length(u) + permutation_length(v) != permutation_length(w)) return 0;
    auto expansion = schubert_expand_product(u, v);
    auto it = expansion.find(trim_permutation(w));
    return it == expansion.end() ? 0 : it->second;
}

DynkinDictionary d3_a3_dictionary() {
    RootSystem d3 = RootSystem::build({Family::D, 3});
    RootSystem a3 = RootSystem::build({Family::A, 3});
    // alpha_1 <-> beta_1 = e2-e3, alpha_2 <-> beta_2 = e1-e2, alpha_3 <-> beta_3 = e3-e4
    DynkinDictionary dict;
    dict.pairs.emplace_back(d3.simple_roots[0], a3.simple_roots[1]);
    dict.pairs.emplace_back(d3.simple_roots[1], a3.simple_roots[0]);
    dict.pairs.emplace_back(d3.simple_roots[2], a3.simple_roots[2]);
    return dict;
}

std::vector<int> d3_to_a3(const WeylElement& w) {
    require(w.type == LieType{Family::D, 3}, Errc::invalid_argument, "d3_to_a3 expects a D3 element");
    w.validate();
    RootSystem d3 = RootSystem::build({Family::D, 3});
    // beta indices in A3: s_{beta_1} = s_2, s_{beta_2} = s_1, s_{beta_3} = s_3
    static const int beta_of_alpha[4] = {0, 2, 1, 3};
    std::vector<int> image{1, 2, 3, 4};
    for (int letter : reduced_word(d3, w)) {
        int k = beta_of_alpha[letter]; // adjacent transposition (k, k+1)
        std::vector<int> next(4);
        std::vector<int> s{1, 2, 3, 4};
        std::swap(s[k - 1], s[k]);
        for (int i = 0; i < 4; ++i) next[i] = image[s[i] - 1];
        image = next;
    }
    return image;
}

} // namespace tensorcone
