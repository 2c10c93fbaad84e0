#include <doctest.h>

#include <map>
#include <set>

#include "tensorcone/schubert.hpp"

using namespace tensorcone;

namespace {

using Perm = std::vector<int>;

Perm compose_perm(const Perm& u, const Perm& v) {
    Perm r(std::max(u.size(), v.size()));
    auto app = [](const Perm& p, int i) { return i <= (int)p.size() ? p[i - 1] : i; };
    for (int i = 1; i <= (int)r.size(); ++i) r[i - 1] = app(u, app(v, i));
    return r;
}

std::vector<Perm> symmetric_group(int n) {
    Perm p(n);
    for (int i = 0; i < n; ++i) p[i] = i + 1;
    std::vector<Perm> out;
    do out.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    return out;
}

// independent route: all Schubert polynomials of S_n by divided differences
// descending from the staircase monomial of the longest element
std::map<Perm, SchubertPolynomial> staircase_tables(int n) {
    std::map<Perm, SchubertPolynomial> table;
    Perm w0(n);
    for (int i = 0; i < n; ++i) w0[i] = n - i;
    SchubertPolynomial top;
    std::vector<int> stair;
    for (int i = n - 1; i >= 1; --i) stair.push_back(i);
    top.terms.emplace(stair, 1);
    table[w0] = top;
    // BFS down by length
    std::vector<Perm> frontier{w0};
    while (!frontier.empty()) {
        std::vector<Perm> next;
        for (const auto& w : frontier) {
            for (int i = 1; i < n; ++i) {
                Perm ws = w;
                std::swap(ws[i - 1], ws[i]);
                if (permutation_length(ws) != permutation_length(w) - 1) continue;
                if (table.count(ws)) continue;
                // S_{w s_i} = d_i S_w
                SchubertPolynomial p;
                for (const auto& [e0, c] : table.at(w).terms) {
                    std::vector<int> e = e0;
                    e.resize(std::max<std::size_t>(e.size(), i + 1), 0);
                    int a = e[i - 1], b = e[i];
                    if (a == b) continue;
                    long long sgn = a > b ? c : -c;
                    for (int j = std::min(a, b); j < std::max(a, b); ++j) {
                        std::vector<int> t = e;
                        t[i - 1] = j;
                        t[i] = a + b - 1 - j;
                        while (!t.empty() && t.back() == 0) t.pop_back();
                        auto it = p.terms.find(t);
                        if (it == p.terms.end())
                            p.terms.emplace(t, sgn);
                        else if ((it->second += sgn) == 0)
                            p.terms.erase(it);
                    }
                }
                table.emplace(ws, std::move(p));
                next.push_back(ws);
            }
        }
        frontier = std::move(next);
    }
    return table;
}

} // namespace

TEST_CASE("schubert polynomial basics") {
    SchubertPolynomial one = schubert_poly({1});
    REQUIRE(one.terms.size() == 1);
    CHECK(one.terms.begin()->first.empty());
    CHECK(one.terms.begin()->second == 1);

    SchubertPolynomial s1 = schubert_poly({2, 1});
    REQUIRE(s1.terms.size() == 1);
    CHECK(s1.terms.begin()->first == std::vector<int>{1});

    SchubertPolynomial top = schubert_poly({3, 2, 1});
    REQUIRE(top.terms.size() == 1);
    CHECK(top.terms.begin()->first == std::vector<int>{2, 1});

    // S_{1423} = x1^2 + x1 x2 + x2^2 (code (0,2))
    SchubertPolynomial p = schubert_poly({1, 4, 2, 3});
    CHECK(p.terms.size() == 3);
    CHECK(p.degree() == permutation_length({1, 4, 2, 3}));
}

TEST_CASE("schubert polynomials match the staircase construction on S4") {
    auto table = staircase_tables(4);
    for (const auto& [w, expected] : table) {
        SchubertPolynomial got = schubert_poly(w);
        CHECK(got == expected);
    }
}

TEST_CASE("lehmer codes") {
    CHECK(lehmer_code({3, 4, 1, 2}) == std::vector<int>{2, 2});
    CHECK(lehmer_code({1, 4, 2, 3}) == std::vector<int>{0, 2});
    CHECK(permutation_from_code({2, 2}) == Perm{3, 4, 1, 2});
    CHECK(permutation_from_code({0, 4}) == Perm{1, 6, 2, 3, 4, 5});
    CHECK(permutation_from_code({}) == Perm{});
    CHECK(permutation_length({3, 4, 1, 2}) == 4);
}

TEST_CASE("structure constants: squares hitting 3412") {
    CHECK(structure_constant({1, 4, 2, 3}, {1, 4, 2, 3}, {3, 4, 1, 2}) == 1);
    CHECK(structure_constant({2, 3, 1, 4}, {2, 3, 1, 4}, {3, 4, 1, 2}) == 1);
}

TEST_CASE("structure constant basics") {
    // unit of the ring
    for (const auto& u : symmetric_group(4))
        CHECK(structure_constant(u, {1}, u) == 1);
    // grading
    CHECK(structure_constant({2, 1}, {2, 1}, {2, 1}) == 0);
    CHECK(structure_constant({1, 4, 2, 3}, {1, 4, 2, 3}, {4, 3, 2, 1}) == 0);
    CHECK_THROWS_AS(structure_constant({6, 1, 2, 3, 4, 5}, {1}, {6, 1, 2, 3, 4, 5}), Error);
}

TEST_CASE("product expansion is exact over S4") {
    auto s4 = symmetric_group(4);
    for (const auto& u : s4) {
        for (const auto& v : s4) {
            auto expansion = schubert_expand_product(u, v);
            SchubertPolynomial rebuilt;
            int deg = permutation_length(u) + permutation_length(v);
            for (const auto& [w, c] : expansion) {
                CHECK(c > 0);
                CHECK(permutation_length(w) == deg);
                rebuilt = poly_sub(rebuilt, poly_scale(-c, stable_schubert_poly(w)));
            }
            CHECK(rebuilt == poly_mul(schubert_poly(u), schubert_poly(v)));
        }
    }
}

TEST_CASE("the D3 to A3 dictionary") {
    auto dict = d3_a3_dictionary();
    REQUIRE(dict.pairs.size() == 3);
    CHECK(dict.pairs[0].first.coords == RatVec{Rat(1), Rat(-1), Rat(0)});
    CHECK(dict.pairs[0].second.coords == RatVec{Rat(0), Rat(1), Rat(-1), Rat(0)});
    CHECK(dict.pairs[1].second.coords == RatVec{Rat(1), Rat(-1), Rat(0), Rat(0)});
    CHECK(dict.pairs[2].second.coords == RatVec{Rat(0), Rat(0), Rat(1), Rat(-1)});

    LieType d3{Family::D, 3};
    CHECK(d3_to_a3(WeylElement::from_word(d3, {3, 1})) == Perm{1, 4, 2, 3}); // u1
    CHECK(d3_to_a3(WeylElement::from_word(d3, {2, 1})) == Perm{2, 3, 1, 4}); // u2
    CHECK(d3_to_a3(WeylElement::identity(d3)) == Perm{1, 2, 3, 4});
}

TEST_CASE("the dictionary map is a group isomorphism with iota(w0) = w0") {
    RootSystem d3 = RootSystem::build({Family::D, 3});
    auto W = parabolic_elements(d3, {1, 2, 3});
    REQUIRE(W.size() == 24);
    std::set<Perm> images;
    std::map<std::vector<int>, Perm> img;
    for (const auto& w : W) {
        Perm p = d3_to_a3(w);
        images.insert(p);
        img[w.images] = p;
    }
    CHECK(images.size() == 24); // bijective onto S4
    for (const auto& u : W)
        for (const auto& v : W)
            CHECK(img.at(compose(u, v).images) == compose_perm(img.at(u.images), img.at(v.images)));

    WeylElement w0 = longest_element(d3, {1, 2, 3});
    CHECK(d3_to_a3(w0) == Perm{4, 3, 2, 1});

    // minimal coset representative of w0 modulo W_{2,3} maps to 3412
    WeylElement w0P = w0;
    int best = coxeter_length(d3, w0);
    for (const auto& p : parabolic_elements(d3, {2, 3})) {
        WeylElement cand = compose(w0, p);
        int len = coxeter_length(d3, cand);
        if (len < best) {
            best = len;
            w0P = cand;
        }
    }
    CHECK(d3_to_a3(w0P) == Perm{3, 4, 1, 2});
    // lengths are preserved
    for (const auto& w : W)
        CHECK(coxeter_length(d3, w) == permutation_length(d3_to_a3(w)));
}
