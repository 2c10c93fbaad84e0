#include "tensorcone/rootsys.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "tensorcone/linalg.hpp"

namespace tensorcone {

Family family_from_char(char c) {
    switch (c) {
        case 'A': return Family::A;
        case 'B': return Family::B;
        case 'C': return Family::C;
        case 'D': return Family::D;
        default: fail(Errc::invalid_argument, std::string("unknown family '") + c + "'");
    }
}

void validate(const LieType& t) {
    if (t.family == Family::D)
        require(t.rank >= 3, Errc::invalid_argument, "family D requires rank >= 3");
    else
        require(t.rank >= 1, Errc::invalid_argument, "rank must be positive");
}

std::string to_string(const LieType& t) {
    return std::string(1, family_char(t.family)) + std::to_string(t.rank);
}

bool Weight::is_dominant() const {
    const int n = type.rank;
    const auto& c = coords;
    switch (type.family) {
        case Family::A:
            for (int i = 0; i + 1 < (int)c.size(); ++i)
                if (c[i] < c[i + 1]) return false;
            return true;
        case Family::B:
        case Family::C:
            for (int i = 0; i + 1 < n; ++i)
                if (c[i] < c[i + 1]) return false;
            return c[n - 1] >= 0;
        case Family::D:
            for (int i = 0; i + 2 < n; ++i)
                if (c[i] < c[i + 1]) return false;
            return c[n - 2] >= abs(c[n - 1]);
    }
    return false;
}

bool Weight::is_integral_weight() const {
    switch (type.family) {
        case Family::A: {
            for (std::size_t i = 0; i + 1 < coords.size(); ++i)
                if (!rat_is_integer(coords[i] - coords[i + 1])) return false;
            return true;
        }
        case Family::C: {
            for (const auto& q : coords)
                if (!rat_is_integer(q)) return false;
            return true;
        }
        case Family::B:
        case Family::D: {
            bool all_int = true, all_half = true;
            for (const auto& q : coords) {
                if (!rat_is_integer(q)) all_int = false;
                Rat twice = 2 * q;
                if (!rat_is_integer(twice) || rat_is_integer(q)) all_half = false;
            }
            return all_int || all_half;
        }
    }
    return false;
}

bool Weight::is_zero() const {
    if (type.family == Family::A) {
        for (std::size_t i = 0; i + 1 < coords.size(); ++i)
            if (coords[i] != coords[i + 1]) return false;
        return true;
    }
    for (const auto& q : coords)
        if (q != 0) return false;
    return true;
}

Weight Weight::normalized() const {
    if (type.family != Family::A || coords.empty()) return *this;
    Rat m = coords[0];
    for (const auto& q : coords) m = std::min(m, q);
    Weight w = *this;
    for (auto& q : w.coords) q -= m;
    return w;
}

bool Weight::same_weight(const Weight& other) const {
    if (type != other.type) return false;
    if (type.family == Family::A) return normalized().coords == other.normalized().coords;
    return coords == other.coords;
}

bool Weight::operator<(const Weight& other) const {
    if (type.family != other.type.family) return type.family < other.type.family;
    if (type.rank != other.type.rank) return type.rank < other.type.rank;
    return coords < other.coords;
}

Weight operator+(const Weight& a, const Weight& b) {
    require(a.type == b.type, Errc::invalid_argument, "weight addition: type mismatch");
    return Weight{a.type, vec_add(a.coords, b.coords)};
}

Weight operator-(const Weight& a, const Weight& b) {
    require(a.type == b.type, Errc::invalid_argument, "weight subtraction: type mismatch");
    return Weight{a.type, vec_sub(a.coords, b.coords)};
}

Weight operator*(const Rat& c, const Weight& w) { return Weight{w.type, vec_scale(c, w.coords)}; }

std::string to_string(const Weight& w) { return vec_to_string(w.coords); }

namespace {

// Positive roots by breadth-first closure over root strings: beta + alpha_i is
// a root iff p - <beta, alpha_i^vee> > 0 where p is the length of the alpha_i
// string below beta.
std::vector<RatVec> positive_root_closure(const std::vector<RatVec>& simple) {
    auto coroot_pair = [](const RatVec& w, const RatVec& a) -> Rat { return 2 * dot(w, a) / dot(a, a); };
    std::set<RatVec> known(simple.begin(), simple.end());
    std::vector<RatVec> frontier(simple.begin(), simple.end());
    while (!frontier.empty()) {
        std::vector<RatVec> next;
        for (const auto& beta : frontier) {
            for (const auto& alpha : simple) {
                int p = 0;
                RatVec down = vec_sub(beta, alpha);
                while (known.count(down)) {
                    ++p;
                    down = vec_sub(down, alpha);
                }
                Rat q = p - coroot_pair(beta, alpha);
                if (q > 0) {
                    RatVec up = vec_add(beta, alpha);
                    if (known.insert(up).second) next.push_back(up);
                }
            }
        }
        frontier = std::move(next);
    }
    return {known.begin(), known.end()};
}

} // namespace

RootSystem RootSystem::build(LieType t) {
    validate(t);
    const int n = t.rank;
    const int dim = t.ambient();
    RootSystem rs;
    rs.type = t;

    auto mk = [&](RatVec v) { return Weight{t, std::move(v)}; };

    std::vector<RatVec> alpha;
    std::vector<RatVec> omega;
    switch (t.family) {
        case Family::A: {
            for (int i = 0; i < n; ++i) {
                RatVec a(dim, Rat(0));
                a[i] = 1;
                a[i + 1] = -1;
                alpha.push_back(a);
                RatVec w(dim, Rat(0));
                for (int j = 0; j <= i; ++j) w[j] = 1;
                omega.push_back(w);
            }
            break;
        }
        case Family::B: {
            for (int i = 0; i < n; ++i) {
                RatVec a(dim, Rat(0));
                if (i + 1 < n) {
                    a[i] = 1;
                    a[i + 1] = -1;
                } else {
                    a[i] = 1; // alpha_n = e_n
                }
                alpha.push_back(a);
                RatVec w(dim, Rat(0));
                if (i + 1 < n)
                    for (int j = 0; j <= i; ++j) w[j] = 1;
                else
                    for (int j = 0; j < n; ++j) w[j] = Rat(1, 2);
                omega.push_back(w);
            }
            break;
        }
        case Family::C: {
            // alpha_n = 2 e_n so that <omega_i, alpha_j^vee> = delta_ij and
            // rho equals the half-sum of the positive roots.
            for (int i = 0; i < n; ++i) {
                RatVec a(dim, Rat(0));
                if (i + 1 < n) {
                    a[i] = 1;
                    a[i + 1] = -1;
                } else {
                    a[i] = 2;
                }
                alpha.push_back(a);
                RatVec w(dim, Rat(0));
                for (int j = 0; j <= i; ++j) w[j] = 1;
                omega.push_back(w);
            }
            break;
        }
        case Family::D: {
            for (int i = 0; i < n; ++i) {
                RatVec a(dim, Rat(0));
                if (i + 1 < n) {
                    a[i] = 1;
                    a[i + 1] = -1;
                } else {
                    a[n - 2] = 1;
                    a[n - 1] = 1; // alpha_n = e_{n-1} + e_n
                }
                alpha.push_back(a);
                RatVec w(dim, Rat(0));
                if (i + 1 < n - 1) {
                    for (int j = 0; j <= i; ++j) w[j] = 1;
                } else if (i + 1 == n - 1) {
                    for (int j = 0; j < n - 1; ++j) w[j] = Rat(1, 2);
                    w[n - 1] = Rat(-1, 2);
                } else {
                    for (int j = 0; j < n; ++j) w[j] = Rat(1, 2);
                }
                omega.push_back(w);
            }
            break;
        }
    }

    for (auto& a : alpha) rs.simple_roots.push_back(mk(a));
    for (auto& w : omega) rs.fundamental_weights.push_back(mk(w));

    RatVec rho(dim, Rat(0));
    for (const auto& w : omega) rho = vec_add(rho, w);
    rs.rho = mk(rho);

    // x_j dual to the simple roots; in family A pinned to the sum-zero
    // hyperplane to make the solution unique.
    for (int j = 0; j < n; ++j) {
        std::vector<RatVec> rows;
        RatVec rhs;
        for (int i = 0; i < n; ++i) {
            rows.push_back(alpha[i]);
            rhs.push_back(i == j ? Rat(1) : Rat(0));
        }
        if (t.family == Family::A) {
            rows.push_back(RatVec(dim, Rat(1)));
            rhs.push_back(0);
        }
        auto x = solve_linear(std::move(rows), std::move(rhs));
        require(x.has_value(), Errc::internal, "x-vector solve failed");
        rs.x_vectors.push_back(*x);
    }

    for (auto& r : positive_root_closure(alpha)) rs.positive_roots.push_back(mk(r));
    return rs;
}

Rat RootSystem::coroot_pairing(const Weight& w, const Weight& root) const {
    Rat nn = dot(root.coords, root.coords);
    return 2 * dot(w.coords, root.coords) / nn;
}

Rat RootSystem::pair_x(const Weight& w, int x_index) const {
    require(x_index >= 1 && x_index <= rank(), Errc::invalid_argument, "x index out of range");
    require(w.type == type, Errc::invalid_argument, "pair_x: type mismatch");
    return dot(w.coords, x_vectors[x_index - 1]);
}

Weight RootSystem::dual(const Weight& w) const {
    require(w.type == type, Errc::invalid_argument, "dual: type mismatch");
    require(w.is_dominant(), Errc::invalid_argument, "dual requires a dominant weight");
    switch (type.family) {
        case Family::A: {
            RatVec c(w.coords.rbegin(), w.coords.rend());
            for (auto& q : c) q = -q;
            return Weight{type, std::move(c)}.normalized();
        }
        case Family::B:
        case Family::C:
            return w;
        case Family::D: {
            if (type.rank % 2 == 0) return w;
            Weight v = w;
            v.coords.back() = -v.coords.back();
            return v;
        }
    }
    fail(Errc::internal, "unreachable");
}

Weight RootSystem::half_sum_positive_roots() const {
    RatVec s(ambient(), Rat(0));
    for (const auto& r : positive_roots) s = vec_add(s, r.coords);
    return Weight{type, vec_scale(Rat(1, 2), s)};
}

std::optional<RatVec> RootSystem::root_coefficients(const RatVec& v) const {
    require((int)v.size() == ambient(), Errc::invalid_argument, "root_coefficients: bad dimension");
    std::vector<RatVec> rows(ambient(), RatVec(rank(), Rat(0)));
    for (int i = 0; i < rank(); ++i)
        for (int j = 0; j < ambient(); ++j) rows[j][i] = simple_roots[i].coords[j];
    return solve_linear(std::move(rows), v);
}

namespace {

// Dynkin diagram edges, 1-based nodes.
bool adjacent_nodes(const LieType& t, int a, int b) {
    if (a > b) std::swap(a, b);
    const int n = t.rank;
    if (t.family == Family::D) {
        if (b == n) return a == n - 2;
        return b == a + 1 && b <= n - 1;
    }
    return b == a + 1;
}

} // namespace

LieType RootSystem::sub_type(const std::vector<int>& sub_nodes) const {
    require(!sub_nodes.empty(), Errc::invalid_argument, "empty sub-diagram");
    std::vector<int> nodes = sub_nodes;
    std::sort(nodes.begin(), nodes.end());
    nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
    for (int i : nodes)
        require(i >= 1 && i <= rank(), Errc::invalid_argument, "sub-diagram node out of range");
    // connectivity
    std::set<int> seen{nodes[0]};
    std::vector<int> stack{nodes[0]};
    while (!stack.empty()) {
        int a = stack.back();
        stack.pop_back();
        for (int b : nodes)
            if (!seen.count(b) && adjacent_nodes(type, a, b)) {
                seen.insert(b);
                stack.push_back(b);
            }
    }
    require(seen.size() == nodes.size(), Errc::invalid_argument, "sub-diagram must be connected");

    const int n = rank();
    const int m = (int)nodes.size();
    auto in = [&](int k) { return std::find(nodes.begin(), nodes.end(), k) != nodes.end(); };
    switch (type.family) {
        case Family::A: return {Family::A, m};
        case Family::B: return in(n) ? LieType{Family::B, m} : LieType{Family::A, m};
        case Family::C: return in(n) ? LieType{Family::C, m} : LieType{Family::A, m};
        case Family::D:
            if (in(n) && in(n - 1) && in(n - 2)) return {Family::D, m};
            return {Family::A, m};
    }
    fail(Errc::internal, "unreachable");
}

Weight RootSystem::project(const Weight& w, const std::vector<int>& sub_nodes) const {
    require(w.type == type, Errc::invalid_argument, "project: type mismatch");
    LieType sub = sub_type(sub_nodes); // validates nodes and connectivity
    std::vector<int> nodes = sub_nodes;
    std::sort(nodes.begin(), nodes.end());
    nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());

    // p(w) = sum c_i alpha'_i with <w - p(w), alpha'_j> = 0: Gram solve.
    const int m = (int)nodes.size();
    std::vector<RatVec> gram(m, RatVec(m, Rat(0)));
    RatVec rhs(m);
    for (int i = 0; i < m; ++i) {
        const auto& ai = simple_roots[nodes[i] - 1].coords;
        for (int j = 0; j < m; ++j) gram[i][j] = dot(ai, simple_roots[nodes[j] - 1].coords);
        rhs[i] = dot(w.coords, ai);
    }
    auto c = solve_linear(std::move(gram), std::move(rhs));
    require(c.has_value(), Errc::internal, "projection Gram solve failed");

    RootSystem sub_rs = RootSystem::build(sub);
    RatVec out(sub_rs.ambient(), Rat(0));
    for (int i = 0; i < m; ++i)
        out = vec_add(out, vec_scale((*c)[i], sub_rs.simple_roots[i].coords));
    return Weight{sub, std::move(out)};
}

Int RootSystem::weyl_dimension(const Weight& lam) const {
    require(lam.type == type, Errc::invalid_argument, "weyl_dimension: type mismatch");
    require(lam.is_dominant(), Errc::invalid_argument, "weyl_dimension requires a dominant weight");
    require(lam.is_integral_weight(), Errc::invalid_argument, "weyl_dimension requires an integral weight");
    Rat num = 1, den = 1;
    RatVec lr = vec_add(lam.coords, rho.coords);
    for (const auto& a : positive_roots) {
        num *= dot(lr, a.coords);
        den *= dot(rho.coords, a.coords);
    }
    Rat d = num / den;
    require(rat_is_integer(d) && d > 0, Errc::internal, "Weyl dimension must be a positive integer");
    return d.get_num();
}

Weight RootSystem::zero_weight() const { return Weight{type, RatVec(ambient(), Rat(0))}; }

Weight RootSystem::weight(RatVec coords) const {
    require((int)coords.size() == ambient(), Errc::invalid_argument,
            "weight has wrong number of coordinates for " + to_string(type));
    return Weight{type, std::move(coords)};
}

} // namespace tensorcone
