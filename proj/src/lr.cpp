#include "tensorcone/lr.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>

#include "tensorcone/rational.hpp"

namespace tensorcone {

Partition::Partition(std::vector<long> p) : parts(std::move(p)) {
    while (!parts.empty() && parts.back() == 0) parts.pop_back();
    for (std::size_t i = 0; i < parts.size(); ++i) {
        require(parts[i] >= 0, Errc::invalid_argument, "partition parts must be nonnegative");
        require(i == 0 || parts[i - 1] >= parts[i], Errc::invalid_argument,
                "partition parts must be weakly decreasing");
    }
}

long Partition::size() const {
    long s = 0;
    for (long p : parts) s += p;
    return s;
}

bool Partition::contains(const Partition& inner) const {
    if (inner.length() > length()) return false;
    for (int i = 0; i < inner.length(); ++i)
        if (inner.parts[i] > parts[i]) return false;
    return true;
}

std::string to_string(const Partition& p) {
    std::ostringstream os;
    os << "(";
    for (int i = 0; i < p.length(); ++i) {
        if (i) os << ",";
        os << p.parts[i];
    }
    os << ")";
    return os.str();
}

Partition tau(const std::vector<int>& I) {
    require(!I.empty(), Errc::invalid_argument, "tau of the empty set");
    return tau_or_empty(I);
}

Partition tau_or_empty(const std::vector<int>& I) {
    std::vector<int> s = I;
    std::sort(s.begin(), s.end());
    require(std::unique(s.begin(), s.end()) == s.end(), Errc::invalid_argument, "tau: repeated index");
    require(s.empty() || s.front() >= 1, Errc::invalid_argument, "tau: indices must be positive");
    const int d = (int)s.size();
    std::vector<long> parts(d);
    for (int k = 0; k < d; ++k) parts[k] = s[d - 1 - k] - (d - k); // i_d - d first
    return Partition(std::move(parts));
}

namespace {

// Backtracking enumeration of LR skew tableaux: cells are visited in reading
// order (rows top to bottom, each row right to left) so that the ballot
// condition is a prefix check; rows weakly increase, columns strictly.
struct LrCounter {
    const Partition& lam;
    const Partition& mu;
    const Partition& nu;
    int nrows, nvals;
    std::vector<std::pair<int, long>> order; // cells (row, col) in reading order
    std::vector<std::vector<int>> cell;      // entries per row, indexed by column
    std::vector<long> count;                 // content so far
    long total = 0;

    LrCounter(const Partition& l, const Partition& m, const Partition& n)
        : lam(l), mu(m), nu(n), nrows(n.length()), nvals(m.length()) {
        cell.resize(nrows);
        for (int r = 0; r < nrows; ++r) {
            cell[r].assign((std::size_t)nu.part(r), 0);
            for (long c = nu.part(r) - 1; c >= lam.part(r); --c) order.emplace_back(r, c);
        }
        count.assign(nvals + 1, 0);
    }

    void run() { walk(0); }

    void walk(std::size_t k) {
        if (k == order.size()) {
            ++total;
            return;
        }
        auto [row, col] = order[k];
        for (int v = 1; v <= nvals; ++v) {
            if (count[v] >= mu.part(v - 1)) continue;
            if (v > 1 && count[v - 1] <= count[v]) continue; // ballot prefix
            // row weakly increasing: the cell to the right was placed earlier
            if (col + 1 < nu.part(row) && v > cell[row][col + 1]) continue;
            // column strict against the cell above, when it lies in the skew shape
            if (row > 0 && col < nu.part(row - 1) && col >= lam.part(row - 1) && v <= cell[row - 1][col])
                continue;
            cell[row][col] = v;
            ++count[v];
            walk(k + 1);
            --count[v];
            cell[row][col] = 0;
        }
    }
};

} // namespace

long lr_coefficient(const Partition& lam, const Partition& mu, const Partition& nu) {
    if (lam.size() + mu.size() != nu.size()) return 0;
    if (!nu.contains(lam)) return 0;
    if (mu.empty()) return 1; // nu == lam at this point
    LrCounter counter(lam, mu, nu);
    counter.run();
    return counter.total;
}

namespace {

std::mutex lr_memo_mutex;
std::map<std::tuple<std::vector<long>, std::vector<long>, std::vector<long>>, bool> lr_memo;

} // namespace

bool lr_positive(const Partition& lam, const Partition& mu, const Partition& nu) {
    if (lam.size() + mu.size() != nu.size()) return false;
    if (!nu.contains(lam) || !nu.contains(mu)) return false;
    auto key = std::make_tuple(lam.parts, mu.parts, nu.parts);
    {
        std::lock_guard<std::mutex> lock(lr_memo_mutex);
        auto it = lr_memo.find(key);
        if (it != lr_memo.end()) return it->second;
    }
    bool pos = lr_coefficient(lam, mu, nu) > 0;
    std::lock_guard<std::mutex> lock(lr_memo_mutex);
    lr_memo.emplace(std::move(key), pos);
    return pos;
}

namespace {

// All partitions of given size contained in the bound partition.
void partitions_in(const Partition& bound, long target, int row, long maxpart,
                   std::vector<long>& acc, std::vector<Partition>& out) {
    if (target == 0) {
        out.emplace_back(acc);
        return;
    }
    if (row >= bound.length()) return;
    long cap = std::min(maxpart, bound.parts[row]);
    for (long p = std::min(cap, target); p >= 1; --p) {
        acc.push_back(p);
        partitions_in(bound, target - p, row + 1, p, acc, out);
        acc.pop_back();
    }
}

std::vector<Partition> partitions_inside(const Partition& bound, long target) {
    std::vector<Partition> out;
    if (target == 0) {
        out.emplace_back();
        return out;
    }
    std::vector<long> acc;
    partitions_in(bound, target, 0, target, acc, out);
    return out;
}

Partition meet(const Partition& a, const Partition& b) {
    std::vector<long> m;
    for (int i = 0; i < std::min(a.length(), b.length()); ++i)
        m.push_back(std::min(a.parts[i], b.parts[i]));
    return Partition(std::move(m));
}

bool chain_dfs(const std::array<Partition, 6>& t, const std::array<long, 6>& sizes,
               std::array<Partition, 6>& alpha, int i) {
    if (i == 6) return lr_positive(alpha[5], alpha[0], t[5]);
    // alpha[i] participates in edge i-1 (with alpha[i-1]) and edge i.
    const Partition bound = meet(t[i - 1], t[i]);
    for (auto& cand : partitions_inside(bound, sizes[i])) {
        if (!lr_positive(alpha[i - 1], cand, t[i - 1])) continue;
        alpha[i] = cand;
        if (chain_dfs(t, sizes, alpha, i + 1)) return true;
    }
    return false;
}

} // namespace

std::optional<ChainWitness> lr_positive_chain(const std::array<Partition, 6>& targets) {
    std::array<long, 6> tsz{};
    for (int i = 0; i < 6; ++i) tsz[i] = targets[i].size();
    // |alpha_i| + |alpha_{i+1}| = |targets_i| cyclically: solvable iff the
    // alternating sum vanishes, then one free parameter sigma = |alpha_1|.
    long alt = tsz[0] - tsz[1] + tsz[2] - tsz[3] + tsz[4] - tsz[5];
    if (alt != 0) return std::nullopt;
    long lo = 0, hi = tsz[0];
    std::array<long, 6> pre{}; // sizes with sigma = 0
    pre[0] = 0;
    for (int i = 1; i < 6; ++i) pre[i] = tsz[i - 1] - pre[i - 1];
    for (int i = 0; i < 6; ++i) {
        // s_i = pre_i + (-1)^i sigma >= 0
        if (i % 2 == 0)
            lo = std::max(lo, -pre[i]);
        else
            hi = std::min(hi, pre[i]);
    }
    for (long sigma = lo; sigma <= hi; ++sigma) {
        std::array<long, 6> sizes{};
        for (int i = 0; i < 6; ++i) sizes[i] = pre[i] + (i % 2 == 0 ? sigma : -sigma);
        std::array<Partition, 6> alpha{};
        bool ok = false;
        for (auto& a1 : partitions_inside(meet(targets[0], targets[5]), sizes[0])) {
            alpha[0] = a1;
            if (chain_dfs(targets, sizes, alpha, 1)) {
                ok = true;
                break;
            }
        }
        if (ok) return ChainWitness{alpha};
    }
    return std::nullopt;
}

long ssyt_count(const Partition& p, int n) {
    require(n >= 0, Errc::invalid_argument, "ssyt_count: n must be nonnegative");
    if (p.length() > n) return 0;
    // hook content formula: prod (n + j - i) / h(i,j)
    Rat r = 1;
    std::vector<long> conj(p.part(0), 0);
    for (int i = 0; i < p.length(); ++i)
        for (long j = 0; j < p.parts[i]; ++j) ++conj[j];
    for (int i = 0; i < p.length(); ++i) {
        for (long j = 0; j < p.parts[i]; ++j) {
            long hook = (p.parts[i] - j) + (conj[j] - i) - 1;
            r *= Rat(n + j - i) / Rat(hook);
        }
    }
    require(rat_is_integer(r), Errc::internal, "hook content formula must give an integer");
    return rat_to_long(r);
}

} // namespace tensorcone
