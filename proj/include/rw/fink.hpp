#pragma once
// FIN_k: finitely supported maps ℕ → [0,k] attaining k, block sums,
// regressive maps (tetris and its generalizations) and a small Gowers search.

#include "rw/common.hpp"

#include <cmath>
#include <functional>
#include <numeric>
#include <sstream>

namespace rw {

/// k = 0 with empty support is the zero vector.
struct FinkVec {
    int k = 0;
    std::vector<std::pair<int, int>> entries;  // (position ≥ 1, value in [1,k]), positions increasing

    static FinkVec zero() { return {}; }

    static FinkVec make(std::vector<std::pair<int, int>> e) {
        std::sort(e.begin(), e.end());
        FinkVec v;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i].first < 1) throw InputError("fink: positions must be >= 1");
            if (i && e[i].first == e[i - 1].first) throw InputError("fink: repeated position " + std::to_string(e[i].first));
            if (e[i].second < 0) throw InputError("fink: negative value");
            if (e[i].second == 0) continue;
            v.entries.push_back(e[i]);
            v.k = std::max(v.k, e[i].second);
        }
        return v;
    }

    bool is_zero() const { return entries.empty(); }
    int min_pos() const { return entries.front().first; }
    int max_pos() const { return entries.back().first; }
    int at(int pos) const {
        for (auto [p, v] : entries)
            if (p == pos) return v;
        return 0;
    }
    std::vector<int> support() const {
        std::vector<int> s;
        for (auto [p, v] : entries) s.push_back(p);
        return s;
    }
    friend bool operator==(const FinkVec&, const FinkVec&) = default;
    friend auto operator<=>(const FinkVec&, const FinkVec&) = default;

    /// "pos:val,pos:val"; "0" for the zero vector
    std::string to_string() const {
        if (is_zero()) return "0";
        std::string s;
        for (auto [p, v] : entries) {
            if (!s.empty()) s += ",";
            s += std::to_string(p) + ":" + std::to_string(v);
        }
        return s;
    }
};

inline FinkVec parse_finkvec(const std::string& text) {
    if (text == "0") return FinkVec::zero();
    std::vector<std::pair<int, int>> e;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto colon = item.find(':');
        if (colon == std::string::npos) throw InputError("fink: expected pos:val, got '" + item + "'");
        try {
            std::size_t u1 = 0, u2 = 0;
            std::string a = item.substr(0, colon), b = item.substr(colon + 1);
            int p = std::stoi(a, &u1), v = std::stoi(b, &u2);
            if (u1 != a.size() || u2 != b.size()) throw std::invalid_argument("trailing");
            e.emplace_back(p, v);
        } catch (const std::logic_error&) {
            throw InputError("fink: bad entry '" + item + "'");
        }
    }
    if (e.empty()) throw InputError("fink: empty vector literal");
    return FinkVec::make(std::move(e));
}

/// Nondecreasing surjection f: [0,k] → [0, f(k)] with f(0) = 0.
struct RegressiveMap {
    std::vector<int> table;  // f(0..k)

    explicit RegressiveMap(std::vector<int> t) : table(std::move(t)) {
        if (table.empty() || table[0] != 0) throw InputError("regressive map: need f(0) = 0");
        for (std::size_t i = 1; i < table.size(); ++i)
            if (table[i] - table[i - 1] != 0 && table[i] - table[i - 1] != 1)
                throw InputError("regressive map: must be a nondecreasing surjection onto [0,f(k)]");
    }
    int k() const { return static_cast<int>(table.size()) - 1; }
    int top() const { return table.back(); }
    int operator()(int i) const { return table[i]; }

    static RegressiveMap identity(int k) {
        std::vector<int> t(static_cast<std::size_t>(k) + 1);
        std::iota(t.begin(), t.end(), 0);
        return RegressiveMap(t);
    }
    /// T(i) = max(i-1, 0)
    static RegressiveMap tetris(int k) {
        std::vector<int> t(static_cast<std::size_t>(k) + 1);
        for (int i = 0; i <= k; ++i) t[i] = std::max(i - 1, 0);
        return RegressiveMap(t);
    }
    /// All 2^k maps on [0,k], by step mask (bit i-1 set: f(i) = f(i-1) + 1).
    static std::vector<RegressiveMap> all(int k) {
        std::vector<RegressiveMap> out;
        for (u64 mask = 0; mask < (u64{1} << k); ++mask) {
            std::vector<int> t{0};
            for (int i = 1; i <= k; ++i) t.push_back(t.back() + static_cast<int>(mask >> (i - 1) & 1));
            out.emplace_back(t);
        }
        return out;
    }
    friend bool operator==(const RegressiveMap&, const RegressiveMap&) = default;
};

/// g ∘ f, defined when g acts on [0, f(k)].
inline RegressiveMap compose(const RegressiveMap& g, const RegressiveMap& f) {
    if (g.k() != f.top()) throw InputError("compose: g must act on [0,f(k)]");
    std::vector<int> t;
    for (int i = 0; i <= f.k(); ++i) t.push_back(g(f(i)));
    return RegressiveMap(t);
}

inline FinkVec regressive_apply(const RegressiveMap& f, const FinkVec& b) {
    if (b.k != f.k()) throw InputError("regressive_apply: vector is in FIN_" + std::to_string(b.k) + ", map acts on [0," +
                                       std::to_string(f.k()) + "]");
    FinkVec out;
    for (auto [p, v] : b.entries)
        if (int w = f(v); w > 0) out.entries.emplace_back(p, w);
    out.k = f.top();
    return out;
}

/// Sum of a block sequence: supports must satisfy Supp(x_i) < Supp(x_{i+1}).
/// Zero vectors are neutral.
inline FinkVec block_combine(const std::vector<FinkVec>& xs) {
    FinkVec out;
    for (const auto& x : xs) {
        if (x.is_zero()) continue;
        if (!out.is_zero() && out.max_pos() >= x.min_pos())
            throw InputError("block_combine: supports overlap or are out of order at position " + std::to_string(x.min_pos()));
        out.entries.insert(out.entries.end(), x.entries.begin(), x.entries.end());
        out.k = std::max(out.k, x.k);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Gowers search

using FinkColoring = std::function<int(const FinkVec&)>;

/// FIN_k over [1,n], ordered by last support position, then by the value
/// string read from position 1.
inline std::vector<FinkVec> fink_population(int k, int n) {
    if (k < 1 || n < 1) throw InputError("fink: need k, n >= 1");
    double size = std::pow(k + 1.0, n);
    if (size > 5e6) throw InputError("fink: population (k+1)^n too large");
    std::vector<FinkVec> out;
    for (int last = 1; last <= n; ++last) {
        // positions 1..last-1 free in [0,k], position `last` nonzero
        std::vector<int> v(static_cast<std::size_t>(last), 0);
        v[last - 1] = 1;
        while (true) {
            int mx = *std::max_element(v.begin(), v.end());
            if (mx == k) {
                FinkVec x;
                x.k = k;
                for (int i = 0; i < last; ++i)
                    if (v[i]) x.entries.emplace_back(i + 1, v[i]);
                out.push_back(std::move(x));
            }
            // odometer; the last position changes fastest
            int j = last - 1;
            while (j >= 0) {
                int lo = j == last - 1 ? 1 : 0;
                if (v[j] < k) {
                    ++v[j];
                    break;
                }
                v[j] = lo;
                --j;
            }
            if (j < 0) break;
        }
    }
    return out;
}

/// Every combination f_1(x_1) + ... + f_l(x_l) with max f_i(k) = k.
template <class Fn>
bool for_each_gowers_combination(const std::vector<FinkVec>& xs, int k, Fn&& fn) {
    auto maps = RegressiveMap::all(k);
    std::vector<std::size_t> pick(xs.size(), 0);
    while (true) {
        int top = 0;
        std::vector<FinkVec> parts;
        for (std::size_t i = 0; i < xs.size(); ++i) {
            top = std::max(top, maps[pick[i]].top());
            parts.push_back(regressive_apply(maps[pick[i]], xs[i]));
        }
        if (top == k && !fn(block_combine(parts))) return false;
        std::size_t j = 0;
        while (j < xs.size() && pick[j] == maps.size() - 1) pick[j++] = 0;
        if (j == xs.size()) return true;
        ++pick[j];
    }
}

/// Combinations of a prefix with every map allowed (zero maps included);
/// with need_top only those where some map reaches k.
template <class Fn>
bool for_each_gowers_combination_prefix(const std::vector<FinkVec>& xs, int k, bool need_top, Fn&& fn) {
    auto maps = RegressiveMap::all(k);
    std::vector<std::size_t> pick(xs.size(), 0);
    while (true) {
        int top = 0;
        std::vector<FinkVec> parts;
        for (std::size_t i = 0; i < xs.size(); ++i) {
            top = std::max(top, maps[pick[i]].top());
            parts.push_back(regressive_apply(maps[pick[i]], xs[i]));
        }
        if ((!need_top || top == k) && !fn(block_combine(parts))) return false;
        std::size_t j = 0;
        while (j < xs.size() && pick[j] == maps.size() - 1) pick[j++] = 0;
        if (j == xs.size()) return true;
        ++pick[j];
    }
}

struct GowersResult {
    SearchStatus status = SearchStatus::exhausted;
    std::vector<FinkVec> blocks;
    int color = 0;
    u64 nodes = 0;
};

/// First block sequence x_1 < ... < x_l (in population order per level)
/// whose combinations are all one color.
inline GowersResult gowers_search(int k, int n, int l, const FinkColoring& c, u64 budget = default_budget) {
    if (l < 1) throw InputError("gowers: target length must be >= 1");
    if (k > 3 || n > 10) throw InputError("gowers: capped at k <= 3, n <= 10");
    auto pop = fink_population(k, n);
    Budget b(budget);
    GowersResult out;
    std::vector<FinkVec> seq;
    auto maps = RegressiveMap::all(k);
    // color of the prefix, fixed by its first combination
    std::function<bool(std::size_t, int)> dfs = [&](std::size_t from, int col) -> bool {
        if (static_cast<int>(seq.size()) == l) {
            out.color = col;
            return true;
        }
        for (std::size_t idx = from; idx < pop.size(); ++idx) {
            const auto& x = pop[idx];
            if (!seq.empty() && x.min_pos() <= seq.back().max_pos()) continue;
            // leave room for the remaining blocks
            if (x.max_pos() + (l - 1 - static_cast<int>(seq.size())) > n) break;
            if (!b.spend()) return false;
            seq.push_back(x);
            // only combinations with a nonzero map on the new block are new
            int c0 = col;
            bool ok = true;
            std::vector<FinkVec> head(seq.begin(), seq.end() - 1);
            for (const auto& f : maps) {
                if (f.top() == 0) continue;
                FinkVec fx = regressive_apply(f, x);
                bool need_top = f.top() < k;
                ok = for_each_gowers_combination_prefix(head, k, need_top, [&](const FinkVec& h) {
                    int cc = c(block_combine({h, fx}));
                    if (c0 == 0) c0 = cc;
                    return cc == c0;
                });
                if (!ok) break;
            }
            if (ok && dfs(idx + 1, c0)) return true;
            seq.pop_back();
            if (b.exhausted()) return false;
        }
        return false;
    };
    bool hit = dfs(0, 0);
    out.nodes = b.used();
    if (hit) {
        out.status = SearchStatus::found;
        out.blocks = seq;
    } else {
        out.status = b.exhausted() ? SearchStatus::budget : SearchStatus::exhausted;
    }
    return out;
}

}  // namespace rw
