#pragma once
// Partitions of [1,n] into color-constant paths under a 2-coloring of pairs
// (or r colors): path i only uses edges of color i.
//
// pivot policies follow the infinite construction with the ultrafilter
// replaced by a vertex p: every other vertex v is owed to path c(v, p) and is
// appended either directly or through one unused intermediate vertex. p
// itself is attached last. sequential is a plain depth-first search that grows
// path 1 from vertex 1, always trying to extend before closing.

#include "rw/core.hpp"

namespace rw {

enum class PivotPolicy { max_degree_balance, fixed_last, sequential };

inline std::string_view to_string(PivotPolicy p) {
    switch (p) {
        case PivotPolicy::max_degree_balance: return "max-degree-balance";
        case PivotPolicy::fixed_last: return "fixed-last";
        case PivotPolicy::sequential: return "sequential";
    }
    return "?";
}

struct PathResult {
    SearchStatus status = SearchStatus::exhausted;
    std::vector<std::vector<int>> paths;  // paths[i-1] has color i
    int pivot = 0;                         // 0 for sequential
    std::string method;
    u64 nodes = 0;
};

/// Independent validity oracle: partition of [1,n] and color-constancy.
inline bool verify_paths(const PairColoring& c, const std::vector<std::vector<int>>& paths) {
    if (c.m() != 2 || static_cast<int>(paths.size()) > c.r()) return false;
    std::vector<int> seen(static_cast<std::size_t>(c.n()) + 1, 0);
    for (std::size_t i = 0; i < paths.size(); ++i) {
        for (std::size_t j = 0; j < paths[i].size(); ++j) {
            int v = paths[i][j];
            if (v < 1 || v > c.n() || seen[v]++) return false;
            if (j && c.pair(paths[i][j - 1], v) != static_cast<int>(i) + 1) return false;
        }
    }
    for (int v = 1; v <= c.n(); ++v)
        if (!seen[v]) return false;
    return true;
}

inline int choose_pivot(const PairColoring& c, PivotPolicy policy) {
    int n = c.n();
    if (policy == PivotPolicy::fixed_last || n == 1) return n;
    int best = 1;
    int best_spread = INT_MAX;
    for (int v = 1; v <= n; ++v) {
        std::vector<int> deg(static_cast<std::size_t>(c.r()) + 1, 0);
        for (int u = 1; u <= n; ++u)
            if (u != v) ++deg[c.pair(u, v)];
        auto [lo, hi] = std::minmax_element(deg.begin() + 1, deg.end());
        if (*hi - *lo < best_spread) {
            best_spread = *hi - *lo;
            best = v;
        }
    }
    return best;
}

namespace detail {

struct PathState {
    const PairColoring& c;
    Budget& budget;
    std::vector<std::vector<int>> paths;
    std::vector<char> used;
    bool out_of_budget = false;

    bool tick() {
        if (!budget.spend()) out_of_budget = true;
        return !out_of_budget;
    }
    bool fits(int i, int v) const { return paths[i].empty() || c.pair(paths[i].back(), v) == i + 1; }
};

inline bool pivot_dfs(PathState& s, int pivot, int v) {
    int n = s.c.n();
    while (v <= n && (v == pivot || s.used[v])) ++v;
    if (!s.tick()) return false;
    if (v > n) {
        // attach the pivot at either end of some path
        for (int i = 0; i < s.c.r(); ++i) {
            auto& p = s.paths[i];
            if (s.fits(i, pivot)) {
                p.push_back(pivot);
                return true;
            }
            if (s.c.pair(p.front(), pivot) == i + 1) {
                p.insert(p.begin(), pivot);
                return true;
            }
        }
        return false;
    }
    int i = s.c.pair(v, pivot) - 1;
    auto& p = s.paths[i];
    if (s.fits(i, v)) {
        p.push_back(v);
        s.used[v] = 1;
        if (pivot_dfs(s, pivot, v + 1)) return true;
        s.used[v] = 0;
        p.pop_back();
        if (s.out_of_budget) return false;
    }
    if (p.empty()) return false;
    for (int f = 1; f <= n; ++f) {
        if (f == v || f == pivot || s.used[f]) continue;
        if (s.c.pair(p.back(), f) != i + 1 || s.c.pair(f, v) != i + 1) continue;
        p.push_back(f);
        p.push_back(v);
        s.used[f] = s.used[v] = 1;
        if (pivot_dfs(s, pivot, v + 1)) return true;
        s.used[f] = s.used[v] = 0;
        p.pop_back();
        p.pop_back();
        if (s.out_of_budget) return false;
    }
    return false;
}

inline bool sequential_dfs(PathState& s, int i, int remaining) {
    if (!s.tick()) return false;
    if (remaining == 0) return true;
    int r = s.c.r(), n = s.c.n();
    if (i >= r) return false;
    auto& p = s.paths[i];
    if (p.empty()) {
        for (int v = 1; v <= n; ++v) {
            if (s.used[v]) continue;
            p.push_back(v);
            s.used[v] = 1;
            if (sequential_dfs(s, i, remaining - 1)) return true;
            s.used[v] = 0;
            p.pop_back();
            if (s.out_of_budget) return false;
        }
        // leave path i empty
        return sequential_dfs(s, i + 1, remaining);
    }
    for (int v = 1; v <= n; ++v) {
        if (s.used[v] || s.c.pair(p.back(), v) != i + 1) continue;
        p.push_back(v);
        s.used[v] = 1;
        if (sequential_dfs(s, i, remaining - 1)) return true;
        s.used[v] = 0;
        p.pop_back();
        if (s.out_of_budget) return false;
    }
    return sequential_dfs(s, i + 1, remaining);
}

}  // namespace detail

/// found: a valid decomposition (checked by verify_paths); exhausted: the
/// chosen method has no solution (for the pivot policies this only means the
/// greedy failed; the sequential search is complete); budget: ran out.
/// With fallback, a failed pivot run is followed by the sequential search.
inline PathResult rado_paths(const PairColoring& c, PivotPolicy policy = PivotPolicy::max_degree_balance,
                             u64 budget = default_budget, bool fallback = true) {
    if (c.m() != 2) throw InputError("paths: need a coloring of pairs");
    if (c.n() < 1) throw InputError("paths: need n >= 1");
    Budget b(budget);
    PathResult out;
    auto run = [&](PivotPolicy pol) {
        detail::PathState s{c, b, std::vector<std::vector<int>>(static_cast<std::size_t>(c.r())),
                            std::vector<char>(static_cast<std::size_t>(c.n()) + 1, 0)};
        bool ok;
        if (pol == PivotPolicy::sequential) {
            out.pivot = 0;
            ok = detail::sequential_dfs(s, 0, c.n());
        } else {
            out.pivot = choose_pivot(c, pol);
            ok = detail::pivot_dfs(s, out.pivot, 1);
        }
        out.method = std::string(to_string(pol));
        if (ok) {
            out.status = SearchStatus::found;
            out.paths = std::move(s.paths);
        } else {
            out.status = s.out_of_budget ? SearchStatus::budget : SearchStatus::exhausted;
        }
    };
    run(policy);
    if (out.status != SearchStatus::found && fallback && policy != PivotPolicy::sequential && !b.exhausted())
        run(PivotPolicy::sequential);
    out.nodes = b.used();
    if (out.status == SearchStatus::found && !verify_paths(c, out.paths))
        throw std::logic_error("paths: decomposition failed validation");
    return out;
}

}  // namespace rw
