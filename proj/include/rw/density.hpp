#pragma once

#include "rw/core.hpp"

namespace rw {

struct DensityReport {
    Rational upper{0};
    Rational lower{0};
    Rational shnirelman{0};
    Rational banach_estimate{0};
    i64 banach_n = 0;
    std::optional<Interval> banach_block;
    i64 tail_start = 1;
};

/// Prefix densities of A ⊆ [1, N]. The lower density is taken over the tail
/// n ∈ [n0, N]; n0 defaults to ⌈N/2⌉.
inline DensityReport prefix_densities(const IntSet& a, i64 N, std::optional<i64> n0 = {}) {
    if (N < 1) throw InputError("prefix_densities: N must be >= 1");
    if (!a.empty() && (a.min() < 1 || a.max() > N)) throw InputError("prefix_densities: members must lie in [1,N]");
    i64 tail = n0.value_or((N + 1) / 2);
    if (tail < 1 || tail > N) throw InputError("prefix_densities: tail start outside [1,N]");
    DensityReport r;
    r.tail_start = tail;
    r.upper = Rational(0);
    r.lower = Rational(1);
    r.shnirelman = Rational(1);
    i64 cnt = 0;
    auto it = a.members().begin();
    for (i64 n = 1; n <= N; ++n) {
        if (it != a.members().end() && *it == n) {
            ++cnt;
            ++it;
        }
        Rational d(cnt, n);
        r.upper = std::max(r.upper, d);
        r.shnirelman = std::min(r.shnirelman, d);
        if (n >= tail) r.lower = std::min(r.lower, d);
    }
    return r;
}

struct BlockMax {
    Rational value{0};
    i64 count = 0;
    Interval witness;
};

/// Δ_n restricted to `search`: the densest length-n subinterval, least lo on ties.
inline BlockMax block_max(const IntSet& a, i64 n, const Interval& search) {
    if (n < 1) throw InputError("block_max: n must be >= 1");
    if (n > search.length()) throw InputError("block_max: n exceeds the search interval");
    i64 starts = search.length() - n + 1;
    auto pre = a.restricted(search).prefix_counts();
    auto best = parallel_chunks(0, starts, [&](i64 lo, i64 hi) {
        std::pair<i64, i64> b{-1, 0};  // (count, offset)
        for (i64 s = lo; s < hi; ++s) {
            i64 c = pre[s + n] - pre[s];
            if (c > b.first) b = {c, s};
        }
        return b;
    });
    std::pair<i64, i64> top{-1, 0};
    for (auto& b : best)
        if (b.first > top.first) top = b;  // chunks are in order, so strict > keeps least lo
    BlockMax r;
    r.count = top.first;
    r.value = Rational(top.first, n);
    r.witness = Interval(search.lo + top.second, search.lo + top.second + n - 1);
    return r;
}

/// Max number of members in any length-n interval inside `search` (the
/// subadditive sequence behind the Banach density).
inline i64 max_count(const IntSet& a, i64 n, const Interval& search) { return block_max(a, n, search).count; }

/// min_n Δ_n over the requested block lengths, searched over A's window.
/// Ties keep the first length in the list.
inline DensityReport banach_estimate(const IntSet& a, const std::vector<i64>& block_lengths,
                                     std::optional<Interval> search = {}) {
    if (block_lengths.empty()) throw InputError("banach_estimate: no block lengths");
    Interval s = search.value_or(a.window());
    DensityReport r;
    bool first = true;
    for (i64 n : block_lengths) {
        auto b = block_max(a, n, s);
        if (first || b.value < r.banach_estimate) {
            r.banach_estimate = b.value;
            r.banach_n = n;
            r.banach_block = b.witness;
            first = false;
        }
    }
    return r;
}

enum class MannVariant { mann, banach_mann };

struct MannVerdict {
    bool pass = true;
    bool empirical = false;
    Rational lhs{0};  // σ_N(A+B) or est(A+B+{0,1})
    Rational rhs{0};  // min{σ_N(A)+σ_N(B), 1} or min{est(A)+est(B), 1}
    std::optional<i64> first_violation;
};

/// min_{1≤n≤N} |A ∩ [1,n]| / n
inline Rational window_shnirelman(const IntSet& a, i64 N) {
    Rational best(1);
    i64 cnt = 0;
    for (i64 n = 1; n <= N; ++n) {
        if (a.contains(n)) ++cnt;
        best = std::min(best, Rational(cnt, n));
    }
    return best;
}

/// Mann: checks |(A+B) ∩ [1,n]| ≥ min{σ_N(A)+σ_N(B), 1}·n for every n ≤ N.
/// banach_mann compares window Banach estimates of A+B+{0,1} with
/// min{est(A)+est(B), 1}; that comparison is only a sanity check at finite scale.
inline MannVerdict mann_check(const IntSet& a, const IntSet& b, i64 N, MannVariant variant,
                              std::vector<i64> block_lengths = {}) {
    if (N < 1) throw InputError("mann_check: N must be >= 1");
    MannVerdict v;
    Interval win(0, N);
    IntSet ra = a.restricted(win), rb = b.restricted(win);
    if (variant == MannVariant::mann) {
        if (!a.contains(0) || !b.contains(0)) throw InputError("mann_check: 0 must belong to both sets");
        IntSet c = sumset(ra, rb).restricted(win);
        Rational sa = window_shnirelman(ra, N), sb = window_shnirelman(rb, N);
        v.rhs = std::min(sa + sb, Rational(1));
        v.lhs = window_shnirelman(c, N);
        i64 cnt = 0;
        for (i64 n = 1; n <= N; ++n) {
            if (c.contains(n)) ++cnt;
            if (Rational(cnt) < v.rhs * n) {
                v.pass = false;
                v.first_violation = n;
                break;
            }
        }
        return v;
    }
    v.empirical = true;
    if (block_lengths.empty())
        for (i64 d : {20, 10, 5})
            block_lengths.push_back(std::max<i64>(1, N / d));
    IntSet c = sumset(sumset(ra, rb), IntSet::range(0, 1)).restricted(win);
    Rational ea = ra.empty() ? Rational(0) : banach_estimate(ra, block_lengths, win).banach_estimate;
    Rational eb = rb.empty() ? Rational(0) : banach_estimate(rb, block_lengths, win).banach_estimate;
    v.lhs = c.empty() ? Rational(0) : banach_estimate(c, block_lengths, win).banach_estimate;
    v.rhs = std::min(ea + eb, Rational(1));
    v.pass = v.lhs >= v.rhs;
    return v;
}

}  // namespace rw
