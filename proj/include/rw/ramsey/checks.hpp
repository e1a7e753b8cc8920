#pragma once
// Finite-sums / Milliken-Taylor verification and quantitative Schur statistics.

#include "rw/core.hpp"

namespace rw {

struct FsItem {
    std::vector<int> indices;  // 1-based positions of x (F, or F1 then F2 for pairs)
    i64 sum = 0;
    i64 sum2 = 0;              // second sum for m = 2
};

struct FsVerdict {
    bool pass = true;
    int color = 0;                              // common color when pass
    std::optional<std::pair<FsItem, FsItem>> first_violation;  // reference item, offending item
    std::vector<FsItem> out_of_domain;
    u64 checked = 0;
};

namespace detail {
inline std::vector<int> mask_indices(u64 mask) {
    std::vector<int> v;
    for (int i = 0; mask >> i; ++i)
        if (mask >> i & 1) v.push_back(i + 1);
    return v;
}
inline i64 mask_sum(const std::vector<i64>& x, u64 mask) {
    i64 s = 0;
    for (std::size_t i = 0; i < x.size(); ++i)
        if (mask >> i & 1) s += x[i];
    return s;
}
}  // namespace detail

/// FS(x) monochromatic under c. Sums are visited by subset mask 1, 2, 3, ...
inline FsVerdict fs_check(const std::vector<i64>& x, const Coloring& c) {
    if (x.empty() || x.size() > 24) throw InputError("fs: need 1..24 elements");
    for (i64 v : x)
        if (v < 1) throw InputError("fs: elements must be positive");
    FsVerdict out;
    std::optional<FsItem> ref;
    for (u64 mask = 1; mask < (u64{1} << x.size()); ++mask) {
        FsItem it{detail::mask_indices(mask), detail::mask_sum(x, mask), 0};
        if (it.sum > c.n()) {
            out.out_of_domain.push_back(it);
            continue;
        }
        ++out.checked;
        if (!ref) {
            ref = it;
            out.color = c(it.sum);
        } else if (c(it.sum) != out.color && out.pass) {
            out.pass = false;
            out.first_violation = std::make_pair(*ref, it);
        }
    }
    if (!out.pass) out.color = 0;
    return out;
}

/// {x_F1, x_F2} monochromatic under a pair coloring for all nonempty F1 < F2
/// (max F1 < min F2). Equal sums cannot form a pair and count as a violation.
inline FsVerdict mt_check(const std::vector<i64>& x, const PairColoring& c) {
    if (c.m() != 2) throw InputError("mt: need a pair coloring");
    if (x.empty() || x.size() > 14) throw InputError("mt: need 1..14 elements");
    for (i64 v : x)
        if (v < 1) throw InputError("mt: elements must be positive");
    int k = static_cast<int>(x.size());
    FsVerdict out;
    std::optional<FsItem> ref;
    for (u64 m1 = 1; m1 < (u64{1} << k); ++m1) {
        int top = 63 - std::countl_zero(m1);
        for (u64 m2 = u64{1} << (top + 1); m2 < (u64{1} << k); ++m2) {
            if (m2 & ((u64{1} << (top + 1)) - 1)) continue;
            auto idx = detail::mask_indices(m1);
            for (int j : detail::mask_indices(m2)) idx.push_back(j);
            FsItem it{idx, detail::mask_sum(x, m1), detail::mask_sum(x, m2)};
            if (it.sum > c.n() || it.sum2 > c.n()) {
                out.out_of_domain.push_back(it);
                continue;
            }
            ++out.checked;
            if (it.sum == it.sum2) {
                if (out.pass) {
                    out.pass = false;
                    out.first_violation = std::make_pair(ref.value_or(it), it);
                }
                continue;
            }
            int col = c.pair(static_cast<int>(it.sum), static_cast<int>(it.sum2));
            if (!ref) {
                ref = it;
                out.color = col;
            } else if (col != out.color && out.pass) {
                out.pass = false;
                out.first_violation = std::make_pair(*ref, it);
            }
        }
    }
    if (!out.pass) out.color = 0;
    return out;
}

// ---------------------------------------------------------------------------
// Quantitative Schur: R_{i,ε} = {n ∈ C_i : d̄(C_i ∩ (C_i − n)) ≥ d̄(C_i)² − ε}.
//
// Window upper density of S over [lo, lo+L-1]: max over ℓ ∈ [⌈L/2⌉, L] of
// |S ∩ [lo, lo+ℓ-1]| / ℓ. For a shift n the intersection lives on
// [lo, hi-n]; candidates n are restricted to the first half of the window so
// that every such window keeps at least half its length. R is measured on
// that first half.

inline Rational window_upper_density(const IntSet& s, const Interval& w) {
    i64 L = w.length();
    i64 from = (L + 1) / 2;
    Rational best(0);
    i64 cnt = 0;
    auto it = std::lower_bound(s.members().begin(), s.members().end(), w.lo);
    for (i64 l = 1; l <= L; ++l) {
        if (it != s.members().end() && *it == w.lo + l - 1) {
            ++cnt;
            ++it;
        }
        if (l >= from) best = std::max(best, Rational(cnt, l));
    }
    return best;
}

struct SchurColorReport {
    int color = 0;
    Rational density{0};        // d̄(C_i)
    Rational threshold{0};      // d̄(C_i)² − ε
    i64 r_size = 0;
    Rational r_density{0};      // d̄(R_{i,ε})
    std::vector<i64> r_sample;  // first members of R
};

struct SchurReport {
    std::vector<SchurColorReport> colors;
    int best_color = 0;
    Interval window;
    Interval candidates;
};

inline SchurReport quantitative_schur(const Coloring& c, Rational eps, std::optional<Interval> window = {}) {
    if (eps <= 0) throw InputError("qschur: epsilon must be positive");
    Interval w = window.value_or(Interval(1, c.n()));
    if (w.lo < 1 || w.hi > c.n() || w.length() < 2) throw InputError("qschur: window must lie in the coloring's domain");
    Interval cand(w.lo, w.lo + w.length() / 2 - 1);
    SchurReport rep;
    rep.window = w;
    rep.candidates = cand;
    for (int i = 1; i <= c.r(); ++i) {
        SchurColorReport cr;
        cr.color = i;
        IntSet ci = c.color_class(i).restricted(w);
        cr.density = window_upper_density(ci, w);
        cr.threshold = cr.density * cr.density - eps;
        const auto bits = ci.bits();
        std::vector<i64> ns;
        for (i64 n : ci.members())
            if (n <= cand.hi) ns.push_back(n);
        auto parts = parallel_chunks(0, static_cast<i64>(ns.size()), [&](i64 lo, i64 hi) {
            std::vector<i64> keep;
            for (i64 j = lo; j < hi; ++j) {
                i64 n = ns[j];
                Interval sub(w.lo, w.hi - n);
                i64 L = sub.length(), from = (L + 1) / 2, cnt = 0;
                i64 bn = 0, bd = 1;  // best cnt/l, compared by cross-multiplication
                for (i64 l = 1; l <= L; ++l) {
                    i64 y = w.lo + l - 1;
                    if (bits.test(y) && bits.test(y + n)) ++cnt;
                    if (l >= from && cnt * bd > bn * l) bn = cnt, bd = l;
                }
                if (Rational(bn, bd) >= cr.threshold) keep.push_back(n);
            }
            return keep;
        });
        std::vector<i64> r;
        for (auto& p : parts) r.insert(r.end(), p.begin(), p.end());
        IntSet rs(cand, r);
        cr.r_size = rs.size();
        cr.r_density = window_upper_density(rs, cand);
        for (std::size_t j = 0; j < r.size() && j < 20; ++j) cr.r_sample.push_back(r[j]);
        if (rep.best_color == 0 || cr.r_density > rep.colors[rep.best_color - 1].r_density) rep.best_color = i;
        rep.colors.push_back(std::move(cr));
    }
    return rep;
}

}  // namespace rw
