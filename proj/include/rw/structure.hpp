#pragma once
// Thickness, syndeticity, piecewise syndeticity, finite embeddability,
// difference-set covers, the elementary sumset cover and the B+C finder.

#include "rw/core.hpp"

namespace rw {

struct StructureCert {
    i64 longest_run = 0;
    i64 max_gap = 0;
    std::optional<i64> pws_k;
    std::optional<Interval> pws_interval;
    std::optional<IntSet> translates;
};

// Gaps are distances between consecutive members. With `boundary` set, the
// points lo-1 and hi+1 act as members, so the stretches before the first and
// after the last member of A count too.
inline std::vector<i64> gap_list(const IntSet& a, const Interval& I, bool boundary = true) {
    auto r = a.restricted(I);
    std::vector<i64> pts;
    if (boundary) pts.push_back(I.lo - 1);
    pts.insert(pts.end(), r.members().begin(), r.members().end());
    if (boundary) pts.push_back(I.hi + 1);
    std::vector<i64> g;
    for (std::size_t i = 1; i < pts.size(); ++i) g.push_back(pts[i] - pts[i - 1]);
    return g;
}

inline i64 longest_run(const IntSet& a, const Interval& I) {
    auto r = a.restricted(I);
    i64 best = 0, cur = 0, prev = 0;
    for (i64 x : r.members()) {
        cur = (cur > 0 && x == prev + 1) ? cur + 1 : 1;
        prev = x;
        best = std::max(best, cur);
    }
    return best;
}

/// max_gap is 0 when A covers I; otherwise the largest member distance.
inline StructureCert structure_report(const IntSet& a, const Interval& I, bool boundary = true) {
    StructureCert c;
    c.longest_run = longest_run(a, I);
    if (c.longest_run == I.length()) return c;
    for (i64 g : gap_list(a, I, boundary)) c.max_gap = std::max(c.max_gap, g);
    return c;
}

/// Largest gap of A on J (boundary convention), L+1 when A ∩ J = ∅.
inline i64 gap_on(const IntSet& a, const Interval& J) {
    i64 g = 0;
    for (i64 x : gap_list(a, J)) g = std::max(g, x);
    return g;
}

/// Least k such that some length-L window J ⊆ I has every gap of A on J at
/// most k; the least-lo such J is the witness.
inline std::optional<std::pair<i64, Interval>> pws_witness(const IntSet& a, i64 L, const Interval& I) {
    if (L < 1 || L > I.length()) throw InputError("pws_witness: need 1 <= L <= |I|");
    auto r = a.restricted(I);
    if (r.empty()) return std::nullopt;
    const auto& m = r.members();
    // sparse table over consecutive differences
    std::size_t nd = m.size() > 1 ? m.size() - 1 : 0;
    std::vector<std::vector<i64>> st;
    if (nd) {
        st.emplace_back(nd);
        for (std::size_t i = 0; i < nd; ++i) st[0][i] = m[i + 1] - m[i];
        for (std::size_t j = 1; (std::size_t{1} << j) <= nd; ++j) {
            std::size_t len = std::size_t{1} << j;
            st.emplace_back(nd - len + 1);
            for (std::size_t i = 0; i + len <= nd; ++i)
                st[j][i] = std::max(st[j - 1][i], st[j - 1][i + len / 2]);
        }
    }
    auto range_max = [&](std::size_t l, std::size_t rr) -> i64 {  // diffs [l, rr)
        if (l >= rr) return 0;
        int j = std::bit_width(rr - l) - 1;
        return std::max(st[j][l], st[j][rr - (std::size_t{1} << j)]);
    };
    auto starts = I.length() - L + 1;
    auto parts = parallel_chunks(0, starts, [&](i64 lo, i64 hi) {
        std::pair<i64, i64> best{std::numeric_limits<i64>::max(), 0};
        for (i64 s = lo; s < hi; ++s) {
            i64 jl = I.lo + s, jh = jl + L - 1;
            auto f = std::lower_bound(m.begin(), m.end(), jl);
            auto e = std::upper_bound(f, m.end(), jh);
            i64 g;
            if (f == e) {
                g = L + 1;
            } else {
                std::size_t fi = f - m.begin(), li = (e - m.begin()) - 1;
                g = std::max({*f - (jl - 1), (jh + 1) - m[li], range_max(fi, li)});
            }
            if (g < best.first) best = {g, s};
        }
        return best;
    });
    std::pair<i64, i64> best{std::numeric_limits<i64>::max(), 0};
    for (auto& p : parts)
        if (p.first < best.first) best = p;
    return std::make_pair(best.first, Interval(I.lo + best.second, I.lo + best.second + L - 1));
}

/// Least t in `shifts` with t + F ⊆ Y.
inline std::optional<i64> finite_embed(const IntSet& f, const IntSet& y, const Interval& shifts) {
    if (f.empty()) throw InputError("finite_embed: F must be nonempty");
    for (i64 t = shifts.lo; t <= shifts.hi; ++t) {
        bool ok = true;
        for (i64 x : f.members())
            if (!y.contains(x + t)) {
                ok = false;
                break;
            }
        if (ok) return t;
    }
    return std::nullopt;
}

/// Greedy cover of `target` by translates of E - E. Each new translate point
/// is an uncovered target point, so the translates E + x stay pairwise
/// disjoint; hence |F| ≤ (|target| + span(E) - 1) / |E|.
inline IntSet diff_cover(const IntSet& e, const Interval& target) {
    if (e.empty()) throw InputError("diff_cover: E must be nonempty");
    IntSet d = combine(e, e, CombineMode::difference);
    BitWindow db = d.bits();
    BitWindow unc(target.lo, target.hi);
    for (i64 x = target.lo; x <= target.hi; ++x) unc.set(x);
    i64 left = target.length();
    std::vector<i64> f;
    while (left > 0) {
        auto cand = unc.members();
        // gain(x) = |unc ∩ (D + x)|
        auto parts = parallel_chunks(0, static_cast<i64>(cand.size()), [&](i64 lo, i64 hi) {
            std::pair<i64, i64> best{-1, 0};
            for (i64 i = lo; i < hi; ++i) {
                i64 g = unc.count_and_shifted(db, -cand[i]);
                if (g > best.first) best = {g, cand[i]};
            }
            return best;
        });
        std::pair<i64, i64> best{-1, 0};
        for (auto& p : parts)
            if (p.first > best.first) best = p;
        i64 x = best.second;
        f.push_back(x);
        BitWindow next(target.lo, target.hi);
        for (i64 y : cand)
            if (!d.contains(y - x)) next.set(y);
            else --left;
        unc = std::move(next);
    }
    return IntSet::of(std::move(f));
}

/// target ⊆ (E - E) + F, checked point by point.
inline bool verify_diff_cover(const IntSet& e, const Interval& target, const IntSet& f) {
    IntSet d = combine(e, e, CombineMode::difference);
    for (i64 z = target.lo; z <= target.hi; ++z) {
        bool hit = false;
        for (i64 x : f.members())
            if (d.contains(z - x)) {
                hit = true;
                break;
            }
        if (!hit) return false;
    }
    return true;
}

struct JinCover {
    IntSet F;
    Interval interval;       // longest run of A + B + F through the certified block
    Interval certified;      // shift + target, covered by construction
    Rational alpha{0}, beta{0};
    i64 k = 0;               // maximizing shift
    i64 overlap = 0;         // |(C - k) ∩ D|
    i64 bound = 0;           // ⌈1/(αβ)⌉ + 1
    bool thick_ok = false;   // interval length ≥ L
};

/// Elementary sumset cover: normalize A to C ⊆ [1,n] and -B to D ⊆ [1,m],
/// take the shift k maximizing |(C - k) ∩ D|, cover a centered target by
/// translates of E - E with E = (C - k) ∩ D, and transport back:
/// A + B ⊇ (E - E) + k + lo(A) + hi(B).
inline JinCover jin_cover(const IntSet& a, const IntSet& b, i64 L) {
    if (a.empty() || b.empty()) throw DomainError("jin_cover: density product is zero");
    i64 n = a.window().length(), m = b.window().length();
    if (10 * m > n) throw InputError("jin_cover: need |window(B)| <= |window(A)|/10");
    JinCover out;
    out.alpha = Rational(static_cast<i64>(a.size()), n);
    out.beta = Rational(static_cast<i64>(b.size()), m);
    Rational ab = out.alpha * out.beta;
    out.bound = ceil_div(Rational(1) / ab) + 1;

    IntSet c = a.shifted(1 - a.window().lo).with_window(Interval(1, n + m));
    std::vector<i64> dm;
    for (i64 x : b.members()) dm.push_back(b.window().hi - x + 1);
    IntSet d(Interval(1, m), dm);
    BitWindow cb = c.bits(), dbits = d.bits();
    auto parts = parallel_chunks(0, n + 1, [&](i64 lo, i64 hi) {
        std::pair<i64, i64> best{-1, 0};
        for (i64 k = lo; k < hi; ++k) {
            i64 cnt = dbits.count_and_shifted(cb, k);
            if (cnt > best.first) best = {cnt, k};
        }
        return best;
    });
    std::pair<i64, i64> best{-1, 0};
    for (auto& p : parts)
        if (p.first > best.first) best = p;
    out.k = best.second;
    out.overlap = best.first;
    std::vector<i64> em;
    for (i64 x : d.members())
        if (c.contains(x + out.k)) em.push_back(x);
    if (em.empty()) throw DomainError("jin_cover: empty overlap");
    IntSet e = IntSet::of(em);
    i64 span = e.max() - e.min();
    i64 len = std::max<i64>(1, std::min((out.bound + 1) * static_cast<i64>(e.size()) - span, 2 * span + 1));
    i64 tlo = -(len / 2);
    Interval target(tlo, tlo + len - 1);
    out.F = diff_cover(e, target);
    i64 shift = out.k + a.window().lo + b.window().hi;
    out.certified = target.shifted(shift);

    IntSet abf = sumset(sumset(a, b), out.F);
    // verify the certified block and grow it to a maximal run
    for (i64 z = out.certified.lo; z <= out.certified.hi; ++z)
        if (!abf.contains(z)) throw std::logic_error("jin_cover: certified block not covered");
    i64 lo = out.certified.lo, hi = out.certified.hi;
    while (abf.contains(lo - 1)) --lo;
    while (abf.contains(hi + 1)) ++hi;
    out.interval = Interval(lo, hi);
    out.thick_ok = out.interval.length() >= L;
    return out;
}

/// Independent re-check: interval ⊆ A + B + F, with A + B formed pair by pair.
inline bool verify_jin_cover(const IntSet& a, const IntSet& b, const JinCover& j) {
    i64 lo = a.window().lo + b.window().lo;
    std::vector<char> ab(static_cast<std::size_t>(a.window().length() + b.window().length()), 0);
    for (i64 x : a.members())
        for (i64 y : b.members()) ab[x + y - lo] = 1;
    auto in_ab = [&](i64 z) { return z >= lo && z - lo < static_cast<i64>(ab.size()) && ab[z - lo]; };
    for (i64 z = j.interval.lo; z <= j.interval.hi; ++z) {
        bool hit = false;
        for (i64 f : j.F.members())
            if (in_ab(z - f)) {
                hit = true;
                break;
            }
        if (!hit) return false;
    }
    return true;
}

struct NathansonResult {
    IntSet B;
    IntSet C;
    std::vector<i64> steps;
};

/// Iterated shift intersection: B_i = B_{i-1} ∩ (B_{i-1} - c_i) with c_i
/// maximizing |B_i| (least c on ties). Then B_{n-1} + {0, c_1, c_1+c_2, ...} ⊆ A.
inline std::optional<NathansonResult> nathanson_find(const IntSet& a, i64 n, std::optional<Interval> search = {}) {
    if (n < 1) throw InputError("nathanson_find: n must be >= 1");
    if (a.empty()) return std::nullopt;
    i64 span = a.max() - a.min();
    Interval s = search.value_or(Interval(1, std::max<i64>(1, span / 4)));
    if (s.lo < 1) throw InputError("nathanson_find: shifts must be positive");
    IntSet cur = a;
    std::vector<i64> steps, cs{0};
    for (i64 i = 1; i < n; ++i) {
        BitWindow bb = cur.bits();
        auto parts = parallel_chunks(s.lo, s.hi + 1, [&](i64 lo, i64 hi) {
            std::pair<i64, i64> best{-1, 0};
            for (i64 c = lo; c < hi; ++c) {
                i64 cnt = bb.count_and_shifted(bb, c);
                if (cnt > best.first) best = {cnt, c};
            }
            return best;
        });
        std::pair<i64, i64> best{-1, 0};
        for (auto& p : parts)
            if (p.first > best.first) best = p;
        if (best.first <= 0) return std::nullopt;
        i64 c = best.second;
        std::vector<i64> next;
        for (i64 x : cur.members())
            if (cur.contains(x + c)) next.push_back(x);
        cur = IntSet(a.window(), std::move(next));
        steps.push_back(c);
        cs.push_back(cs.back() + c);
    }
    NathansonResult r{cur, IntSet::of(cs), steps};
    for (i64 x : r.B.members())
        for (i64 c : r.C.members())
            if (!a.contains(x + c)) throw std::logic_error("nathanson_find: B + C not inside A");
    return r;
}

}  // namespace rw
