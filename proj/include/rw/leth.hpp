#pragma once
// Near-arithmetic structure in sparse sets: block progressions, homogeneity,
// the (m,r)-density property, gap ratios and the SIM profile F_{δ,ε,A}.

#include "rw/core.hpp"

#include <cmath>
#include <functional>
#include <limits>

namespace rw {

// ---------------------------------------------------------------------------
// Gap ratio

/// Longest run of non-members inside I.
inline i64 longest_free_run(const IntSet& a, const Interval& I) {
    i64 best = 0, prev = I.lo - 1;
    auto it = std::lower_bound(a.members().begin(), a.members().end(), I.lo);
    for (; it != a.members().end() && *it <= I.hi; ++it) {
        best = std::max(best, *it - prev - 1);
        prev = *it;
    }
    return std::max(best, I.hi - prev);
}

/// g_A(I) = (d - c)/|I| for the longest A-free [c,d] ⊆ I; 0 when there is none.
inline Rational gap_ratio(const IntSet& a, const Interval& I) {
    i64 run = longest_free_run(a, I);
    return run == 0 ? Rational(0) : Rational(run - 1, I.length());
}

/// Fraction of I covered by the consecutive blocks of length ⌊ρ|I|/2⌋+1 that
/// meet A (the last block may be shorter).
inline Rational resolution_coverage(const IntSet& a, const Interval& I, Rational rho) {
    if (rho <= 0 || rho >= 1) throw InputError("resolution: need 0 < rho < 1");
    i64 b = boost::rational_cast<i64>(rho * I.length() / 2) + 1;
    i64 covered = 0;
    for (i64 s = I.lo; s <= I.hi; s += b) {
        i64 e = std::min(I.hi, s + b - 1);
        if (a.count_in(s, e) > 0) covered += e - s + 1;
    }
    return Rational(covered, I.length());
}

// ---------------------------------------------------------------------------
// Block progressions

struct BlockProgression {
    i64 b = 1, t = 1, d = 1, w = 0;

    BlockProgression() = default;
    BlockProgression(i64 b_, i64 t_, i64 d_, i64 w_) : b(b_), t(t_), d(d_), w(w_) {
        if (t < 1 || d < 1 || w < 0) throw InputError("progression: need t >= 1, d >= 1, w >= 0");
    }
    Interval block(i64 i) const { return Interval(b + i * d, b + i * d + w); }
    i64 last() const { return b + (t - 1) * d + w; }
    Interval span() const { return Interval(b, last()); }
};

struct ProgressionVerdict {
    bool nearly_contains = true;
    std::optional<i64> first_missed_block;
    bool homogeneous = true;     // only meaningful when s was given
    std::vector<Rational> block_density;
    Rational ambient{0};
    Rational min_block{0}, max_block{0};
    bool pass = true;
};

/// Near containment (every block meets A) and, with s, homogeneity:
/// δ(A,block_i) ≥ (1-s)δ(A,I) and δ(A,block_i) ≥ (1-s)δ(A,block_j).
inline ProgressionVerdict progression_check(const IntSet& a, const BlockProgression& p,
                                            std::optional<Rational> s = {}, std::optional<Interval> I = {}) {
    const Interval& win = a.window();
    if (p.b < win.lo || p.last() > win.hi) throw InputError("progression: P lies outside A's window");
    if (s && !I) throw InputError("progression: homogeneity needs an ambient interval");
    if (I && (p.b < I->lo || p.last() > I->hi)) throw InputError("progression: P must lie inside I");
    if (s && (*s < 0 || *s > 1)) throw InputError("progression: s must lie in [0,1]");
    ProgressionVerdict v;
    for (i64 i = 0; i < p.t; ++i) {
        auto blk = p.block(i);
        i64 c = a.count_in(blk);
        if (c == 0 && v.nearly_contains) {
            v.nearly_contains = false;
            v.first_missed_block = i;
        }
        if (s) v.block_density.emplace_back(c, blk.length());
    }
    if (s) {
        v.ambient = rel_density(a, *I);
        v.min_block = *std::min_element(v.block_density.begin(), v.block_density.end());
        v.max_block = *std::max_element(v.block_density.begin(), v.block_density.end());
        Rational f = Rational(1) - *s;
        v.homogeneous = v.min_block >= f * v.ambient && v.min_block >= f * v.max_block;
    }
    v.pass = v.nearly_contains && v.homogeneous;
    return v;
}

// ---------------------------------------------------------------------------
// (m,r)-density property

struct DensityPropertyVerdict {
    bool pass = true;
    bool sampled = false;
    Interval worst;
    Rational worst_ratio{0};  // δ(A,J)/δ(A,I)
    Rational ambient{0};
    u64 checked = 0;
};

/// Every J ⊆ I with |J| ≥ |I|/m has δ(A,J) ≤ r·δ(A,I). Exhaustive when
/// |I| ≤ exhaustive_limit, otherwise starts and lengths step by ⌈|I|/2000⌉
/// (flagged as sampled). The worst J maximizes δ(A,J); ties go to the least
/// start, then the least length.
inline DensityPropertyVerdict density_property(const IntSet& a, const Interval& I, i64 m, Rational r,
                                               i64 exhaustive_limit = 5000) {
    if (m < 1) throw InputError("density_property: m must be >= 1");
    if (r <= 1) throw InputError("density_property: r must exceed 1");
    i64 total = a.count_in(I);
    if (total == 0) throw InputError("density_property: A ∩ I is empty");
    i64 n = I.length();
    i64 minlen = (n + m - 1) / m;
    i64 stride = n <= exhaustive_limit ? 1 : (n + 1999) / 2000;
    auto pre = a.restricted(I).prefix_counts();
    struct Best {
        i64 c = -1, len = 1, lo = 0;
        u64 checked = 0;
    };
    auto parts = parallel_chunks(0, (n - minlen) / stride + 1, [&](i64 s0, i64 s1) {
        Best b;
        for (i64 si = s0; si < s1; ++si) {
            i64 off = si * stride;
            for (i64 len = minlen; off + len <= n; len += stride) {
                i64 c = pre[off + len] - pre[off];
                ++b.checked;
                if (b.c < 0 || static_cast<__int128>(c) * b.len > static_cast<__int128>(b.c) * len) b = {c, len, off, b.checked};
            }
        }
        return b;
    });
    Best top;
    u64 checked = 0;
    for (auto& b : parts) {
        checked += b.checked;
        if (b.c >= 0 && (top.c < 0 || static_cast<__int128>(b.c) * top.len > static_cast<__int128>(top.c) * b.len)) top = b;
    }
    DensityPropertyVerdict v;
    v.sampled = stride > 1;
    v.checked = checked;
    v.ambient = Rational(total, n);
    v.worst = Interval(I.lo + top.lo, I.lo + top.lo + top.len - 1);
    v.worst_ratio = Rational(top.c, top.len) / v.ambient;
    v.pass = v.worst_ratio <= r;
    return v;
}

// ---------------------------------------------------------------------------
// Progression search

/// h: rational step function of x = d/n; g: growth function of m.
struct LethFunctions {
    std::string h_name = "x", g_name = "x";
    std::function<Rational(Rational)> h = [](Rational x) { return x; };
    std::function<double(i64)> g = [](i64 m) { return static_cast<double>(m); };
};

/// Presets h=x, h=x^2, g=x, g=log2, g=x^2, or a step table for h:
/// "t1:v1,t2:v2,..." meaning h(x) = v_i for the last t_i ≤ x (0 below t1).
inline LethFunctions leth_functions(const std::string& h, const std::string& g) {
    LethFunctions f;
    f.h_name = h;
    f.g_name = g;
    if (h == "x") f.h = [](Rational x) { return x; };
    else if (h == "x^2") f.h = [](Rational x) { return x * x; };
    else {
        std::vector<std::pair<Rational, Rational>> steps;
        std::stringstream ss(h);
        std::string item;
        while (std::getline(ss, item, ',')) {
            auto colon = item.find(':');
            if (colon == std::string::npos) throw InputError("h: expected preset x, x^2 or a table t:v,...");
            steps.emplace_back(parse_rational(item.substr(0, colon)), parse_rational(item.substr(colon + 1)));
        }
        if (steps.empty()) throw InputError("h: empty table");
        for (std::size_t i = 1; i < steps.size(); ++i)
            if (steps[i].first <= steps[i - 1].first || steps[i].second < steps[i - 1].second)
                throw InputError("h: table must have increasing thresholds and be monotone");
        f.h = [steps](Rational x) {
            Rational v(0);
            for (auto& [t, val] : steps)
                if (t <= x) v = val;
            return v;
        };
    }
    if (g == "x") f.g = [](i64 m) { return static_cast<double>(m); };
    else if (g == "x^2") f.g = [](i64 m) { return static_cast<double>(m) * static_cast<double>(m); };
    else if (g == "log2") f.g = [](i64 m) { return std::log2(static_cast<double>(m)); };
    else throw InputError("g: expected preset x, x^2 or log2");
    return f;
}

struct LethCertificate {
    BlockProgression p;
    Rational d_over_n{0}, w_over_d{0}, h_value{0};
    double inv_g = 0;
    Rational inv_j{0};
    ProgressionVerdict verdict;
    std::optional<DensityPropertyVerdict> density;
    u64 checked = 0;
};

/// Independent re-check of every parameter inequality.
inline bool verify_leth(const IntSet& a, i64 n, i64 t, Rational s, i64 j, const LethFunctions& f, i64 m,
                        const LethCertificate& c) {
    if (c.p.t != t || c.p.b < 1 || c.p.last() > n) return false;
    Rational x(c.p.d, n);
    if (!(Rational(c.p.w, c.p.d) < f.h(x))) return false;
    if (!(x < Rational(1, j))) return false;
    if (!(static_cast<double>(c.p.d) * f.g(m) > static_cast<double>(n))) return false;
    if ((c.p.d & (c.p.d - 1)) != 0) return false;
    return progression_check(a, c.p, s, Interval(1, n)).pass;
}

/// d runs over powers of 2 with n/g(m) < d < n/j (ascending), then b, then w
/// from 0 while w/d < h(d/n). The first (t,d,w)-progression passing the
/// homogeneity-s check on [1,n] is returned. With r, the (m,r)-density
/// property is evaluated first and recorded.
inline std::optional<LethCertificate> progression_search(const IntSet& a, i64 n, i64 t, Rational s, i64 j,
                                                         const LethFunctions& f, i64 m,
                                                         std::optional<Rational> r = {}) {
    if (n < 1 || t < 1 || j < 1 || m < 1) throw InputError("search: n, t, j, m must be positive");
    if (a.window().lo > 1 || a.window().hi < n) throw InputError("search: A's window must cover [1,n]");
    Interval I(1, n);
    std::optional<DensityPropertyVerdict> dp;
    if (r && a.count_in(I) > 0) dp = density_property(a, I, m, *r);
    auto pre = a.restricted(I).prefix_counts();
    auto cnt = [&](i64 lo, i64 hi) { return pre[hi] - pre[lo - 1]; };
    i64 total = pre[n];
    // homogeneity with s = sn/sd: (sd-sn)·δ_ref ≤ sd·δ_i, cross-multiplied
    i64 sn = s.numerator(), sd = s.denominator();
    u64 checked = 0;
    for (i64 d = 1; d < n; d *= 2) {
        if (!(static_cast<double>(d) * f.g(m) > static_cast<double>(n))) continue;
        if (!(Rational(d, n) < Rational(1, j))) break;
        Rational hv = f.h(Rational(d, n));
        i64 wmax = -1;  // largest w with w/d < h
        while (Rational(wmax + 1, d) < hv) ++wmax;
        if (wmax < 0) continue;
        i64 bmax = n - (t - 1) * d;  // with w = 0
        if (bmax < 1) continue;
        auto hits = parallel_chunks(1, bmax + 1, [&](i64 b0, i64 b1) -> std::pair<std::optional<BlockProgression>, u64> {
            u64 local = 0;
            for (i64 b = b0; b < b1; ++b)
                for (i64 w = 0; w <= wmax && b + (t - 1) * d + w <= n; ++w) {
                    ++local;
                    i64 lo_c = std::numeric_limits<i64>::max(), hi_c = -1;
                    bool hit = true;
                    for (i64 i = 0; i < t && hit; ++i) {
                        i64 c = cnt(b + i * d, b + i * d + w);
                        hit = c > 0;
                        lo_c = std::min(lo_c, c);
                        hi_c = std::max(hi_c, c);
                    }
                    if (!hit) continue;
                    // all blocks have length w+1: compare counts directly
                    __int128 L = w + 1;
                    bool amb = static_cast<__int128>(sd) * lo_c * n >= static_cast<__int128>(sd - sn) * total * L;
                    bool pair = static_cast<__int128>(sd) * lo_c >= static_cast<__int128>(sd - sn) * hi_c;
                    if (amb && pair) return {BlockProgression(b, t, d, w), local};
                }
            return {std::nullopt, local};
        });
        for (auto& [hit, c] : hits) {
            checked += c;
            if (!hit) continue;
            LethCertificate cert;
            cert.p = *hit;
            cert.d_over_n = Rational(d, n);
            cert.w_over_d = Rational(hit->w, d);
            cert.h_value = hv;
            cert.inv_g = 1.0 / f.g(m);
            cert.inv_j = Rational(1, j);
            cert.verdict = progression_check(a, *hit, s, I);
            cert.density = dp;
            cert.checked = checked;
            if (!verify_leth(a, n, t, s, j, f, m, cert)) throw std::logic_error("search: certificate failed re-check");
            return cert;
        }
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// SIM profile F_{δ,ε,A}(n)
//
// F(n) = 0 when no I of length ≥ n inside the window has g_A(I) ≤ δ;
// otherwise the least k such that some such I has k A-free subintervals of
// total length ≥ ε|I|, or the +∞ sentinel when no finite k works.

inline constexpr i64 sim_infinite = -1;

struct SimProfile {
    Rational delta{0}, epsilon{0};
    Interval window;
    std::vector<std::pair<i64, i64>> values;  // (n, F(n)); 0 = no interval, -1 = +∞

    /// 0 and +∞ both read as +∞.
    bool monotone() const {
        auto key = [](i64 v) { return v <= 0 ? std::numeric_limits<i64>::max() : v; };
        for (std::size_t i = 1; i < values.size(); ++i)
            if (values[i].first >= values[i - 1].first && key(values[i].second) < key(values[i - 1].second)) return false;
        return true;
    }
};

namespace detail {

/// Multiset of run lengths with "sum of the K largest" queries.
class TopSums {
public:
    explicit TopSums(i64 maxlen) : n_(maxlen), cnt_(maxlen + 1, 0), sum_(maxlen + 1, 0) {
        while ((i64{1} << (log_ + 1)) <= n_) ++log_;
    }
    void add(i64 len) {
        for (i64 i = n_ - len + 1; i <= n_; i += i & -i) {
            cnt_[i] += 1;
            sum_[i] += len;
        }
        ++size_;
    }
    i64 size() const { return size_; }
    /// sum of the K largest (K ≤ size)
    i64 top(i64 K) const {
        if (K <= 0) return 0;
        i64 pos = 0, c = 0, s = 0;
        for (int b = log_; b >= 0; --b) {
            i64 nx = pos + (i64{1} << b);
            if (nx <= n_ && c + cnt_[nx] <= K) {
                pos = nx;
                c += cnt_[nx];
                s += sum_[nx];
            }
        }
        // remaining K - c copies of the next length (index pos + 1)
        if (c < K) s += (K - c) * (n_ - pos);
        return s;
    }

private:
    i64 n_;
    int log_ = 0;
    i64 size_ = 0;
    std::vector<i64> cnt_, sum_;
};

/// least K with top_K(R ∪ extras) ≥ ε·L, or sim_infinite
inline i64 least_k(const TopSums& r, i64 e1, i64 e2, i64 L, i64 en, i64 ed) {
    i64 hi_e = std::max(e1, e2), lo_e = std::min(e1, e2);
    i64 ne = (hi_e > 0) + (lo_e > 0);
    auto top = [&](i64 K) {
        i64 best = r.top(std::min(K, r.size()));
        if (ne >= 1 && K >= 1) best = std::max(best, hi_e + r.top(std::min(K - 1, r.size())));
        if (ne >= 2 && K >= 2) best = std::max(best, hi_e + lo_e + r.top(std::min(K - 2, r.size())));
        return best;
    };
    auto ok = [&](i64 K) { return static_cast<__int128>(top(K)) * ed >= static_cast<__int128>(en) * L; };
    i64 maxK = r.size() + ne;
    if (maxK == 0 || !ok(maxK)) return sim_infinite;
    i64 lo = 1, hi = maxK;
    while (lo < hi) {
        i64 mid = (lo + hi) / 2;
        if (ok(mid)) hi = mid;
        else lo = mid + 1;
    }
    return lo;
}

inline i64 ceil_ratio(__int128 num, __int128 den) {
    // den > 0
    __int128 q = num / den;
    if (num % den != 0 && num > 0) ++q;
    return static_cast<i64>(q);
}
inline i64 floor_ratio(__int128 num, __int128 den) {
    __int128 q = num / den;
    if (num % den != 0 && num < 0) --q;
    return static_cast<i64>(q);
}

}  // namespace detail

/// Exact F over the window. Intervals are grouped by the maximal runs
/// (member or free) holding their endpoints. For fixed left offset u the
/// admissible right offsets form an interval [v0, v1], and for each k the set
/// of right offsets that work is a prefix or a suffix of it (the top-k sum
/// with a growing trailing run is the max of a decreasing and an increasing
/// margin), so only v0 and v1 need evaluating. The shorter side is looped.
inline SimProfile sim_profile(const IntSet& a, Rational delta, Rational eps, std::vector<i64> n_range,
                              std::optional<Interval> window = {}) {
    if (!(delta > 0 && delta < eps && eps < 1)) throw InputError("sim: need 0 < delta < epsilon < 1");
    if (n_range.empty()) throw InputError("sim: empty n range");
    for (i64 n : n_range)
        if (n < 1) throw InputError("sim: n must be >= 1");
    std::sort(n_range.begin(), n_range.end());
    n_range.erase(std::unique(n_range.begin(), n_range.end()), n_range.end());
    Interval W = window.value_or(a.window());
    SimProfile prof;
    prof.delta = delta;
    prof.epsilon = eps;
    prof.window = W;

    struct Seg {
        i64 lo, hi;
        bool free;
        i64 len() const { return hi - lo + 1; }
    };
    std::vector<Seg> seg;
    {
        auto bits = a.restricted(W).bits();
        for (i64 x = W.lo; x <= W.hi; ++x) {
            bool f = !bits.test(x);
            if (seg.empty() || seg.back().free != f) seg.push_back({x, x, f});
            else seg.back().hi = x;
        }
    }
    const i64 dn = delta.numerator(), dd = delta.denominator();
    const i64 en = eps.numerator(), ed = eps.denominator();
    const std::size_t nn = n_range.size();
    const i64 K_NONE = std::numeric_limits<i64>::max();  // no eligible interval seen
    const i64 K_INF = std::numeric_limits<i64>::max() - 1;
    auto fold = [](i64 k) { return k == sim_infinite ? std::numeric_limits<i64>::max() - 1 : k; };

    auto parts = parallel_chunks(0, static_cast<i64>(seg.size()), [&](i64 a0, i64 a1) {
        std::vector<i64> best(nn, K_NONE);
        auto offer = [&](std::size_t ni, i64 k) { best[ni] = std::min(best[ni], fold(k)); };
        for (i64 ai = a0; ai < a1; ++ai) {
            const Seg& A = seg[ai];
            // intervals inside one run
            for (std::size_t ni = 0; ni < nn; ++ni) {
                i64 n = n_range[ni];
                if (!A.free) {
                    if (A.len() >= n) offer(ni, sim_infinite);
                } else {
                    // L - 1 ≤ δL  ⇔  L(dd - dn) ≤ dd ; k = 1
                    i64 Lmax = std::min(A.len(), detail::floor_ratio(dd, dd - dn));
                    if (Lmax >= n) offer(ni, 1);
                }
            }
            detail::TopSums R(W.length());
            i64 rstar = 0;
            for (std::size_t bi = ai + 1; bi < seg.size(); ++bi) {
                const Seg& B = seg[bi];
                if (bi > static_cast<std::size_t>(ai) + 1 && seg[bi - 1].free) {
                    R.add(seg[bi - 1].len());
                    rstar = std::max(rstar, seg[bi - 1].len());
                }
                i64 mid = B.lo - A.hi - 1;
                bool swap = A.len() > B.len();  // loop the shorter side
                const Seg& S = swap ? B : A;    // looped
                const Seg& O = swap ? A : B;    // solved
                for (i64 u = 1; u <= S.len(); ++u) {
                    i64 p = S.free ? u : 0;
                    // lower bounds on L: r*-1 ≤ δL, p-1 ≤ δL
                    i64 need = 0;
                    if (rstar > 1) need = std::max(need, detail::ceil_ratio(static_cast<__int128>(rstar - 1) * dd, dn));
                    if (p > 1) need = std::max(need, detail::ceil_ratio(static_cast<__int128>(p - 1) * dd, dn));
                    i64 base = u + mid;  // L = base + v
                    i64 vlo = std::max<i64>(1, need - base);
                    i64 vhi = O.len();
                    if (O.free) {
                        // v - 1 ≤ δ(base + v)  ⇔  v(dd - dn) ≤ dd + dn·base
                        vhi = std::min(vhi, detail::floor_ratio(static_cast<__int128>(dd) + static_cast<__int128>(dn) * base, dd - dn));
                    }
                    if (vlo > vhi) continue;
                    auto kat = [&](i64 v) { return detail::least_k(R, p, O.free ? v : 0, base + v, en, ed); };
                    i64 k_hi = kat(vhi);
                    i64 prev_v = -1, prev_k = 0;
                    for (std::size_t ni = 0; ni < nn; ++ni) {
                        i64 v0 = std::max(vlo, n_range[ni] - base);
                        if (v0 > vhi) break;
                        i64 k0 = v0 == prev_v ? prev_k : kat(v0);
                        prev_v = v0;
                        prev_k = k0;
                        offer(ni, fold(k0) < fold(k_hi) ? k0 : k_hi);
                    }
                }
            }
        }
        return best;
    });
    std::vector<i64> best(nn, K_NONE);
    for (auto& p : parts)
        for (std::size_t i = 0; i < nn; ++i) best[i] = std::min(best[i], p[i]);
    // F(n) is a minimum over intervals of length ≥ n: fold in larger n
    for (std::size_t i = nn; i-- > 1;) best[i - 1] = std::min(best[i - 1], best[i]);
    for (std::size_t i = 0; i < nn; ++i) {
        i64 v = best[i] == K_NONE ? 0 : best[i] == K_INF ? sim_infinite : best[i];
        prof.values.emplace_back(n_range[i], v);
    }
    return prof;
}

}  // namespace rw
