#pragma once
// Partition regularity of single equations: the ≈u string calculus, witness
// polynomials for Rado's criterion, monochromatic solution search, colorings
// without monochromatic solutions, and unit-fraction equations.

#include "rw/core.hpp"
#include "rw/equation.hpp"
#include "rw/ramsey/kernel.hpp"

#include <numeric>

namespace rw {

using IntString = std::vector<i64>;

/// Delete zeros, collapse maximal runs of equal entries, repeat to fixpoint.
inline IntString u_normal_form(IntString s) {
    while (true) {
        IntString t;
        for (i64 x : s)
            if (x != 0 && (t.empty() || t.back() != x)) t.push_back(x);
        if (t == s) return t;
        s = std::move(t);
    }
}

inline bool u_equivalent(const IntString& a, const IntString& b) { return u_normal_form(a) == u_normal_form(b); }

// ---------------------------------------------------------------------------
// Integer polynomials as coefficient strings (index = degree).

using Poly = std::vector<i64>;

inline Poly poly_trim(Poly p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
    return p;
}

inline std::string poly_to_string(const Poly& p) {
    std::string s;
    for (std::size_t j = 0; j < p.size(); ++j) {
        if (p[j] == 0) continue;
        if (!s.empty()) s += p[j] < 0 ? " - " : " + ";
        else if (p[j] < 0) s += "-";
        i64 a = std::abs(p[j]);
        if (j == 0 || a != 1) s += std::to_string(a);
        if (j >= 1) s += "X";
        if (j >= 2) s += "^" + std::to_string(j);
    }
    return s.empty() ? "0" : s;
}

struct WitnessPolys {
    std::vector<i64> coef;   // as given
    std::vector<i64> a;      // a_0..a_{k-2}
    std::vector<Poly> polys; // polys[i] goes with coef[i]
};

/// Σ c_i P_i = 0, pairwise distinct, each P_i ≈u Σ a_j X^j.
inline bool verify_witness(const WitnessPolys& w) {
    std::size_t k = w.coef.size();
    if (w.polys.size() != k || w.a.size() + 1 != k) return false;
    for (i64 x : w.a)
        if (x < 1) return false;
    std::size_t deg = 0;
    for (const auto& p : w.polys) deg = std::max(deg, p.size());
    for (std::size_t j = 0; j < deg; ++j) {
        __int128 s = 0;
        for (std::size_t i = 0; i < k; ++i) s += static_cast<__int128>(w.coef[i]) * (j < w.polys[i].size() ? w.polys[i][j] : 0);
        if (s != 0) return false;
    }
    auto target = u_normal_form(w.a);
    for (std::size_t i = 0; i < k; ++i) {
        if (u_normal_form(w.polys[i]) != target) return false;
        for (std::size_t j = i + 1; j < k; ++j)
            if (poly_trim(w.polys[i]) == poly_trim(w.polys[j])) return false;
    }
    return true;
}

/// Witness polynomials from the three templates (coefficients sorted in
/// decreasing order first). Each template coefficient is one of the unknowns
/// a_j; Σ c_i P_i = 0 is solved by coefficient matching with exact rational
/// elimination and scaled to the least positive integer solution.
inline WitnessPolys rado_witness(const std::vector<i64>& c) {
    int k = static_cast<int>(c.size());
    if (k <= 2) throw InputError("rado_witness: need k > 2 coefficients");
    i64 total = 0;
    for (i64 x : c) {
        if (x == 0) throw InputError("rado_witness: zero coefficient");
        total += x;
    }
    if (total != 0) throw InputError("rado_witness: coefficients must sum to 0");
    std::vector<int> order(k);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int x, int y) { return c[x] > c[y]; });
    std::vector<i64> cs(k);
    for (int i = 0; i < k; ++i) cs[i] = c[order[i]];

    // templ[i][j] = index of the unknown at X^j in P_{i+1}, or -1 for 0
    std::vector<std::vector<int>> templ(k, std::vector<int>(k, -1));
    for (int j = 0; j <= k - 2; ++j) templ[0][j] = j;
    templ[0][k - 1] = k - 2;
    for (int i = 2; i <= k - 1; ++i) {
        for (int j = 0; j <= k - i - 1; ++j) templ[i - 1][j] = j;
        for (int j = k - i + 1; j <= k - 1; ++j) templ[i - 1][j] = j - 1;
    }
    templ[k - 1][0] = 0;
    for (int j = 1; j <= k - 1; ++j) templ[k - 1][j] = j - 1;

    // one row per power of X, one column per unknown
    int u = k - 1;
    std::vector<std::vector<Rational>> m(k, std::vector<Rational>(u, Rational(0)));
    for (int j = 0; j < k; ++j)
        for (int i = 0; i < k; ++i)
            if (templ[i][j] >= 0) m[j][templ[i][j]] += cs[i];
    // reduced row echelon form
    std::vector<int> pivcol;
    int row = 0;
    for (int col = 0; col < u && row < k; ++col) {
        int p = row;
        while (p < k && m[p][col] == 0) ++p;
        if (p == k) continue;
        std::swap(m[p], m[row]);
        Rational inv = Rational(1) / m[row][col];
        for (auto& x : m[row]) x *= inv;
        for (int r = 0; r < k; ++r)
            if (r != row && m[r][col] != 0) {
                Rational f = m[r][col];
                for (int cc = 0; cc < u; ++cc) m[r][cc] -= f * m[row][cc];
            }
        pivcol.push_back(col);
        ++row;
    }
    std::vector<char> is_piv(u, 0);
    for (int pc : pivcol) is_piv[pc] = 1;
    // free unknowns set to 1, pivots solved
    std::vector<Rational> sol(u, Rational(0));
    for (int col = 0; col < u; ++col)
        if (!is_piv[col]) sol[col] = 1;
    for (std::size_t r = 0; r < pivcol.size(); ++r) {
        Rational s(0);
        for (int col = 0; col < u; ++col)
            if (!is_piv[col]) s -= m[r][col] * sol[col];
        sol[pivcol[r]] = s;
    }
    i64 den = 1;
    for (auto& x : sol) den = std::lcm(den, x.denominator());
    std::vector<i64> a(u);
    i64 g = 0;
    for (int j = 0; j < u; ++j) {
        a[j] = (sol[j] * den).numerator();
        g = std::gcd(g, std::abs(a[j]));
    }
    if (g == 0) throw DomainError("rado_witness: only the zero solution");
    bool neg = a[0] < 0;
    for (auto& x : a) x = (neg ? -x : x) / g;
    for (i64 x : a)
        if (x <= 0) throw DomainError("rado_witness: no positive solution");

    WitnessPolys w;
    w.coef = c;
    w.a = a;
    w.polys.resize(k);
    for (int i = 0; i < k; ++i) {
        Poly p(k, 0);
        for (int j = 0; j < k; ++j)
            if (templ[i][j] >= 0) p[j] = a[templ[i][j]];
        w.polys[order[i]] = poly_trim(p);
    }
    if (!verify_witness(w)) throw std::logic_error("rado_witness: verification failed");
    return w;
}

// ---------------------------------------------------------------------------
// Monochromatic solutions

inline std::vector<std::vector<i64>> mono_solutions(const DioEquation& eq, const Coloring& c,
                                                    std::size_t limit = SIZE_MAX) {
    std::vector<std::vector<i64>> out;
    if (limit == 0) return out;
    for_each_solution(eq, c.n(), [&](std::span<const i64> x) {
        int c0 = c(x[0]);
        for (i64 v : x)
            if (c(v) != c0) return true;
        out.emplace_back(x.begin(), x.end());
        return out.size() < limit;
    });
    return out;
}

// ---------------------------------------------------------------------------
// Colorings of [1,N] without monochromatic solutions. With n = 2^f g, g odd:
// valuation(L) colors n by f mod L; valuation_plus_parity(L) pairs that with
// g mod 4 (g is odd, so g mod 2 carries no information).

struct NonPrFamily {
    enum class Kind { valuation, valuation_plus_parity, backtracking } kind = Kind::valuation;
    int L = 2;

    int colors(int r) const {
        switch (kind) {
            case Kind::valuation: return L;
            case Kind::valuation_plus_parity: return 2 * L;
            case Kind::backtracking: return r;
        }
        return r;
    }
    std::string name() const {
        switch (kind) {
            case Kind::valuation: return "valuation(" + std::to_string(L) + ")";
            case Kind::valuation_plus_parity: return "valuation_plus_parity(" + std::to_string(L) + ")";
            case Kind::backtracking: return "backtracking";
        }
        return "?";
    }
};

inline int two_adic(i64 n) { return std::countr_zero(static_cast<u64>(n)); }

inline Coloring valuation_coloring(i64 N, int L, bool with_parity) {
    return Coloring::from_rule(N, with_parity ? 2 * L : L, [&](i64 n) {
        int f = two_adic(n);
        int base = f % L;
        if (!with_parity) return base + 1;
        i64 g = n >> f;
        return 2 * base + (g % 4 == 1 ? 0 : 1) + 1;
    });
}

struct NonPrResult {
    SearchStatus status = SearchStatus::exhausted;
    std::optional<Coloring> coloring;
    std::string family;
    std::vector<std::string> tried;
    u64 nodes = 0;
};

/// One family. found: a verified coloring with at most r colors and no
/// monochromatic solution on [1,N]; exhausted: this family fails.
inline NonPrResult nonpr_coloring_search(const DioEquation& eq, i64 N, int r, const NonPrFamily& fam,
                                         u64 budget = default_budget) {
    if (N < 1 || r < 1) throw InputError("nonpr: need N, r >= 1");
    NonPrResult out;
    out.family = fam.name();
    out.tried.push_back(fam.name());
    if (fam.kind != NonPrFamily::Kind::backtracking && fam.L < 1) throw InputError("nonpr: L must be >= 1");
    if (fam.colors(r) > r) return out;
    std::optional<Coloring> col;
    if (fam.kind == NonPrFamily::Kind::backtracking) {
        if (N > 2'000'000) throw InputError("nonpr: N too large for backtracking");
        Hypergraph h(static_cast<int>(N));
        u64 edges = 0;
        for_each_solution(eq, N, [&](std::span<const i64> x) {
            std::vector<int> g;
            for (i64 v : x) g.push_back(static_cast<int>(v - 1));
            h.add_group(std::move(g));
            return ++edges < 50'000'000;
        });
        Budget b(budget);
        auto res = avoid_search(h, r, b);
        out.nodes = res.nodes;
        if (res.status == SearchStatus::budget) {
            out.status = SearchStatus::budget;
            return out;
        }
        if (res.status == SearchStatus::exhausted) return out;
        col = Coloring(N, r, res.coloring);
    } else {
        col = valuation_coloring(N, fam.L, fam.kind == NonPrFamily::Kind::valuation_plus_parity);
    }
    if (mono_solutions(eq, *col, 1).empty()) {
        out.status = SearchStatus::found;
        out.coloring = std::move(col);
    }
    return out;
}

/// Sweep: valuation(L) for L ≤ r, valuation_plus_parity(L) for 2L ≤ r, then backtracking.
inline NonPrResult nonpr_sweep(const DioEquation& eq, i64 N, int r, u64 budget = default_budget) {
    std::vector<NonPrFamily> fams;
    for (int L = 1; L <= r; ++L) fams.push_back({NonPrFamily::Kind::valuation, L});
    for (int L = 1; 2 * L <= r; ++L) fams.push_back({NonPrFamily::Kind::valuation_plus_parity, L});
    fams.push_back({NonPrFamily::Kind::backtracking, 0});
    NonPrResult out;
    for (const auto& f : fams) {
        auto res = nonpr_coloring_search(eq, N, r, f, budget);
        out.tried.push_back(f.name());
        out.nodes += res.nodes;
        if (res.status == SearchStatus::found) {
            res.tried = out.tried;
            res.nodes = out.nodes;
            return res;
        }
        if (res.status == SearchStatus::budget) out.status = SearchStatus::budget;
    }
    return out;
}

// ---------------------------------------------------------------------------
// a_1/x_1 + ... + a_n/x_n = b over ordered tuples in [1, bound]^n.

struct UnitFractionResult {
    std::vector<std::vector<i64>> solutions;  // lexicographic
    bool stabilized = false;                  // no solution has a coordinate > bound/2
};

inline UnitFractionResult unit_fraction_solutions(const std::vector<i64>& a, Rational b, i64 bound) {
    if (a.empty()) throw InputError("sierpinski: need at least one term");
    for (i64 x : a)
        if (x < 1) throw InputError("sierpinski: numerators must be positive");
    if (b <= 0) throw InputError("sierpinski: b must be positive");
    if (bound < 1) throw InputError("sierpinski: bound must be >= 1");
    int n = static_cast<int>(a.size());
    UnitFractionResult out;
    std::vector<i64> x(static_cast<std::size_t>(n));
    std::vector<i64> suffix(static_cast<std::size_t>(n) + 1, 0);
    for (int i = n - 1; i >= 0; --i) suffix[i] = suffix[i + 1] + a[i];
    std::function<void(int, Rational)> rec = [&](int i, Rational rest) {
        if (i == n - 1) {
            // a/x = rest  ⇒  x = a / rest
            if (rest <= 0) return;
            Rational v = Rational(a[i]) / rest;
            if (v.denominator() == 1 && v.numerator() >= 1 && v.numerator() <= bound) {
                x[i] = v.numerator();
                out.solutions.push_back(x);
            }
            return;
        }
        for (i64 v = 1; v <= bound; ++v) {
            Rational left = rest - Rational(a[i], v);
            if (left <= 0) continue;
            // later terms are at most Σ a_j, and decrease in v
            if (left > Rational(suffix[i + 1])) break;
            x[i] = v;
            rec(i + 1, left);
        }
    };
    rec(0, b);
    out.stabilized = true;
    for (const auto& s : out.solutions)
        for (i64 v : s)
            if (2 * v > bound) out.stabilized = false;
    return out;
}

}  // namespace rw
