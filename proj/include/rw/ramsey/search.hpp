#pragma once
// Arrow relations, the S(m,k,r,n) statements, Ramsey-type numbers,
// Hales-Jewett lines and Gallai affine images.

#include "rw/core.hpp"
#include "rw/equation.hpp"
#include "rw/ramsey/kernel.hpp"

#include <map>

namespace rw {

// ---------------------------------------------------------------------------
// Arrow relation l → (n)^m_k

struct ArrowOutcome {
    SearchStatus status = SearchStatus::exhausted;
    std::optional<PairColoring> coloring;  // k-coloring of [l]^m with no homogeneous n-set
    u64 nodes = 0;
};

/// Brute force: the first homogeneous n-subset of [1,l] under c, if any.
inline std::optional<std::vector<int>> find_homogeneous(const PairColoring& c, int n) {
    for (const auto& s : colex_subsets(c.n(), n)) {
        int col = -1;
        bool homo = true;
        for (const auto& sub : colex_subsets(n, c.m())) {
            std::vector<int> t;
            for (int idx : sub) t.push_back(s[idx - 1]);
            int x = c(t);
            if (col < 0) col = x;
            else if (x != col) {
                homo = false;
                break;
            }
        }
        if (homo) return s;
    }
    return std::nullopt;
}

/// found: l ↛ (n)^m_k, with a witness coloring; exhausted: l → (n)^m_k.
inline ArrowOutcome arrow_check(int l, int n, int m, int k, u64 budget = default_budget) {
    if (!(1 <= m && m <= n && n <= l)) throw InputError("arrow_check: need m <= n <= l");
    if (k < 1) throw InputError("arrow_check: need k >= 1");
    if (binom(l, m) > 5'000'000 || binom(l, n) > 20'000'000) throw InputError("arrow_check: instance too large");
    Hypergraph h(static_cast<int>(binom(l, m)));
    for (const auto& s : colex_subsets(l, n)) {
        std::vector<int> g;
        for (const auto& sub : colex_subsets(n, m)) {
            std::vector<int> t;
            for (int idx : sub) t.push_back(s[idx - 1]);
            g.push_back(static_cast<int>(colex_rank(t)));
        }
        h.add_group(std::move(g));
    }
    Budget b(budget);
    auto res = avoid_search(h, k, b);
    ArrowOutcome out;
    out.status = res.status;
    out.nodes = res.nodes;
    if (res.status == SearchStatus::found) {
        out.coloring = PairColoring(l, m, k, res.coloring);
        if (find_homogeneous(*out.coloring, n)) throw std::logic_error("arrow_check: witness has a homogeneous set");
    }
    return out;
}

// ---------------------------------------------------------------------------
// S(m, k, r, n)
//
// g ≡ h on [0,k]^m: let ℓ(g) be the last position where g equals k, or m-1
// when k does not occur. g ≡ h iff ℓ(g) = ℓ(h) and g, h agree before ℓ.
// This is an equivalence (it is equality of a key) and makes [0,k]^1 a
// single class, so an S(1,k,·,·) certificate is a monochromatic (k+1)-AP.

inline std::pair<int, std::vector<int>> s_class_key(std::span<const int> g, int k) {
    int m = static_cast<int>(g.size());
    int last = m - 1;
    for (int j = m - 1; j >= 0; --j)
        if (g[j] == k) {
            last = j;
            break;
        }
    return {last, std::vector<int>(g.begin(), g.begin() + last)};
}

inline bool s_equivalent(std::span<const int> g, std::span<const int> h, int k) {
    return s_class_key(g, k) == s_class_key(h, k);
}

struct VdwCertificate {
    i64 a = 0;
    std::vector<i64> d;
};

namespace detail {

/// All g ∈ [0,k]^m grouped into ≡-classes (classes in order of first member).
inline std::vector<std::vector<std::vector<int>>> s_classes(int m, int k) {
    std::map<std::pair<int, std::vector<int>>, int> id;
    std::vector<std::vector<std::vector<int>>> classes;
    std::vector<int> g(static_cast<std::size_t>(m), 0);
    while (true) {
        auto key = s_class_key(g, k);
        auto [it, fresh] = id.emplace(key, static_cast<int>(classes.size()));
        if (fresh) classes.emplace_back();
        classes[it->second].push_back(g);
        int j = m - 1;
        while (j >= 0 && g[j] == k) g[j--] = 0;
        if (j < 0) break;
        ++g[j];
    }
    return classes;
}

/// Enumerates (a, d_0..d_{m-1}) with all entries ≥ 1 and a + kΣd ≤ n, in
/// lexicographic order.
template <class Fn>
bool for_each_s_config(int m, int k, i64 n, Fn&& fn) {
    std::vector<i64> d(static_cast<std::size_t>(m), 1);
    std::function<bool(int, i64, i64)> rec = [&](int j, i64 a, i64 sum) -> bool {
        if (j == m) return fn(a, d);
        for (i64 v = 1; a + k * (sum + v + (m - 1 - j)) <= n; ++v) {
            d[j] = v;
            if (!rec(j + 1, a, sum + v)) return false;
        }
        return true;
    };
    for (i64 a = 1; a + static_cast<i64>(k) * m <= n; ++a)
        if (!rec(0, a, 0)) return false;
    return true;
}

inline i64 s_point(i64 a, const std::vector<i64>& d, const std::vector<int>& g) {
    i64 p = a;
    for (std::size_t j = 0; j < d.size(); ++j) p += g[j] * d[j];
    return p;
}

}  // namespace detail

/// Independent check of a certificate against a coloring of [1, n].
inline bool verify_s_certificate(int m, int k, const Coloring& c, const VdwCertificate& cert) {
    if (static_cast<int>(cert.d.size()) != m || cert.a < 1) return false;
    i64 top = cert.a;
    for (i64 x : cert.d) {
        if (x < 1) return false;
        top += k * x;
    }
    if (top > c.n()) return false;
    std::vector<int> g(static_cast<std::size_t>(m), 0), h(static_cast<std::size_t>(m), 0);
    auto next = [&](std::vector<int>& v) {
        int j = m - 1;
        while (j >= 0 && v[j] == k) v[j--] = 0;
        if (j < 0) return false;
        ++v[j];
        return true;
    };
    do {
        std::fill(h.begin(), h.end(), 0);
        do {
            if (s_equivalent(g, h, k) && c(detail::s_point(cert.a, cert.d, g)) != c(detail::s_point(cert.a, cert.d, h)))
                return false;
        } while (next(h));
    } while (next(g));
    return true;
}

/// First (a, d) in lexicographic order satisfying the S-condition for c.
inline std::optional<VdwCertificate> vdw_find_S(int m, int k, const Coloring& c) {
    if (m < 1 || k < 1) throw InputError("S: need m, k >= 1");
    auto classes = detail::s_classes(m, k);
    std::optional<VdwCertificate> hit;
    detail::for_each_s_config(m, k, c.n(), [&](i64 a, const std::vector<i64>& d) {
        for (const auto& cl : classes) {
            int c0 = c(detail::s_point(a, d, cl[0]));
            for (std::size_t i = 1; i < cl.size(); ++i)
                if (c(detail::s_point(a, d, cl[i])) != c0) return true;
        }
        hit = VdwCertificate{a, d};
        return false;
    });
    return hit;
}

struct SDecision {
    SearchStatus status = SearchStatus::exhausted;  // exhausted: S holds
    bool holds = false;
    std::optional<Coloring> counterexample;         // when S fails
    u64 nodes = 0;
};

/// Decides S(m, k, r, n) by searching for an r-coloring of [1, n] with no
/// certificate.
inline SDecision vdw_decide_S(int m, int k, int r, i64 n, u64 budget = default_budget) {
    if (m < 1 || k < 1 || r < 1 || n < 1) throw InputError("S: parameters must be positive");
    auto classes = detail::s_classes(m, k);
    Hypergraph h(static_cast<int>(n));
    detail::for_each_s_config(m, k, n, [&](i64 a, const std::vector<i64>& d) {
        std::vector<std::vector<int>> groups;
        for (const auto& cl : classes) {
            std::vector<int> g;
            for (const auto& t : cl) g.push_back(static_cast<int>(detail::s_point(a, d, t) - 1));
            groups.push_back(std::move(g));
        }
        h.add_edge(groups);
        return true;
    });
    Budget b(budget);
    auto res = avoid_search(h, r, b);
    SDecision out;
    out.status = res.status;
    out.nodes = res.nodes;
    out.holds = res.status == SearchStatus::exhausted;
    if (res.status == SearchStatus::found) {
        out.counterexample = Coloring(n, r, res.coloring);
        if (vdw_find_S(m, k, *out.counterexample)) throw std::logic_error("S: counterexample has a certificate");
    }
    return out;
}

// ---------------------------------------------------------------------------
// Words over an alphabet of size L, encoded big-endian in base L.

inline i64 word_count(int L, int n) {
    i64 w = 1;
    for (int i = 0; i < n; ++i) {
        w *= L;
        if (w > (i64{1} << 26)) throw InputError("words: |L|^n too large");
    }
    return w;
}

inline std::vector<int> word_digits(i64 idx, int L, int n) {
    std::vector<int> d(static_cast<std::size_t>(n));
    for (int i = n - 1; i >= 0; --i) {
        d[i] = static_cast<int>(idx % L);
        idx /= L;
    }
    return d;
}

inline i64 word_index(std::span<const int> d, int L) {
    i64 idx = 0;
    for (int x : d) idx = idx * L + x;
    return idx;
}

/// Symbols ≥ 0 are letters; symbol -(j+1) is the variable x_{j+1}.
struct VariableWord {
    int alphabet = 2;
    int m = 1;
    std::vector<int> symbols;

    /// w[a_1, ..., a_m]
    std::vector<int> substitute(std::span<const int> a) const {
        std::vector<int> out(symbols.size());
        for (std::size_t i = 0; i < symbols.size(); ++i) out[i] = symbols[i] >= 0 ? symbols[i] : a[-symbols[i] - 1];
        return out;
    }

    /// Indices of every substitution instance, in lexicographic order of a.
    std::vector<i64> instances() const {
        std::vector<i64> out;
        std::vector<int> a(static_cast<std::size_t>(m), 0);
        while (true) {
            out.push_back(word_index(substitute(a), alphabet));
            int j = m - 1;
            while (j >= 0 && a[j] == alphabet - 1) a[j--] = 0;
            if (j < 0) break;
            ++a[j];
        }
        return out;
    }

    bool valid() const {
        int next = 0;
        for (int s : symbols) {
            if (s >= alphabet) return false;
            if (s < 0) {
                int v = -s - 1;
                if (v > next || v >= m) return false;
                if (v == next) ++next;
            }
        }
        return next == m;
    }

    std::string to_string() const {
        std::string s;
        for (int x : symbols) s += x >= 0 ? std::to_string(x) : "x" + std::to_string(-x);
        return s;
    }
};

/// Every variable word of length n in m variables, in lexicographic order
/// (letters before variables).
template <class Fn>
bool for_each_variable_word(int L, int n, int m, Fn&& fn) {
    VariableWord w{L, m, std::vector<int>(static_cast<std::size_t>(n), 0)};
    std::function<bool(int, int)> rec = [&](int pos, int used) -> bool {
        if (n - pos < m - used) return true;
        if (pos == n) return fn(static_cast<const VariableWord&>(w));
        for (int a = 0; a < L; ++a) {
            w.symbols[pos] = a;
            if (!rec(pos + 1, used)) return false;
        }
        for (int v = 0; v < std::min(used + 1, m); ++v) {
            w.symbols[pos] = -(v + 1);
            if (!rec(pos + 1, std::max(used, v + 1))) return false;
        }
        return true;
    };
    return rec(0, 0);
}

/// First variable word whose substitution set is monochromatic under c
/// (c colors word index + 1).
inline std::optional<VariableWord> hj_line_search(int L, int n, int m, const Coloring& c) {
    if (L < 1 || n < 1 || m < 1 || m > n) throw InputError("hj: need L >= 1 and 1 <= m <= n");
    if (c.n() != word_count(L, n)) throw InputError("hj: coloring must cover all |L|^n words");
    std::optional<VariableWord> hit;
    for_each_variable_word(L, n, m, [&](const VariableWord& w) {
        auto inst = w.instances();
        int c0 = c(inst[0] + 1);
        for (i64 x : inst)
            if (c(x + 1) != c0) return true;
        hit = w;
        return false;
    });
    return hit;
}

// ---------------------------------------------------------------------------
// Ramsey-type numbers

struct Family {
    enum class Kind { vdw, schur, folkman, hales_jewett, rado } kind = Kind::schur;
    int k = 3;         // vdw progression length
    int m = 2;         // folkman set size
    int alphabet = 2;  // hales_jewett
    int r = 2;
    DioEquation eq = DioEquation::linear({1, 1, -1});

    static Family vdw(int k, int r) { Family f; f.kind = Kind::vdw; f.k = k; f.r = r; return f; }
    static Family schur(int r) { Family f; f.kind = Kind::schur; f.r = r; return f; }
    static Family folkman(int m, int r) { Family f; f.kind = Kind::folkman; f.m = m; f.r = r; return f; }
    static Family hales_jewett(int L, int r) { Family f; f.kind = Kind::hales_jewett; f.alphabet = L; f.r = r; return f; }
    static Family rado(DioEquation e, int r) { Family f; f.kind = Kind::rado; f.eq = std::move(e); f.r = r; return f; }

    std::string name() const {
        switch (kind) {
            case Kind::vdw: return "vdw(" + std::to_string(k) + "," + std::to_string(r) + ")";
            case Kind::schur: return "schur(" + std::to_string(r) + ")";
            case Kind::folkman: return "folkman(" + std::to_string(m) + "," + std::to_string(r) + ")";
            case Kind::hales_jewett: return "hales_jewett(" + std::to_string(alphabet) + "," + std::to_string(r) + ")";
            case Kind::rado: return "rado(" + eq.to_string() + "," + std::to_string(r) + ")";
        }
        return "?";
    }

    /// Number of cells of the ground set of size parameter n.
    i64 cells(i64 n) const { return kind == Kind::hales_jewett ? word_count(alphabet, static_cast<int>(n)) : n; }
};

/// Target configurations inside the ground set of size parameter n
/// (values 1..n map to cells 0..n-1; words map to their index).
inline Hypergraph family_hypergraph(const Family& f, i64 n) {
    Hypergraph h(static_cast<int>(f.cells(n)));
    switch (f.kind) {
        case Family::Kind::schur:
            for (i64 x = 1; 2 * x <= n; ++x)
                for (i64 y = x; x + y <= n; ++y) h.add_group({int(x - 1), int(y - 1), int(x + y - 1)});
            break;
        case Family::Kind::vdw:
            for (i64 d = 1; (f.k - 1) * d + 1 <= n; ++d)
                for (i64 a = 1; a + (f.k - 1) * d <= n; ++a) {
                    std::vector<int> g;
                    for (int i = 0; i < f.k; ++i) g.push_back(static_cast<int>(a + i * d - 1));
                    h.add_group(std::move(g));
                }
            break;
        case Family::Kind::folkman: {
            std::vector<i64> x;
            std::function<void(i64, i64)> rec = [&](i64 from, i64 sum) {
                if (static_cast<int>(x.size()) == f.m) {
                    std::vector<int> g;
                    for (u64 mask = 1; mask < (u64{1} << f.m); ++mask) {
                        i64 s = 0;
                        for (int i = 0; i < f.m; ++i)
                            if (mask >> i & 1) s += x[i];
                        g.push_back(static_cast<int>(s - 1));
                    }
                    h.add_group(std::move(g));
                    return;
                }
                int left = f.m - static_cast<int>(x.size());
                for (i64 v = from; sum + v * left + left * (left - 1) / 2 <= n; ++v) {
                    x.push_back(v);
                    rec(v + 1, sum + v);
                    x.pop_back();
                }
            };
            rec(1, 0);
            break;
        }
        case Family::Kind::hales_jewett:
            for_each_variable_word(f.alphabet, static_cast<int>(n), 1, [&](const VariableWord& w) {
                std::vector<int> g;
                for (i64 x : w.instances()) g.push_back(static_cast<int>(x));
                h.add_group(std::move(g));
                return true;
            });
            break;
        case Family::Kind::rado:
            for_each_solution(f.eq, n, [&](std::span<const i64> x) {
                std::vector<int> g;
                for (i64 v : x) g.push_back(static_cast<int>(v - 1));
                h.add_group(std::move(g));
                return true;
            });
            break;
    }
    return h;
}

/// Independent check: does coloring `col` (cells, colors 1..r) contain a
/// configuration of the family at size n? Built from first principles.
inline bool family_has_configuration(const Family& f, i64 n, const std::vector<int>& col) {
    auto c = [&](i64 v) { return col[v - 1]; };
    switch (f.kind) {
        case Family::Kind::schur:
            for (i64 x = 1; x <= n; ++x)
                for (i64 y = x; x + y <= n; ++y)
                    if (c(x) == c(y) && c(y) == c(x + y)) return true;
            return false;
        case Family::Kind::vdw:
            for (i64 a = 1; a <= n; ++a)
                for (i64 d = 1; a + (f.k - 1) * d <= n; ++d) {
                    bool mono = true;
                    for (int i = 1; i < f.k && mono; ++i) mono = c(a + i * d) == c(a);
                    if (mono) return true;
                }
            return false;
        case Family::Kind::hales_jewett: {
            bool found = false;
            Coloring cc(static_cast<i64>(col.size()), f.r, col);
            found = hj_line_search(f.alphabet, static_cast<int>(n), 1, cc).has_value();
            return found;
        }
        default: {
            Hypergraph h = family_hypergraph(f, n);
            return h.first_present(col) >= 0;
        }
    }
}

struct NumberResult {
    SearchStatus status = SearchStatus::found;  // found: value determined
    i64 value = 0;                              // least n (when found)
    i64 lower = 1;                              // every n < lower admits an avoiding coloring
    std::optional<std::vector<int>> extremal;   // avoiding coloring at value - 1 (or lower - 1)
    u64 nodes = 0;
};

/// Least n such that every r-coloring of the size-n ground set contains a
/// target configuration, with an avoiding coloring at n - 1.
inline NumberResult number_search(const Family& f, u64 budget = default_budget, i64 max_n = 200) {
    Budget b(budget);
    NumberResult out;
    for (i64 n = 1; n <= max_n; ++n) {
        Hypergraph h = family_hypergraph(f, n);
        auto res = avoid_search(h, f.r, b);
        out.nodes = b.used();
        if (res.status == SearchStatus::budget) {
            out.status = SearchStatus::budget;
            return out;
        }
        if (res.status == SearchStatus::exhausted) {
            out.value = n;
            out.status = SearchStatus::found;
            return out;
        }
        if (family_has_configuration(f, n, res.coloring)) throw std::logic_error("number_search: extremal coloring fails check");
        out.extremal = res.coloring;
        out.lower = n + 1;
    }
    out.status = SearchStatus::budget;
    return out;
}

// ---------------------------------------------------------------------------
// Gallai: a + s·F monochromatic in a coloring of the box [-n, n]^d.

using Point = std::vector<i64>;

struct BoxColoring {
    int d = 1;
    i64 n = 1;
    Coloring c;  // index Σ (p_i + n)(2n+1)^{d-1-i} + 1

    static i64 size(int d, i64 n) {
        i64 s = 1;
        for (int i = 0; i < d; ++i) s *= 2 * n + 1;
        return s;
    }
    bool inside(const Point& p) const {
        for (i64 x : p)
            if (x < -n || x > n) return false;
        return true;
    }
    i64 index(const Point& p) const {
        i64 idx = 0;
        for (i64 x : p) idx = idx * (2 * n + 1) + (x + n);
        return idx;
    }
    int operator()(const Point& p) const { return c(index(p) + 1); }
};

struct GallaiHit {
    Point a;
    i64 scale = 1;
    std::string via;
};

inline bool verify_gallai(const std::vector<Point>& F, const BoxColoring& bc, const GallaiHit& g) {
    int c0 = -1;
    for (const auto& f : F) {
        Point p(g.a);
        for (std::size_t i = 0; i < p.size(); ++i) p[i] += g.scale * f[i];
        if (!bc.inside(p)) return false;
        int x = bc(p);
        if (c0 < 0) c0 = x;
        else if (x != c0) return false;
    }
    return g.scale >= 1;
}

/// Direct search (scale ascending, then base points by max-norm and
/// lexicographic order) or the Ψ reduction: words over F of length
/// N = ⌊n / max|f|⌋ map to Σ f_{w_i}, and a monochromatic combinatorial line
/// with variable set S maps to (Σ fixed letters) + |S|·F.
inline std::optional<GallaiHit> gallai_find(std::vector<Point> F, const BoxColoring& bc, bool via_psi = false) {
    if (F.empty()) throw InputError("gallai: F must be nonempty");
    for (const auto& f : F)
        if (static_cast<int>(f.size()) != bc.d) throw InputError("gallai: dimension mismatch");
    std::sort(F.begin(), F.end());
    F.erase(std::unique(F.begin(), F.end()), F.end());
    if (via_psi) {
        i64 norm = 0;
        for (const auto& f : F)
            for (i64 x : f) norm = std::max(norm, std::abs(x));
        int L = static_cast<int>(F.size());
        i64 N = norm == 0 ? 1 : bc.n / norm;
        while (N >= 1) {
            try {
                word_count(L, static_cast<int>(N));
                break;
            } catch (const InputError&) {
                --N;
            }
        }
        if (N < 1) return std::nullopt;
        i64 words = word_count(L, static_cast<int>(N));
        auto psi = [&](const std::vector<int>& w) {
            Point p(static_cast<std::size_t>(bc.d), 0);
            for (int s : w)
                for (int i = 0; i < bc.d; ++i) p[i] += F[s][i];
            return p;
        };
        std::vector<int> cw;
        for (i64 idx = 0; idx < words; ++idx) cw.push_back(bc(psi(word_digits(idx, L, static_cast<int>(N)))));
        auto line = hj_line_search(L, static_cast<int>(N), 1, Coloring(words, bc.c.r(), cw));
        if (!line) return std::nullopt;
        GallaiHit g;
        g.a.assign(static_cast<std::size_t>(bc.d), 0);
        g.scale = 0;
        for (int s : line->symbols) {
            if (s < 0) ++g.scale;
            else
                for (int i = 0; i < bc.d; ++i) g.a[i] += F[s][i];
        }
        g.via = "psi";
        if (!verify_gallai(F, bc, g)) throw std::logic_error("gallai: psi image not monochromatic");
        return g;
    }
    std::vector<Point> base;
    i64 total = BoxColoring::size(bc.d, bc.n);
    for (i64 idx = 0; idx < total; ++idx) {
        Point p(static_cast<std::size_t>(bc.d));
        i64 t = idx;
        for (int i = bc.d - 1; i >= 0; --i) {
            p[i] = t % (2 * bc.n + 1) - bc.n;
            t /= 2 * bc.n + 1;
        }
        base.push_back(p);
    }
    auto norm = [](const Point& p) {
        i64 m = 0;
        for (i64 x : p) m = std::max(m, std::abs(x));
        return m;
    };
    std::stable_sort(base.begin(), base.end(), [&](const Point& a, const Point& b) { return norm(a) < norm(b); });
    for (i64 s = 1; s <= 2 * bc.n; ++s)
        for (const auto& a : base) {
            GallaiHit g{a, s, "direct"};
            if (verify_gallai(F, bc, g)) return g;
        }
    return std::nullopt;
}

}  // namespace rw
