#pragma once
// Finite graphs: ordered-count densities, the Roth tripartite coding, triangle
// removal, pseudorandom pairs and an energy-increment regular partition.

#include "rw/core.hpp"

#include <bit>
#include <fstream>
#include <map>
#include <queue>
#include <random>
#include <set>
#include <sstream>

namespace rw {

/// Undirected loopless graph on [1,n]; adjacency rows are bitsets.
class SimpleGraph {
public:
    SimpleGraph() = default;
    explicit SimpleGraph(int n) : n_(n), words_((n + 63) / 64), adj_(static_cast<std::size_t>(n), std::vector<u64>(words_, 0)) {
        if (n < 0) throw InputError("graph: negative vertex count");
    }

    int n() const { return n_; }
    std::size_t words() const { return words_; }

    void add_edge(int u, int v) {
        check(u);
        check(v);
        if (u == v) throw InputError("graph: loop at " + std::to_string(u));
        if (has_edge(u, v)) return;
        set(u, v, true);
        ++m_;
    }
    void remove_edge(int u, int v) {
        if (!has_edge(u, v)) return;
        set(u, v, false);
        --m_;
    }
    bool has_edge(int u, int v) const {
        return u != v && (adj_[u - 1][(v - 1) >> 6] >> ((v - 1) & 63) & 1);
    }
    /// row of u, bit v-1 set for each neighbour v
    const std::vector<u64>& row(int u) const { return adj_[u - 1]; }
    i64 edge_count() const { return m_; }
    int degree(int u) const {
        int d = 0;
        for (u64 w : adj_[u - 1]) d += std::popcount(w);
        return d;
    }
    std::vector<int> neighbours(int u) const {
        std::vector<int> out;
        for (std::size_t i = 0; i < words_; ++i)
            for (u64 w = adj_[u - 1][i]; w; w &= w - 1) out.push_back(static_cast<int>(i * 64 + std::countr_zero(w)) + 1);
        return out;
    }
    /// edges (u,v) with u < v, lexicographic
    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> out;
        for (int u = 1; u <= n_; ++u)
            for (int v : neighbours(u))
                if (u < v) out.emplace_back(u, v);
        return out;
    }
    friend bool operator==(const SimpleGraph& a, const SimpleGraph& b) { return a.n_ == b.n_ && a.adj_ == b.adj_; }

private:
    void check(int u) const {
        if (u < 1 || u > n_) throw InputError("graph: vertex " + std::to_string(u) + " outside [1," + std::to_string(n_) + "]");
    }
    void set(int u, int v, bool on) {
        auto flip = [&](int a, int b) {
            u64 bit = u64{1} << ((b - 1) & 63);
            auto& w = adj_[a - 1][(b - 1) >> 6];
            w = on ? (w | bit) : (w & ~bit);
        };
        flip(u, v);
        flip(v, u);
    }

    int n_ = 0;
    std::size_t words_ = 0;
    i64 m_ = 0;
    std::vector<std::vector<u64>> adj_;
};

/// Vertex subset as a bitmask over [1,n].
inline std::vector<u64> vertex_mask(int n, const std::vector<int>& vs) {
    std::vector<u64> m((n + 63) / 64, 0);
    for (int v : vs) m[(v - 1) >> 6] |= u64{1} << ((v - 1) & 63);
    return m;
}

inline i64 popcount_and(const std::vector<u64>& a, const std::vector<u64>& b) {
    i64 c = 0;
    for (std::size_t i = 0; i < a.size(); ++i) c += std::popcount(a[i] & b[i]);
    return c;
}

// ---------------------------------------------------------------------------
// I/O: first line n, then "u v" per edge

inline SimpleGraph read_graph(std::istream& in) {
    std::string line;
    int n = -1;
    std::vector<std::pair<int, int>> es;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ss(line);
        long long a, b;
        if (!(ss >> a)) continue;
        std::string rest;
        if (n < 0) {
            if (ss >> rest) throw InputError("graph line " + std::to_string(lineno) + ": expected the vertex count alone");
            if (a < 0 || a > 1'000'000) throw InputError("graph: bad vertex count");
            n = static_cast<int>(a);
            continue;
        }
        if (!(ss >> b) || (ss >> rest)) throw InputError("graph line " + std::to_string(lineno) + ": expected 'u v'");
        es.emplace_back(static_cast<int>(a), static_cast<int>(b));
    }
    if (n < 0) throw InputError("graph: missing vertex count");
    SimpleGraph g(n);
    for (auto [u, v] : es) g.add_edge(u, v);
    return g;
}

inline SimpleGraph read_graph_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw InputError("cannot open " + path);
    return read_graph(f);
}

inline void write_graph(std::ostream& out, const SimpleGraph& g) {
    out << g.n() << '\n';
    for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

// ---------------------------------------------------------------------------
// Densities and triangles

inline i64 triangle_count(const SimpleGraph& g) {
    auto parts = parallel_chunks(1, g.n() + 1, [&](i64 u0, i64 u1) {
        i64 c = 0;
        for (i64 u = u0; u < u1; ++u)
            for (int v : g.neighbours(static_cast<int>(u)))
                if (v > u) {
                    // w > v only
                    const auto& ru = g.row(static_cast<int>(u));
                    const auto& rv = g.row(v);
                    std::size_t first = static_cast<std::size_t>(v) >> 6;  // bit index v = vertex v+1
                    for (std::size_t i = first; i < ru.size(); ++i) {
                        u64 w = ru[i] & rv[i];
                        if (i == first) w &= ~u64{0} << (v & 63);
                        c += std::popcount(w);
                    }
                }
        return c;
    });
    i64 t = 0;
    for (i64 c : parts) t += c;
    return t;
}

/// triangles u < v < w, lexicographic
inline std::vector<std::array<int, 3>> list_triangles(const SimpleGraph& g, std::size_t limit = SIZE_MAX) {
    std::vector<std::array<int, 3>> out;
    for (int u = 1; u <= g.n(); ++u)
        for (int v : g.neighbours(u))
            if (v > u)
                for (int w : g.neighbours(v))
                    if (w > v && g.has_edge(u, w)) {
                        out.push_back({u, v, w});
                        if (out.size() >= limit) return out;
                    }
    return out;
}

struct GraphStats {
    Rational e{0}, t{0};
    i64 edges = 0, triangles = 0;
};

/// e = |E|/|V×V| and t over V×V×V with ordered counts (each edge twice,
/// each triangle six times).
inline GraphStats graph_stats(const SimpleGraph& g) {
    if (g.n() < 1) throw InputError("graph: need n >= 1");
    GraphStats s;
    i64 n = g.n();
    s.edges = g.edge_count();
    s.triangles = triangle_count(g);
    s.e = Rational(2 * s.edges, n * n);
    s.t = Rational(6 * s.triangles, n * n * n);
    return s;
}

// ---------------------------------------------------------------------------
// Roth graph

/// V1, V2, V3 are copies of [1,3n] labelled 1..3n, 3n+1..6n, 6n+1..9n.
/// V1–V2 and V2–V3: w - v ∈ A; V1–V3: w - v ∈ 2·A.
struct RothGraph {
    i64 n = 0;
    SimpleGraph g;
    std::vector<std::array<int, 3>> trivial;  // (k, k+a, k+2a) as vertex labels
    i64 triangles = 0, nontrivial = 0;

    int vertex(int part, i64 x) const { return static_cast<int>((part - 1) * 3 * n + x); }
    /// (part, position in [1,3n])
    std::pair<int, i64> locate(int v) const { return {static_cast<int>((v - 1) / (3 * n)) + 1, (v - 1) % (3 * n) + 1}; }
};

inline RothGraph roth_graph(const IntSet& a, i64 n) {
    if (n < 1) throw InputError("roth: n must be >= 1");
    if (!a.members().empty() && (a.min() < 1 || a.max() > n)) throw InputError("roth: A must lie in [1,n]");
    if (9 * n > 200000) throw InputError("roth: n too large");
    RothGraph r;
    r.n = n;
    r.g = SimpleGraph(static_cast<int>(9 * n));
    i64 m = 3 * n;
    for (i64 v = 1; v <= m; ++v)
        for (i64 x : a.members()) {
            if (v + x <= m) {
                r.g.add_edge(r.vertex(1, v), r.vertex(2, v + x));
                r.g.add_edge(r.vertex(2, v), r.vertex(3, v + x));
            }
            if (v + 2 * x <= m) r.g.add_edge(r.vertex(1, v), r.vertex(3, v + 2 * x));
        }
    for (i64 x : a.members())
        for (i64 k = 1; k + 2 * x <= m; ++k) r.trivial.push_back({r.vertex(1, k), r.vertex(2, k + x), r.vertex(3, k + 2 * x)});
    r.triangles = triangle_count(r.g);
    r.nontrivial = r.triangles - static_cast<i64>(r.trivial.size());
    return r;
}

/// (a, c, b) read off a Roth triangle: a = v2-v1, b = v3-v2, c = (v3-v1)/2.
inline std::array<i64, 3> roth_progression(const RothGraph& r, const std::array<int, 3>& tri) {
    std::array<i64, 3> pos{};
    for (int v : tri) {
        auto [part, x] = r.locate(v);
        pos[part - 1] = x;
    }
    return {pos[1] - pos[0], (pos[2] - pos[0]) / 2, pos[2] - pos[1]};
}

/// Nontrivial triangles of a Roth graph, up to limit.
inline std::vector<std::array<int, 3>> roth_nontrivial(const RothGraph& r, std::size_t limit = 16) {
    std::vector<std::array<int, 3>> out;
    for (const auto& t : list_triangles(r.g)) {
        auto [a, c, b] = roth_progression(r, t);
        if (a != b) {
            out.push_back(t);
            if (out.size() >= limit) break;
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Triangle removal

enum class RemovalStrategy { greedy_cover, exhaustive };

inline std::string to_string(RemovalStrategy s) { return s == RemovalStrategy::greedy_cover ? "greedy_cover" : "exhaustive"; }

struct RemovalResult {
    std::vector<std::pair<int, int>> removed;  // u < v, sorted
    bool triangle_free = false;
    Rational removed_density{0};  // e(G \ G') with the ordered convention
    RemovalStrategy strategy = RemovalStrategy::greedy_cover;
};

namespace detail {

inline std::vector<std::pair<int, int>> greedy_triangle_cover(SimpleGraph g) {
    // per-edge triangle counts, lazy max-heap (count desc, then (u,v) asc)
    std::map<std::pair<int, int>, i64> cnt;
    for (auto [u, v] : g.edges()) {
        i64 c = popcount_and(g.row(u), g.row(v));
        if (c) cnt[{u, v}] = c;
    }
    using Item = std::tuple<i64, int, int>;
    auto cmp = [](const Item& x, const Item& y) {
        if (std::get<0>(x) != std::get<0>(y)) return std::get<0>(x) < std::get<0>(y);
        return std::make_pair(std::get<1>(x), std::get<2>(x)) > std::make_pair(std::get<1>(y), std::get<2>(y));
    };
    std::priority_queue<Item, std::vector<Item>, decltype(cmp)> pq(cmp);
    for (auto& [e, c] : cnt) pq.emplace(c, e.first, e.second);
    std::vector<std::pair<int, int>> removed;
    while (!pq.empty()) {
        auto [c, u, v] = pq.top();
        pq.pop();
        auto it = cnt.find({u, v});
        if (it == cnt.end() || it->second != c) continue;
        cnt.erase(it);
        std::vector<int> common;
        const auto& ru = g.row(u);
        const auto& rv = g.row(v);
        for (std::size_t i = 0; i < ru.size(); ++i)
            for (u64 w = ru[i] & rv[i]; w; w &= w - 1) common.push_back(static_cast<int>(i * 64 + std::countr_zero(w)) + 1);
        g.remove_edge(u, v);
        removed.emplace_back(u, v);
        for (int w : common)
            for (auto e : {std::minmax(u, w), std::minmax(v, w)}) {
                auto jt = cnt.find({e.first, e.second});
                if (jt == cnt.end()) continue;
                if (--jt->second == 0) cnt.erase(jt);
                else pq.emplace(jt->second, e.first, e.second);
            }
    }
    std::sort(removed.begin(), removed.end());
    return removed;
}

inline std::vector<std::pair<int, int>> exact_triangle_cover(const SimpleGraph& g) {
    auto tris = list_triangles(g);
    std::vector<std::pair<int, int>> best = greedy_triangle_cover(g);
    std::vector<std::pair<int, int>> cur;
    auto hit = [&](const std::array<int, 3>& t) {
        for (auto e : cur) {
            bool a = (e.first == t[0] || e.first == t[1] || e.first == t[2]);
            bool b = (e.second == t[0] || e.second == t[1] || e.second == t[2]);
            if (a && b) return true;
        }
        return false;
    };
    // iterative deepening below the greedy size
    std::function<bool(std::size_t)> dfs = [&](std::size_t depth) -> bool {
        const std::array<int, 3>* open = nullptr;
        for (const auto& t : tris)
            if (!hit(t)) {
                open = &t;
                break;
            }
        if (!open) return true;
        if (depth == 0) return false;
        auto t = *open;
        for (auto e : {std::make_pair(t[0], t[1]), std::make_pair(t[0], t[2]), std::make_pair(t[1], t[2])}) {
            cur.push_back(e);
            if (dfs(depth - 1)) return true;
            cur.pop_back();
        }
        return false;
    };
    for (std::size_t k = 0; k < best.size(); ++k) {
        cur.clear();
        if (dfs(k)) {
            std::sort(cur.begin(), cur.end());
            return cur;
        }
    }
    return best;
}

}  // namespace detail

inline RemovalResult triangle_removal(const SimpleGraph& g, RemovalStrategy s = RemovalStrategy::greedy_cover) {
    if (s == RemovalStrategy::exhaustive && g.n() > 12) throw InputError("removal: exhaustive strategy capped at n <= 12");
    RemovalResult r;
    r.strategy = s;
    r.removed = s == RemovalStrategy::exhaustive ? detail::exact_triangle_cover(g) : detail::greedy_triangle_cover(g);
    SimpleGraph h = g;
    for (auto [u, v] : r.removed) h.remove_edge(u, v);
    r.triangle_free = triangle_count(h) == 0;
    i64 n = std::max(1, g.n());
    r.removed_density = Rational(2 * static_cast<i64>(r.removed.size()), n * n);
    return r;
}

// ---------------------------------------------------------------------------
// Pseudorandom pairs

struct WitnessPolicy {
    enum class Kind { exhaustive, degree_heuristic } kind = Kind::degree_heuristic;
    int samples = 64;
    u64 seed = 1;

    static WitnessPolicy exhaustive() { return {Kind::exhaustive, 0, 0}; }
    static WitnessPolicy heuristic(int samples = 64, u64 seed = 1) { return {Kind::degree_heuristic, samples, seed}; }
    std::string name() const {
        return kind == Kind::exhaustive ? "exhaustive" : "degree_heuristic(" + std::to_string(samples) + ")";
    }
};

struct PseudoVerdict {
    bool pass = true;
    bool heuristic = false;  // a pass without exhaustive search
    bool certified = false;  // exact decision (exhaustive or homogeneous pair)
    Rational density{0};     // d(X,Y)
    std::vector<int> wa, wb;
    Rational witness_density{0};
    Rational deviation{0};  // |d(A,B) - d(X,Y)| of the reported pair
    u64 checked = 0;
};

namespace detail {

/// ordered edge count between vertex lists
inline i64 pair_edges(const SimpleGraph& g, const std::vector<int>& a, const std::vector<u64>& bmask) {
    i64 c = 0;
    for (int u : a) c += popcount_and(g.row(u), bmask);
    return c;
}

/// ordered pairs of distinct vertices in A × B
inline i64 pair_slots(i64 sa, i64 sb, i64 overlap) { return sa * sb - overlap; }

struct Candidate {
    bool valid = false;
    i64 e = 0, den = 1, sa = 0, sb = 0;
    std::vector<int> a, b;
};

// |e/den - E/D| compared exactly; true if x is worse than y
inline bool worse(const Candidate& x, const Candidate& y, i64 E, i64 D) {
    if (!y.valid) return x.valid;
    if (!x.valid) return false;
    auto num = [&](const Candidate& c) {
        __int128 v = static_cast<__int128>(c.e) * D - static_cast<__int128>(E) * c.den;
        return v < 0 ? -v : v;
    };
    __int128 lhs = num(x) * y.den, rhs = num(y) * x.den;
    if (lhs != rhs) return lhs > rhs;
    if (x.sa != y.sa) return x.sa > y.sa;
    return x.sb > y.sb;
}

/// For fixed A, |B| = s and |A∩B| = k the extreme B take the k largest (or
/// smallest) degrees into A inside A∩Y and the s-k extreme ones outside A.
/// Returns the worst admissible B.
inline Candidate best_b(const SimpleGraph& g, const std::vector<int>& a, const std::vector<int>& Y, i64 bmin, i64 E, i64 D,
                        u64& checked) {
    auto amask = vertex_mask(g.n(), a);
    struct Part {
        std::vector<std::pair<i64, int>> desc, asc;
        std::vector<i64> top{0}, bot{0};
    } in, out;
    for (int y : Y) {
        bool inside = amask[(y - 1) >> 6] >> ((y - 1) & 63) & 1;
        (inside ? in : out).desc.emplace_back(popcount_and(g.row(y), amask), y);
    }
    for (auto* p : {&in, &out}) {
        p->asc = p->desc;
        std::stable_sort(p->desc.begin(), p->desc.end(), [](auto& x, auto& y) { return x.first > y.first; });
        std::stable_sort(p->asc.begin(), p->asc.end(), [](auto& x, auto& y) { return x.first < y.first; });
        for (auto& d : p->desc) p->top.push_back(p->top.back() + d.first);
        for (auto& d : p->asc) p->bot.push_back(p->bot.back() + d.first);
    }
    i64 ni = static_cast<i64>(in.desc.size()), no = static_cast<i64>(out.desc.size());
    i64 sa = static_cast<i64>(a.size());
    Candidate best;
    i64 bs = 0, bk = 0;
    bool btop = true;
    for (i64 s = std::max<i64>(bmin, 1); s <= ni + no; ++s)
        for (i64 k = std::max<i64>(0, s - no); k <= std::min(s, ni); ++k) {
            i64 den = pair_slots(sa, s, k);
            if (den == 0) continue;
            for (int side = 0; side < 2; ++side) {
                Candidate c;
                c.valid = true;
                c.e = side == 0 ? in.top[k] + out.top[s - k] : in.bot[k] + out.bot[s - k];
                c.den = den;
                c.sa = sa;
                c.sb = s;
                ++checked;
                if (worse(c, best, E, D)) {
                    best = std::move(c);
                    bs = s;
                    bk = k;
                    btop = side == 0;
                }
            }
        }
    if (best.valid) {
        best.a = a;
        for (i64 i = 0; i < bk; ++i) best.b.push_back((btop ? in.desc : in.asc)[i].second);
        for (i64 i = 0; i < bs - bk; ++i) best.b.push_back((btop ? out.desc : out.asc)[i].second);
        std::sort(best.b.begin(), best.b.end());
    }
    return best;
}

inline i64 ceil_mul(Rational eps, i64 size) {
    // ⌈ε·size⌉, at least 1
    __int128 num = static_cast<__int128>(eps.numerator()) * size;
    i64 q = static_cast<i64>((num + eps.denominator() - 1) / eps.denominator());
    return std::max<i64>(1, q);
}

/// every distinct cross pair is an edge, or none is (classes equal or disjoint)
inline bool homogeneous_pair(const SimpleGraph& g, const std::vector<int>& X, const std::vector<int>& Y, i64 E, i64 D) {
    if (X != Y && popcount_and(vertex_mask(g.n(), X), vertex_mask(g.n(), Y))) return false;
    return E == 0 || E == D;
}

}  // namespace detail

/// (X,Y) is ε-pseudorandom if |d(A,B) - d(X,Y)| < ε for all A ⊆ X, B ⊆ Y
/// with |A| ≥ ε|X|, |B| ≥ ε|Y|. d counts ordered pairs of distinct vertices,
/// so d(A,B) = e(A,B)/(|A||B| - |A∩B|); for disjoint sets this is the plain
/// ordered density. The reported witness maximizes the deviation (ties:
/// larger |A|, larger |B|, then search order).
inline PseudoVerdict pseudorandom_check(const SimpleGraph& g, std::vector<int> X, std::vector<int> Y, Rational eps,
                                        const WitnessPolicy& policy = WitnessPolicy::heuristic()) {
    if (X.empty() || Y.empty()) throw InputError("pseudorandom: X and Y must be nonempty");
    if (!(eps > 0 && eps < 1)) throw InputError("pseudorandom: need 0 < epsilon < 1");
    for (auto* s : {&X, &Y}) {
        std::sort(s->begin(), s->end());
        s->erase(std::unique(s->begin(), s->end()), s->end());
        if (s->front() < 1 || s->back() > g.n()) throw InputError("pseudorandom: vertex outside the graph");
    }
    bool exhaustive = policy.kind == WitnessPolicy::Kind::exhaustive;
    if (exhaustive && (X.size() > 16 || Y.size() > 16)) throw InputError("pseudorandom: exhaustive mode capped at |X|,|Y| <= 16");
    i64 xs = static_cast<i64>(X.size()), ys = static_cast<i64>(Y.size());
    auto ymask = vertex_mask(g.n(), Y);
    i64 D = detail::pair_slots(xs, ys, popcount_and(vertex_mask(g.n(), X), ymask));
    if (D == 0) throw InputError("pseudorandom: X = Y is a single vertex");
    i64 E = detail::pair_edges(g, X, ymask);
    i64 amin = detail::ceil_mul(eps, xs), bmin = detail::ceil_mul(eps, ys);
    PseudoVerdict v;
    v.density = Rational(E, D);
    if (!exhaustive && detail::homogeneous_pair(g, X, Y, E, D)) {
        // every admissible sub-pair has the same density
        v.certified = true;
        v.checked = 1;
        return v;
    }
    detail::Candidate worst;
    u64 checked = 0;
    if (exhaustive) {
        auto parts = parallel_chunks(1, i64{1} << xs, [&](i64 m0, i64 m1) {
            detail::Candidate w;
            u64 ch = 0;
            for (i64 mask = m0; mask < m1; ++mask) {
                if (std::popcount(static_cast<u64>(mask)) < amin) continue;
                std::vector<int> a;
                for (i64 i = 0; i < xs; ++i)
                    if (mask >> i & 1) a.push_back(X[i]);
                auto c = detail::best_b(g, a, Y, bmin, E, D, ch);
                if (detail::worse(c, w, E, D)) w = std::move(c);
            }
            return std::make_pair(std::move(w), ch);
        });
        for (auto& [w, ch] : parts) {
            checked += ch;
            if (detail::worse(w, worst, E, D)) worst = std::move(w);
        }
        v.certified = true;
    } else {
        // start sets: degree-sorted prefixes and random subsets, each improved
        // by alternating the exact best-B step between the two sides
        std::vector<std::pair<i64, int>> deg;
        for (int x : X) deg.emplace_back(popcount_and(g.row(x), ymask), x);
        auto desc = deg, asc = deg;
        std::stable_sort(desc.begin(), desc.end(), [](auto& a, auto& b) { return a.first > b.first; });
        std::stable_sort(asc.begin(), asc.end(), [](auto& a, auto& b) { return a.first < b.first; });
        std::vector<std::vector<int>> starts;
        for (i64 s : {amin, std::max(amin, xs / 2), xs}) {
            std::vector<int> t, l;
            for (i64 i = 0; i < s; ++i) t.push_back(desc[i].second), l.push_back(asc[i].second);
            starts.push_back(t);
            starts.push_back(l);
        }
        std::mt19937_64 rng(policy.seed);
        for (int s = 0; s < policy.samples; ++s) {
            i64 size = amin + static_cast<i64>(rng() % static_cast<u64>(xs - amin + 1));
            std::vector<int> pool(X);
            for (i64 i = 0; i < size; ++i) std::swap(pool[i], pool[i + static_cast<i64>(rng() % static_cast<u64>(xs - i))]);
            pool.resize(size);
            starts.push_back(pool);
        }
        for (auto a : starts) {
            std::sort(a.begin(), a.end());
            for (int round = 0; round < 3; ++round) {
                auto c = detail::best_b(g, a, Y, bmin, E, D, checked);
                if (!c.valid) break;
                if (detail::worse(c, worst, E, D)) worst = c;
                // e(A,B) = e(B,A) and the slot count is symmetric
                auto back = detail::best_b(g, c.b, X, amin, E, D, checked);
                if (!back.valid || back.b == a) break;
                detail::Candidate swapped = back;
                std::swap(swapped.a, swapped.b);
                std::swap(swapped.sa, swapped.sb);
                if (detail::worse(swapped, worst, E, D)) worst = swapped;
                a = back.b;
            }
        }
        v.heuristic = true;
    }
    v.checked += checked;
    if (worst.valid) {
        v.witness_density = Rational(worst.e, worst.den);
        Rational dev = v.witness_density - v.density;
        v.deviation = dev < 0 ? -dev : dev;
        v.pass = v.deviation < eps;
        if (!v.pass) {
            v.wa = worst.a;
            v.wb = worst.b;
            v.heuristic = false;
            v.certified = true;
        }
    }
    return v;
}

// ---------------------------------------------------------------------------
// Regular partition

struct RegularPartition {
    std::vector<std::vector<int>> classes;
    std::vector<std::pair<int, int>> regular_pairs;  // ordered (i,j), 0-based, diagonal included
    Rational mass{0};                                // Σ_R |V_i||V_j| / |V|²
    std::vector<double> energy;                      // per round, before refinement
    int rounds = 0;
    bool satisfied = false;        // mass > 1 - ε
    bool certified = false;        // every pair in R decided exactly
    bool max_classes_hit = false;
};

inline double partition_energy(const SimpleGraph& g, const std::vector<std::vector<int>>& cls) {
    double n = g.n(), q = 0;
    for (const auto& a : cls)
        for (const auto& b : cls) {
            double e = static_cast<double>(detail::pair_edges(g, a, vertex_mask(g.n(), b)));
            q += e * e / (static_cast<double>(a.size()) * static_cast<double>(b.size())) / (n * n);
        }
    return q;
}

/// Start from one class; each round tests all ordered class pairs and splits
/// classes by the witness sets of irregular pairs, while the class count
/// stays within max_classes.
inline RegularPartition regular_partition(const SimpleGraph& g, Rational eps, int max_classes = 64,
                                          WitnessPolicy policy = WitnessPolicy::heuristic()) {
    if (!(eps > 0 && eps < 1)) throw InputError("regular: need 0 < epsilon < 1");
    if (g.n() < 1) throw InputError("regular: empty graph");
    if (max_classes < 1) throw InputError("regular: max_classes must be >= 1");
    RegularPartition P;
    std::vector<int> all(static_cast<std::size_t>(g.n()));
    std::iota(all.begin(), all.end(), 1);
    P.classes = {all};
    i64 n2 = static_cast<i64>(g.n()) * g.n();
    while (true) {
        P.energy.push_back(partition_energy(g, P.classes));
        int k = static_cast<int>(P.classes.size());
        std::vector<PseudoVerdict> res(static_cast<std::size_t>(k) * k);
        // pairs are independent; chunked for determinism
        auto run = [&](i64 p0, i64 p1) {
            for (i64 p = p0; p < p1; ++p) {
                int i = static_cast<int>(p / k), j = static_cast<int>(p % k);
                WitnessPolicy pol = policy;
                bool small = P.classes[i].size() <= 16 && P.classes[j].size() <= 16;
                if (small) pol = WitnessPolicy::exhaustive();
                else pol.seed = policy.seed ^ (static_cast<u64>(p) * 0x9e3779b97f4a7c15ULL);
                if (i == j && P.classes[i].size() == 1) {
                    res[p].certified = true;  // no pair of distinct vertices
                    continue;
                }
                res[p] = pseudorandom_check(g, P.classes[i], P.classes[j], eps, pol);
            }
            return 0;
        };
        parallel_chunks(0, static_cast<i64>(k) * k, run);
        P.regular_pairs.clear();
        i64 mass = 0;
        bool cert = true;
        std::vector<std::vector<int>> splitters;
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) {
                const auto& r = res[static_cast<std::size_t>(i) * k + j];
                if (r.pass) {
                    P.regular_pairs.emplace_back(i, j);
                    mass += static_cast<i64>(P.classes[i].size() * P.classes[j].size());
                    cert = cert && r.certified;
                } else {
                    splitters.push_back(r.wa);
                    splitters.push_back(r.wb);
                }
            }
        P.mass = Rational(mass, n2);
        P.certified = cert;
        if (P.mass > Rational(1) - eps) {
            P.satisfied = true;
            break;
        }
        // refine by each witness set in turn while the count allows
        auto cls = P.classes;
        bool changed = false;
        for (const auto& s : splitters) {
            std::vector<char> in(static_cast<std::size_t>(g.n()) + 1, 0);
            for (int v : s) in[v] = 1;
            std::vector<std::vector<int>> next;
            for (const auto& c : cls) {
                std::vector<int> a, b;
                for (int v : c) (in[v] ? a : b).push_back(v);
                if (!a.empty()) next.push_back(std::move(a));
                if (!b.empty()) next.push_back(std::move(b));
            }
            if (static_cast<int>(next.size()) > max_classes) {
                P.max_classes_hit = true;
                continue;
            }
            if (next.size() != cls.size()) changed = true;
            cls = std::move(next);
        }
        if (!changed) break;
        std::sort(cls.begin(), cls.end());
        P.classes = std::move(cls);
        ++P.rounds;
    }
    return P;
}

}  // namespace rw
