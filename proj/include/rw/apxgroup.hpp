#pragma once
// Approximate groups over small concrete models: Z^d, (Z/n)^d and the integer
// Heisenberg group. Translate covers of X², GAPs and noncommutative
// progressions.

#include "rw/common.hpp"

#include <deque>
#include <map>
#include <queue>
#include <set>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace rw {

using GroupElem = std::vector<i64>;

struct GroupElemHash {
    std::size_t operator()(const GroupElem& g) const {
        u64 h = 1469598103934665603ULL;
        for (i64 x : g) h = (h ^ static_cast<u64>(x)) * 1099511628211ULL;
        return static_cast<std::size_t>(h);
    }
};

struct GroupModel {
    enum class Kind { zd, znd, heis } kind = Kind::zd;
    int d = 1;
    i64 n = 0;  // modulus for znd

    static GroupModel zd(int d) {
        if (d < 1 || d > 8) throw InputError("model: zd needs 1 <= d <= 8");
        return {Kind::zd, d, 0};
    }
    static GroupModel znd(i64 n, int d) {
        if (n < 1 || d < 1 || d > 8) throw InputError("model: znd needs n >= 1, 1 <= d <= 8");
        return {Kind::znd, d, n};
    }
    /// (x,y,z)(x',y',z') = (x+x', y+y', z+z'+xy')
    static GroupModel heis() { return {Kind::heis, 3, 0}; }

    int dim() const { return d; }
    bool abelian() const { return kind != Kind::heis; }
    std::string name() const {
        switch (kind) {
            case Kind::zd: return "zd:" + std::to_string(d);
            case Kind::znd: return "znd:" + std::to_string(n) + ":" + std::to_string(d);
            default: return "heis";
        }
    }

    GroupElem identity() const { return GroupElem(static_cast<std::size_t>(d), 0); }

    GroupElem normalize(GroupElem g) const {
        if (static_cast<int>(g.size()) != d) throw InputError("model " + name() + ": element needs " + std::to_string(d) + " components");
        if (kind == Kind::znd)
            for (auto& x : g) x = ((x % n) + n) % n;
        return g;
    }

    GroupElem op(const GroupElem& a, const GroupElem& b) const {
        GroupElem c(static_cast<std::size_t>(d));
        for (int i = 0; i < d; ++i) c[i] = a[i] + b[i];
        if (kind == Kind::znd)
            for (auto& x : c) x %= n;
        if (kind == Kind::heis) c[2] += a[0] * b[1];
        return c;
    }

    GroupElem inv(const GroupElem& a) const {
        GroupElem c(static_cast<std::size_t>(d));
        for (int i = 0; i < d; ++i) c[i] = -a[i];
        if (kind == Kind::znd)
            for (auto& x : c) x = (x + n) % n;
        if (kind == Kind::heis) c[2] = -a[2] + a[0] * a[1];
        return c;
    }
};

/// "zd:2", "znd:50:1", "heis"
inline GroupModel parse_model(const std::string& s) {
    std::vector<std::string> parts;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ':')) parts.push_back(item);
    try {
        if (parts.size() == 2 && parts[0] == "zd") return GroupModel::zd(std::stoi(parts[1]));
        if (parts.size() == 3 && parts[0] == "znd") return GroupModel::znd(std::stoll(parts[1]), std::stoi(parts[2]));
    } catch (const std::logic_error&) {
        throw InputError("model: bad number in '" + s + "'");
    }
    if (parts.size() == 1 && parts[0] == "heis") return GroupModel::heis();
    throw InputError("model: expected zd:<d>, znd:<n>:<d> or heis, got '" + s + "'");
}

/// "1,0,-2"
inline GroupElem parse_elem(const GroupModel& m, const std::string& s) {
    GroupElem g;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            g.push_back(std::stoll(item, &used));
            if (used != item.size()) throw std::invalid_argument("trailing");
        } catch (const std::logic_error&) {
            throw InputError("element: bad component '" + item + "'");
        }
    }
    return m.normalize(g);
}

inline std::string elem_to_string(const GroupElem& g) {
    std::string s;
    for (std::size_t i = 0; i < g.size(); ++i) s += (i ? "," : "") + std::to_string(g[i]);
    return s;
}

struct GroupSet {
    GroupModel model;
    std::vector<GroupElem> elements;  // sorted, distinct

    GroupSet() = default;
    GroupSet(GroupModel m, std::vector<GroupElem> es) : model(m) {
        for (auto& e : es) e = model.normalize(e);
        std::sort(es.begin(), es.end());
        es.erase(std::unique(es.begin(), es.end()), es.end());
        elements = std::move(es);
    }
    std::size_t size() const { return elements.size(); }
    bool contains(const GroupElem& g) const { return std::binary_search(elements.begin(), elements.end(), g); }
    bool symmetric() const {
        if (!contains(model.identity())) return false;
        for (const auto& x : elements)
            if (!contains(model.inv(x))) return false;
        return true;
    }
    friend bool operator==(const GroupSet& a, const GroupSet& b) { return a.elements == b.elements; }
};

/// X·Y
inline GroupSet product_set(const GroupSet& x, const GroupSet& y) {
    std::unordered_set<GroupElem, GroupElemHash> s;
    for (const auto& a : x.elements)
        for (const auto& b : y.elements) s.insert(x.model.op(a, b));
    return GroupSet(x.model, std::vector<GroupElem>(s.begin(), s.end()));
}

inline GroupSet subgroup_generated(const GroupModel& m, const std::vector<GroupElem>& gens, std::size_t cap = 1'000'000) {
    std::set<GroupElem> seen{m.identity()};
    std::deque<GroupElem> q{m.identity()};
    while (!q.empty()) {
        auto g = q.front();
        q.pop_front();
        for (const auto& h : gens)
            for (const auto& s : {h, m.inv(h)}) {
                auto p = m.op(g, s);
                if (seen.insert(p).second) {
                    if (seen.size() > cap) throw InputError("subgroup: exceeds cap (infinite or too large)");
                    q.push_back(p);
                }
            }
    }
    return GroupSet(m, std::vector<GroupElem>(seen.begin(), seen.end()));
}

// ---------------------------------------------------------------------------
// Cover constant

struct CoverMode {
    enum class Kind { greedy, exact } kind = Kind::greedy;
    std::size_t cap = 4096;  // exact mode: max |X²|

    static CoverMode greedy() { return {Kind::greedy, 0}; }
    static CoverMode exact(std::size_t cap = 4096) { return {Kind::exact, cap}; }
    std::string name() const { return kind == Kind::greedy ? "greedy" : "exact(" + std::to_string(cap) + ")"; }
};

struct CoverResult {
    SearchStatus status = SearchStatus::found;  // budget when the exact search ran out
    int m = 0;
    std::vector<GroupElem> translates;
    bool exceeds = false;  // greedy m > K_max
    bool exact = false;    // m is the true minimum
    bool verified = false;
    std::size_t x_size = 0, x2_size = 0;
    u64 nodes = 0;
};

/// every x ∈ X² lies in some gX, i.e. g⁻¹x ∈ X
inline bool verify_cover(const GroupSet& x, const std::vector<GroupElem>& translates) {
    auto x2 = product_set(x, x);
    for (const auto& y : x2.elements) {
        bool hit = false;
        for (const auto& g : translates)
            if (x.contains(x.model.op(x.model.inv(g), y))) {
                hit = true;
                break;
            }
        if (!hit) return false;
    }
    return true;
}

/// Greedy: the translate covering the most uncovered points of X², ties to
/// the least element, then redundant picks are dropped; repeated with the
/// first two translates forced (covering the first open points of X² in
/// turn, at most 256 runs) and the smallest result kept. Exact: iterative
/// deepening on the number of translates below the greedy count.
inline CoverResult cover_constant(const GroupSet& x, int K_max, CoverMode mode = CoverMode::greedy(), u64 budget = default_budget) {
    if (x.size() == 0) throw InputError("cover: empty set");
    if (!x.symmetric()) throw InputError("cover: X must contain the identity and be closed under inverses");
    const auto& M = x.model;
    auto x2 = product_set(x, x);
    if (mode.kind == CoverMode::Kind::exact && x2.size() > mode.cap)
        throw InputError("cover: exact mode capped at |X^2| <= " + std::to_string(mode.cap));
    std::unordered_map<GroupElem, int, GroupElemHash> idx;
    for (std::size_t i = 0; i < x2.size(); ++i) idx[x2.elements[i]] = static_cast<int>(i);
    // candidates g with gX ∩ X² ≠ ∅ are exactly X²X⁻¹ = X³
    auto cands = product_set(x2, x);
    std::vector<std::vector<int>> covers;  // indices into X² covered by g X
    for (const auto& g : cands.elements) {
        std::vector<int> c;
        for (const auto& y : x.elements)
            if (auto it = idx.find(M.op(g, y)); it != idx.end()) c.push_back(it->second);
        std::sort(c.begin(), c.end());
        covers.push_back(std::move(c));
    }
    CoverResult r;
    r.x_size = x.size();
    r.x2_size = x2.size();
    // lazy greedy after forced first translates, then drop picks made
    // redundant by later ones, earliest first
    std::vector<std::pair<int, int>> initial;  // (gain, -index)
    for (std::size_t c = 0; c < covers.size(); ++c) initial.emplace_back(static_cast<int>(covers[c].size()), -static_cast<int>(c));
    std::make_heap(initial.begin(), initial.end());
    auto greedy = [&](const std::vector<int>& forced) {
        std::vector<char> done(x2.size(), 0);
        std::size_t left = x2.size();
        std::vector<int> pick;
        auto take = [&](int c) {
            pick.push_back(c);
            for (int i : covers[c])
                if (!done[i]) done[i] = 1, --left;
        };
        for (int c : forced) take(c);
        auto heap = initial;
        while (left > 0) {
            std::pop_heap(heap.begin(), heap.end());
            auto [g, ni] = heap.back();
            heap.pop_back();
            int c = -ni, now = 0;
            for (int i : covers[c]) now += !done[i];
            if (now == g) take(c);
            else if (now > 0) {
                heap.emplace_back(now, ni);
                std::push_heap(heap.begin(), heap.end());
            }
        }
        std::vector<int> cnt(x2.size(), 0);
        for (int c : pick)
            for (int i : covers[c]) ++cnt[i];
        std::vector<int> kept;
        for (int c : pick) {
            bool needed = false;
            for (int i : covers[c]) needed = needed || cnt[i] == 1;
            if (needed) kept.push_back(c);
            else
                for (int i : covers[c]) --cnt[i];
        }
        return kept;
    };
    std::vector<std::vector<int>> by_point(x2.size());
    for (std::size_t c = 0; c < covers.size(); ++c)
        for (int i : covers[c]) by_point[i].push_back(static_cast<int>(c));
    std::vector<int> pick = greedy({});
    // restarts: each translate covering the first point of X², then each
    // covering the first point still open
    int runs = 0;
    for (int c1 : by_point[0]) {
        if (pick.size() <= 2 || runs >= 256) break;
        std::vector<char> hit(x2.size(), 0);
        for (int i : covers[c1]) hit[i] = 1;
        std::size_t p = 0;
        while (p < x2.size() && hit[p]) ++p;
        if (p == x2.size()) {
            pick = {c1};
            break;
        }
        for (int c2 : by_point[p]) {
            if (++runs > 256) break;
            auto alt = greedy({c1, c2});
            if (alt.size() < pick.size()) pick = std::move(alt);
            if (pick.size() <= 2) break;
        }
    }
    if (mode.kind == CoverMode::Kind::exact) {
        Budget b(budget);
        std::size_t maxc = 0;
        for (auto& c : covers) maxc = std::max(maxc, c.size());
        std::vector<int> cnt(x2.size(), 0), cur;
        std::size_t uncovered = x2.size();
        bool out_of_budget = false;
        std::function<bool(std::size_t)> dfs = [&](std::size_t depth) -> bool {
            if (uncovered == 0) return true;
            if (depth == 0 || (uncovered + maxc - 1) / maxc > depth) return false;
            if (!b.spend()) {
                out_of_budget = true;
                return false;
            }
            // first uncovered point; one of its covers must be used
            std::size_t p = 0;
            while (cnt[p]) ++p;
            for (int c : by_point[p]) {
                cur.push_back(c);
                for (int i : covers[c])
                    if (cnt[i]++ == 0) --uncovered;
                if (dfs(depth - 1)) return true;
                for (int i : covers[c])
                    if (--cnt[i] == 0) ++uncovered;
                cur.pop_back();
                if (out_of_budget) return false;
            }
            return false;
        };
        for (std::size_t k = 1; k < pick.size() && !out_of_budget; ++k)
            if (dfs(k)) {
                pick = cur;
                break;
            }
        r.nodes = b.used();
        r.exact = !out_of_budget;
        if (out_of_budget) r.status = SearchStatus::budget;
    }
    std::sort(pick.begin(), pick.end());
    for (int c : pick) r.translates.push_back(cands.elements[c]);
    r.m = static_cast<int>(r.translates.size());
    r.exceeds = r.m > K_max;
    r.verified = verify_cover(x, r.translates);
    return r;
}

// ---------------------------------------------------------------------------
// Progressions

inline void check_generators(const GroupModel& m, const std::vector<GroupElem>& v, const std::vector<i64>& N) {
    if (v.empty()) throw InputError("progression: need r >= 1 generators");
    if (v.size() != N.size()) throw InputError("progression: " + std::to_string(v.size()) + " generators but " +
                                               std::to_string(N.size()) + " bounds");
    for (i64 b : N)
        if (b < 0) throw InputError("progression: bounds must be >= 0");
    for (const auto& g : v) m.normalize(g);
}

/// P(v,N) = {Σ a_i v_i : |a_i| ≤ N_i} in an abelian model
inline GroupSet gap_generate(const GroupModel& m, const std::vector<GroupElem>& v, const std::vector<i64>& N,
                             u64 cap = 5'000'000) {
    if (!m.abelian()) throw InputError("gap: model " + m.name() + " is not abelian");
    check_generators(m, v, N);
    double total = 1;
    for (i64 b : N) total *= static_cast<double>(2 * b + 1);
    if (total > static_cast<double>(cap)) throw InputError("gap: too many coefficient vectors");
    std::vector<GroupElem> vn;
    for (const auto& g : v) vn.push_back(m.normalize(g));
    std::vector<GroupElem> out;
    std::vector<i64> a(N.size());
    for (std::size_t i = 0; i < N.size(); ++i) a[i] = -N[i];
    while (true) {
        GroupElem s = m.identity();
        for (std::size_t i = 0; i < N.size(); ++i) {
            GroupElem p = a[i] >= 0 ? vn[i] : m.inv(vn[i]);
            for (i64 k = 0; k < (a[i] < 0 ? -a[i] : a[i]); ++k) s = m.op(s, p);
        }
        out.push_back(s);
        std::size_t j = 0;
        while (j < N.size() && a[j] == N[j]) a[j] = -N[j], ++j;
        if (j == N.size()) break;
        ++a[j];
    }
    return GroupSet(m, std::move(out));
}

/// Values of words in v_i^{±1} using v_i and v_i⁻¹ together at most N_i
/// times, by BFS over (occurrences used, value).
inline GroupSet ncp_generate(const GroupModel& m, const std::vector<GroupElem>& v, const std::vector<i64>& N,
                             u64 cap = 5'000'000) {
    check_generators(m, v, N);
    std::vector<GroupElem> vn;
    for (const auto& g : v) vn.push_back(m.normalize(g));
    using State = std::pair<std::vector<i64>, GroupElem>;
    std::set<State> seen;
    std::deque<State> q;
    State start{std::vector<i64>(N.size(), 0), m.identity()};
    seen.insert(start);
    q.push_back(start);
    std::set<GroupElem> values{m.identity()};
    while (!q.empty()) {
        auto [used, g] = q.front();
        q.pop_front();
        for (std::size_t i = 0; i < vn.size(); ++i) {
            if (used[i] == N[i]) continue;
            for (const auto& s : {vn[i], m.inv(vn[i])}) {
                State nx{used, m.op(g, s)};
                ++nx.first[i];
                if (seen.insert(nx).second) {
                    if (seen.size() > cap) throw InputError("ncp: state count exceeds cap");
                    values.insert(nx.second);
                    q.push_back(std::move(nx));
                }
            }
        }
    }
    return GroupSet(m, std::vector<GroupElem>(values.begin(), values.end()));
}

}  // namespace rw
