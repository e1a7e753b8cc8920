#pragma once
// Windowed integer sets: the carrier for every other module.

#include "rw/common.hpp"

#include <bit>
#include <cmath>
#include <istream>
#include <map>
#include <numeric>
#include <ostream>
#include <random>
#include <span>
#include <sstream>

namespace rw {

struct Interval {
    i64 lo = 1;
    i64 hi = 1;

    Interval() = default;
    Interval(i64 l, i64 h) : lo(l), hi(h) {
        if (l > h) throw InputError("interval [" + std::to_string(l) + "," + std::to_string(h) + "] has lo > hi");
    }
    i64 length() const { return hi - lo + 1; }
    bool contains(i64 x) const { return lo <= x && x <= hi; }
    bool contains(const Interval& o) const { return lo <= o.lo && o.hi <= hi; }
    Interval shifted(i64 t) const { return {lo + t, hi + t}; }
    friend bool operator==(const Interval&, const Interval&) = default;
};

/// Fixed-size bit vector over an integer window, used for sumset convolution
/// and gap scans.
class BitWindow {
public:
    BitWindow() = default;
    BitWindow(i64 lo, i64 hi) : lo_(lo), n_(hi - lo + 1), words_((n_ + 63) / 64, 0) {}

    i64 lo() const { return lo_; }
    i64 hi() const { return lo_ + n_ - 1; }
    i64 size() const { return n_; }

    void set(i64 x) {
        i64 i = x - lo_;
        words_[i >> 6] |= u64{1} << (i & 63);
    }
    bool test(i64 x) const {
        i64 i = x - lo_;
        if (i < 0 || i >= n_) return false;
        return (words_[i >> 6] >> (i & 63)) & 1u;
    }
    /// this |= (src shifted so that src position p lands on p + shift)
    void or_shifted(const BitWindow& src, i64 shift) {
        i64 offset = src.lo_ + shift - lo_;  // index in this of src index 0
        if (offset < 0) throw std::logic_error("or_shifted: negative offset");
        i64 ws = offset >> 6;
        int bs = static_cast<int>(offset & 63);
        for (std::size_t w = 0; w < src.words_.size(); ++w) {
            u64 v = src.words_[w];
            if (!v) continue;
            std::size_t dst = w + ws;
            words_[dst] |= v << bs;
            if (bs && dst + 1 < words_.size()) words_[dst + 1] |= v >> (64 - bs);
        }
    }
    std::vector<i64> members() const {
        std::vector<i64> out;
        for (std::size_t w = 0; w < words_.size(); ++w) {
            u64 v = words_[w];
            while (v) {
                int b = std::countr_zero(v);
                out.push_back(lo_ + static_cast<i64>(w) * 64 + b);
                v &= v - 1;
            }
        }
        return out;
    }
    const std::vector<u64>& words() const { return words_; }

    /// 64 bits starting at index `off` (bits outside the window read as 0).
    u64 word_at(i64 off) const {
        if (off <= -64 || off >= n_) return 0;
        if (off < 0) return words_[0] << (-off);
        i64 w = off >> 6;
        int b = static_cast<int>(off & 63);
        u64 v = words_[w] >> b;
        if (b && w + 1 < static_cast<i64>(words_.size())) v |= words_[w + 1] << (64 - b);
        return v;
    }

    /// |{x : x in this and x + shift in other}|
    i64 count_and_shifted(const BitWindow& other, i64 shift) const {
        i64 cnt = 0;
        i64 base = lo_ + shift - other.lo_;
        for (std::size_t w = 0; w < words_.size(); ++w) {
            u64 v = words_[w];
            if (!v) continue;
            cnt += std::popcount(v & other.word_at(base + static_cast<i64>(w) * 64));
        }
        return cnt;
    }

private:
    i64 lo_ = 0;
    i64 n_ = 0;
    std::vector<u64> words_;
};

/// Finite set of integers inside an explicit window [lo, hi].
class IntSet {
public:
    IntSet() : window_(0, 0) {}

    IntSet(Interval window, std::vector<i64> members) : window_(window), members_(std::move(members)) {
        std::sort(members_.begin(), members_.end());
        members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
        if (!members_.empty() && (members_.front() < window_.lo || members_.back() > window_.hi))
            throw InputError("member outside window [" + std::to_string(window_.lo) + "," +
                             std::to_string(window_.hi) + "]");
    }

    /// Window defaults to [min, max]; an empty list gets the window [0, 0].
    static IntSet of(std::vector<i64> members) {
        if (members.empty()) return IntSet(Interval(0, 0), {});
        auto [mn, mx] = std::minmax_element(members.begin(), members.end());
        Interval w(*mn, *mx);
        return IntSet(w, std::move(members));
    }

    static IntSet range(i64 lo, i64 hi) {
        std::vector<i64> m(static_cast<std::size_t>(hi - lo + 1));
        std::iota(m.begin(), m.end(), lo);
        return IntSet(Interval(lo, hi), std::move(m));
    }

    static IntSet empty(Interval window) { return IntSet(window, {}); }

    const Interval& window() const { return window_; }
    const std::vector<i64>& members() const& { return members_; }
    std::vector<i64> members() && { return std::move(members_); }
    std::size_t size() const { return members_.size(); }
    bool empty() const { return members_.empty(); }
    i64 min() const { return members_.front(); }
    i64 max() const { return members_.back(); }

    bool contains(i64 x) const { return std::binary_search(members_.begin(), members_.end(), x); }

    /// |A ∩ [lo, hi]|
    i64 count_in(i64 lo, i64 hi) const {
        if (hi < lo) return 0;
        auto a = std::lower_bound(members_.begin(), members_.end(), lo);
        auto b = std::upper_bound(a, members_.end(), hi);
        return b - a;
    }
    i64 count_in(const Interval& I) const { return count_in(I.lo, I.hi); }

    BitWindow bits() const {
        BitWindow b(window_.lo, window_.hi);
        for (i64 x : members_) b.set(x);
        return b;
    }

    /// 0/1 indicator over the window, index 0 = window.lo.
    std::vector<char> indicator() const {
        std::vector<char> v(static_cast<std::size_t>(window_.length()), 0);
        for (i64 x : members_) v[x - window_.lo] = 1;
        return v;
    }

    /// prefix[i] = |A ∩ [window.lo, window.lo + i - 1]|, size = length + 1.
    std::vector<i64> prefix_counts() const {
        std::vector<i64> p(static_cast<std::size_t>(window_.length()) + 1, 0);
        for (i64 x : members_) p[x - window_.lo + 1] = 1;
        for (std::size_t i = 1; i < p.size(); ++i) p[i] += p[i - 1];
        return p;
    }

    IntSet shifted(i64 t) const {
        std::vector<i64> m(members_);
        for (auto& x : m) x += t;
        return IntSet(window_.shifted(t), std::move(m));
    }

    IntSet negated() const {
        std::vector<i64> m;
        m.reserve(members_.size());
        for (auto it = members_.rbegin(); it != members_.rend(); ++it) m.push_back(-*it);
        return IntSet(Interval(-window_.hi, -window_.lo), std::move(m));
    }

    /// A ∩ I, keeping I as the window.
    IntSet restricted(const Interval& I) const {
        auto a = std::lower_bound(members_.begin(), members_.end(), I.lo);
        auto b = std::upper_bound(a, members_.end(), I.hi);
        return IntSet(I, std::vector<i64>(a, b));
    }

    IntSet with_window(const Interval& w) const { return IntSet(w, members_); }

    bool subset_of(const IntSet& o) const {
        return std::includes(o.members_.begin(), o.members_.end(), members_.begin(), members_.end());
    }

    friend bool operator==(const IntSet& a, const IntSet& b) {
        return a.window_ == b.window_ && a.members_ == b.members_;
    }

private:
    Interval window_;
    std::vector<i64> members_;
};

inline Interval hull(const Interval& a, const Interval& b) {
    return {std::min(a.lo, b.lo), std::max(a.hi, b.hi)};
}

inline IntSet set_union(const IntSet& a, const IntSet& b) {
    std::vector<i64> m;
    std::set_union(a.members().begin(), a.members().end(), b.members().begin(), b.members().end(),
                   std::back_inserter(m));
    return IntSet(hull(a.window(), b.window()), std::move(m));
}

inline IntSet set_intersection(const IntSet& a, const IntSet& b) {
    std::vector<i64> m;
    std::set_intersection(a.members().begin(), a.members().end(), b.members().begin(), b.members().end(),
                          std::back_inserter(m));
    Interval w(std::max(a.window().lo, b.window().lo), std::max(std::max(a.window().lo, b.window().lo),
                                                                std::min(a.window().hi, b.window().hi)));
    return IntSet(w, std::move(m));
}

// ---------------------------------------------------------------------------
// Set arithmetic

enum class CombineMode { sum, difference };
enum class IterateMode { fold_sum, dilate };

/// A + B or A - B. The output window is the exact arithmetic span of the
/// operand windows.
inline IntSet combine(const IntSet& a, const IntSet& b, CombineMode mode) {
    const IntSet& rhs_src = b;
    IntSet rhs = mode == CombineMode::sum ? rhs_src : rhs_src.negated();
    Interval w(a.window().lo + rhs.window().lo, a.window().hi + rhs.window().hi);
    if (a.empty() || rhs.empty()) return IntSet::empty(w);
    BitWindow out(w.lo, w.hi);
    // iterate over the smaller operand, shifting the bit image of the larger
    const IntSet& small = a.size() <= rhs.size() ? a : rhs;
    const IntSet& large = a.size() <= rhs.size() ? rhs : a;
    BitWindow lb = large.bits();
    for (i64 x : small.members()) out.or_shifted(lb, x);
    return IntSet(w, out.members());
}

inline IntSet sumset(const IntSet& a, const IntSet& b) { return combine(a, b, CombineMode::sum); }

/// k·A (k-fold sumset) or the dilation {kx : x in A}.
inline IntSet iterate(const IntSet& a, i64 k, IterateMode mode) {
    if (k < 1) throw DomainError("iterate: k must be >= 1");
    if (mode == IterateMode::dilate) {
        std::vector<i64> m(a.members());
        for (auto& x : m) x *= k;
        return IntSet(Interval(a.window().lo * k, a.window().hi * k), std::move(m));
    }
    IntSet acc = a;
    for (i64 i = 1; i < k; ++i) acc = sumset(acc, a);
    return acc;
}

/// δ(A, I) = |A ∩ I| / |I|
inline Rational rel_density(const IntSet& a, const Interval& I) {
    return Rational(a.count_in(I), I.length());
}

/// Differences n > 0 realised by at least `threshold` ordered pairs (a, a')
/// with a - a' = n.
inline IntSet dset(const IntSet& a, i64 threshold) {
    if (threshold < 1) throw DomainError("dset: threshold must be >= 1");
    i64 span = a.empty() ? 0 : a.max() - a.min();
    Interval w(1, std::max<i64>(1, span));
    if (a.size() < 2) return IntSet::empty(w);
    std::vector<i64> mult(static_cast<std::size_t>(span) + 1, 0);
    const auto& m = a.members();
    auto n = static_cast<double>(m.size());
    if (n * n / 2 <= static_cast<double>(span) * static_cast<double>(span) / 64.0 + 1e6) {
        for (std::size_t i = 0; i < m.size(); ++i)
            for (std::size_t j = 0; j < i; ++j) ++mult[m[i] - m[j]];
    } else {
        auto ind = a.restricted(Interval(a.min(), a.max())).indicator();
        for (i64 d = 1; d <= span; ++d) {
            i64 c = 0;
            for (i64 x = 0; x + d <= span; ++x) c += ind[x] & ind[x + d];
            mult[d] = c;
        }
    }
    std::vector<i64> out;
    for (i64 d = 1; d <= span; ++d)
        if (mult[d] >= threshold) out.push_back(d);
    return IntSet(w, std::move(out));
}

// ---------------------------------------------------------------------------
// Colorings

/// Total map [1, n] -> [1, r].
class Coloring {
public:
    Coloring() = default;
    Coloring(i64 n, int r, std::vector<int> assign) : n_(n), r_(r), assign_(std::move(assign)) {
        if (static_cast<i64>(assign_.size()) != n_) throw InputError("coloring: expected " + std::to_string(n_) + " colors");
        for (int c : assign_)
            if (c < 1 || c > r_) throw InputError("coloring: color " + std::to_string(c) + " outside [1," + std::to_string(r_) + "]");
    }
    template <class F>
    static Coloring from_rule(i64 n, int r, F&& rule) {
        std::vector<int> a(static_cast<std::size_t>(n));
        for (i64 x = 1; x <= n; ++x) a[x - 1] = rule(x);
        return Coloring(n, r, std::move(a));
    }
    static Coloring constant(i64 n) { return Coloring(n, 1, std::vector<int>(static_cast<std::size_t>(n), 1)); }

    i64 n() const { return n_; }
    int r() const { return r_; }
    int operator()(i64 x) const { return assign_[x - 1]; }
    const std::vector<int>& assign() const { return assign_; }
    /// C_i = c^{-1}(i) with window [1, n]
    IntSet color_class(int i) const {
        std::vector<i64> m;
        for (i64 x = 1; x <= n_; ++x)
            if (assign_[x - 1] == i) m.push_back(x);
        return IntSet(Interval(1, std::max<i64>(n_, 1)), std::move(m));
    }
    friend bool operator==(const Coloring&, const Coloring&) = default;

private:
    i64 n_ = 0;
    int r_ = 1;
    std::vector<int> assign_;
};

inline u64 binom(i64 n, i64 k) {
    if (k < 0 || n < 0 || k > n) return 0;
    k = std::min(k, n - k);
    u64 r = 1;
    for (i64 i = 1; i <= k; ++i) r = r * static_cast<u64>(n - k + i) / static_cast<u64>(i);
    return r;
}

/// Colex rank of a sorted subset of [1, n] (elements 1-based).
inline u64 colex_rank(std::span<const int> subset) {
    u64 r = 0;
    for (std::size_t i = 0; i < subset.size(); ++i) r += binom(subset[i] - 1, static_cast<i64>(i) + 1);
    return r;
}

/// Enumerates the m-subsets of [1, n] in colex order.
inline std::vector<std::vector<int>> colex_subsets(int n, int m) {
    std::vector<std::vector<int>> out;
    if (m < 0 || m > n) return out;
    std::vector<int> s(m);
    std::iota(s.begin(), s.end(), 1);
    while (true) {
        out.push_back(s);
        int i = 0;
        while (i < m && (i + 1 < m ? s[i] + 1 == s[i + 1] : s[i] == n)) ++i;
        if (i == m) break;
        ++s[i];
        for (int j = 0; j < i; ++j) s[j] = j + 1;
    }
    return out;
}

/// Total map from m-element subsets of [1, n] to [1, r], stored in colex order.
class PairColoring {
public:
    PairColoring() = default;
    PairColoring(int n, int m, int r, std::vector<int> assign) : n_(n), m_(m), r_(r), assign_(std::move(assign)) {
        if (assign_.size() != binom(n, m)) throw InputError("pair coloring: expected C(n,m) entries");
        for (int c : assign_)
            if (c < 1 || c > r_) throw InputError("pair coloring: color outside range");
    }
    template <class F>
    static PairColoring from_rule(int n, int m, int r, F&& rule) {
        auto subs = colex_subsets(n, m);
        std::vector<int> a;
        a.reserve(subs.size());
        for (const auto& s : subs) a.push_back(rule(std::span<const int>(s)));
        return PairColoring(n, m, r, std::move(a));
    }
    int n() const { return n_; }
    int m() const { return m_; }
    int r() const { return r_; }
    int operator()(std::span<const int> sorted_subset) const { return assign_[colex_rank(sorted_subset)]; }
    int pair(int a, int b) const {
        int s[2] = {std::min(a, b), std::max(a, b)};
        return (*this)(std::span<const int>(s, 2));
    }
    const std::vector<int>& assign() const { return assign_; }

private:
    int n_ = 0, m_ = 0, r_ = 1;
    std::vector<int> assign_;
};

// ---------------------------------------------------------------------------
// Text set format: one integer per line, '#' comments, optional header
// "window <lo> <hi>".

inline IntSet read_set(std::istream& in, const std::string& source = "<input>") {
    std::vector<i64> members;
    std::optional<Interval> window;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok)) continue;
        auto err = [&](const std::string& what) {
            return InputError(source + ":" + std::to_string(lineno) + ": " + what);
        };
        if (tok == "window") {
            i64 lo, hi;
            if (!(ls >> lo >> hi)) throw err("expected 'window <lo> <hi>'");
            if (lo > hi) throw err("window lo > hi");
            if (window) throw err("duplicate window header");
            if (!members.empty()) throw err("window header must precede members");
            window = Interval(lo, hi);
        } else {
            std::size_t used = 0;
            i64 v;
            try {
                v = std::stoll(tok, &used);
            } catch (const std::exception&) {
                throw err("not an integer: '" + tok + "'");
            }
            if (used != tok.size()) throw err("not an integer: '" + tok + "'");
            if (ls >> tok) throw err("one integer per line expected");
            if (window && !window->contains(v)) throw err("member " + tok + " outside window");
            members.push_back(v);
        }
    }
    if (window) return IntSet(*window, std::move(members));
    return IntSet::of(std::move(members));
}

inline void write_set(std::ostream& out, const IntSet& a) {
    out << "window " << a.window().lo << ' ' << a.window().hi << '\n';
    for (i64 x : a.members()) out << x << '\n';
}

// ---------------------------------------------------------------------------
// Generators for reproducible inputs.

namespace gen {

/// Members of window congruent to one of `residues` mod p.
inline IntSet periodic(i64 p, const std::vector<i64>& residues, Interval window) {
    if (p < 1) throw InputError("periodic: period must be >= 1");
    std::vector<char> keep(static_cast<std::size_t>(p), 0);
    for (i64 r : residues) keep[((r % p) + p) % p] = 1;
    std::vector<i64> m;
    for (i64 x = window.lo; x <= window.hi; ++x)
        if (keep[((x % p) + p) % p]) m.push_back(x);
    return IntSet(window, std::move(m));
}

/// Each x in the window independently with probability `density`
/// (exact rational, 64-bit Mersenne Twister seeded with `seed`).
inline IntSet random(const Rational& density, u64 seed, Interval window) {
    if (density < 0 || density > 1) throw InputError("random: density outside [0,1]");
    std::mt19937_64 rng(seed);
    auto num = static_cast<u64>(density.numerator());
    auto den = static_cast<u64>(density.denominator());
    std::vector<i64> m;
    for (i64 x = window.lo; x <= window.hi; ++x)
        if (rng() % den < num) m.push_back(x);
    return IntSet(window, std::move(m));
}

inline IntSet squares(Interval window) {
    std::vector<i64> m;
    for (i64 k = 0; k * k <= window.hi; ++k)
        if (k * k >= window.lo) m.push_back(k * k);
    return IntSet(window, std::move(m));
}

inline IntSet primes(Interval window) {
    std::vector<i64> m;
    if (window.hi >= 2) {
        std::vector<char> comp(static_cast<std::size_t>(window.hi) + 1, 0);
        for (i64 p = 2; p <= window.hi; ++p) {
            if (comp[p]) continue;
            if (p >= window.lo) m.push_back(p);
            for (i64 q = p * p; q <= window.hi; q += p) comp[q] = 1;
        }
    }
    return IntSet(window, std::move(m));
}

/// Union of [start + i*period, start + i*period + len - 1] clipped to window.
inline IntSet blocks(i64 start, i64 len, i64 period, Interval window) {
    if (len < 1 || period < 1) throw InputError("blocks: len and period must be >= 1");
    std::vector<i64> m;
    for (i64 b = start; b <= window.hi; b += period)
        for (i64 x = b; x < b + len && x <= window.hi; ++x)
            if (x >= window.lo) m.push_back(x);
    return IntSet(window, std::move(m));
}

/// ∪_k [k², k² + k] truncated to the window.
inline IntSet square_blocks(Interval window) {
    std::vector<i64> m;
    for (i64 k = 1; k * k <= window.hi; ++k)
        for (i64 x = k * k; x <= k * k + k && x <= window.hi; ++x)
            if (x >= window.lo) m.push_back(x);
    return IntSet(window, std::move(m));
}

}  // namespace gen

}  // namespace rw
