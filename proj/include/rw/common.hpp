#pragma once

#include <boost/rational.hpp>

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

namespace rw {

using i64 = std::int64_t;
using u64 = std::uint64_t;

/// Exact rational used for every density, ratio and threshold.
using Rational = boost::rational<i64>;

}  // namespace rw

// boost::rational's mixed equality against an integer recurses forever under
// C++20 rewritten comparisons; exact overloads take precedence.
namespace boost {
#define RW_RATIONAL_EQ(I)                                                                                  \
    inline bool operator==(const rational<std::int64_t>& a, I b) { return a.denominator() == 1 && a.numerator() == b; } \
    inline bool operator!=(const rational<std::int64_t>& a, I b) { return !(a == b); }
RW_RATIONAL_EQ(int)
RW_RATIONAL_EQ(long)
RW_RATIONAL_EQ(long long)
#undef RW_RATIONAL_EQ
}  // namespace boost

namespace rw {

/// Malformed input: bad file, bad flag value, violated precondition.
struct InputError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Mathematically undefined request (k = 0 dilation, empty operand where one is required).
struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

inline std::string to_string(const Rational& q) {
    if (q.denominator() == 1) return std::to_string(q.numerator());
    return std::to_string(q.numerator()) + "/" + std::to_string(q.denominator());
}

/// Parses "p", "p/q" or a finite decimal such as "0.25".
inline Rational parse_rational(std::string_view s) {
    auto fail = [&] { return InputError("not a rational: '" + std::string(s) + "'"); };
    if (s.empty()) throw fail();
    try {
        if (auto slash = s.find('/'); slash != std::string_view::npos) {
            i64 p = std::stoll(std::string(s.substr(0, slash)));
            i64 q = std::stoll(std::string(s.substr(slash + 1)));
            if (q == 0) throw fail();
            return Rational(p, q);
        }
        if (auto dot = s.find('.'); dot != std::string_view::npos) {
            std::string whole(s.substr(0, dot));
            std::string frac(s.substr(dot + 1));
            if (frac.size() > 15) throw fail();
            bool neg = !whole.empty() && whole[0] == '-';
            i64 w = whole.empty() || whole == "-" ? 0 : std::stoll(whole);
            i64 den = 1;
            for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
            i64 f = frac.empty() ? 0 : std::stoll(frac);
            Rational r(std::abs(w) * den + f, den);
            return neg ? -r : r;
        }
        return Rational(std::stoll(std::string(s)));
    } catch (const std::logic_error&) {
        throw fail();
    }
}

inline Rational ratio(i64 p, i64 q) { return Rational(p, q); }

inline double to_double(const Rational& q) {
    return static_cast<double>(q.numerator()) / static_cast<double>(q.denominator());
}

/// ceil of a nonnegative rational
inline i64 ceil_div(const Rational& q) {
    i64 n = q.numerator(), d = q.denominator();
    return n >= 0 ? (n + d - 1) / d : -((-n) / d);
}

inline i64 floor_div(i64 a, i64 b) {
    i64 q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

// ---------------------------------------------------------------------------
// Threading. Results never depend on the thread count: every parallel scan
// splits its range into chunks, reduces each chunk locally and merges the
// partial results in chunk order.

namespace detail {
inline std::atomic<int>& thread_override() {
    static std::atomic<int> v{0};
    return v;
}
}  // namespace detail

inline int thread_count() {
    if (int o = detail::thread_override().load(); o > 0) return o;
    if (const char* env = std::getenv("RW_THREADS")) {
        int v = std::atoi(env);
        if (v > 0) return std::min(v, 256);
    }
    return 1;
}

/// Overrides RW_THREADS; 0 restores the environment default.
inline void set_thread_count(int n) { detail::thread_override().store(std::max(n, 0)); }

/// Runs fn(lo, hi) over disjoint chunks of [begin, end) and returns the
/// per-chunk results in chunk order.
template <class Fn>
auto parallel_chunks(i64 begin, i64 end, Fn&& fn) {
    using R = decltype(fn(begin, end));
    std::vector<R> out;
    if (end <= begin) return out;
    i64 total = end - begin;
    int threads = static_cast<int>(std::min<i64>(thread_count(), total));
    if (threads <= 1 || total < 2048) {
        out.push_back(fn(begin, end));
        return out;
    }
    out.resize(threads);
    std::vector<std::thread> pool;
    i64 step = (total + threads - 1) / threads;
    for (int t = 0; t < threads; ++t) {
        i64 lo = begin + t * step;
        i64 hi = std::min(end, lo + step);
        pool.emplace_back([&, t, lo, hi] { out[t] = fn(lo, std::max(lo, hi)); });
    }
    for (auto& th : pool) th.join();
    return out;
}

// ---------------------------------------------------------------------------
// Search outcomes shared by the backtracking engines.

enum class SearchStatus { found, exhausted, budget };

inline std::string_view to_string(SearchStatus s) {
    switch (s) {
        case SearchStatus::found: return "found";
        case SearchStatus::exhausted: return "exhausted";
        case SearchStatus::budget: return "budget";
    }
    return "?";
}

inline constexpr u64 default_budget = 50'000'000;

/// Node counter with a hard cap. Budgets are node counts, never wall-clock.
class Budget {
public:
    explicit Budget(u64 cap = default_budget) : cap_(cap) {}
    bool spend(u64 n = 1) {
        used_ += n;
        return used_ <= cap_;
    }
    bool exhausted() const { return used_ > cap_; }
    u64 used() const { return used_; }
    u64 cap() const { return cap_; }

private:
    u64 cap_;
    u64 used_ = 0;
};

}  // namespace rw
