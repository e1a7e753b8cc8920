#pragma once
// Diophantine equations over positive integers: signed power forms
// Σ c_i x_i^{e_i} = 0 (linear when every e_i = 1) and the mixed form
// x_1 + ... + x_m = y_1 ··· y_n.

#include "rw/core.hpp"

#include <cmath>
#include <sstream>

namespace rw {

struct DioEquation {
    std::vector<i64> coef;          // power form
    std::vector<int> exps;          // same length as coef; all 1 for linear
    std::optional<std::pair<int, int>> product_block;  // (m, n) for the mixed form
    bool distinct_required = false;
    bool exclude_constant = false;  // drop solutions with all coordinates equal

    static DioEquation linear(std::vector<i64> c) {
        DioEquation e;
        e.exps.assign(c.size(), 1);
        e.coef = std::move(c);
        e.validate();
        return e;
    }
    static DioEquation power(std::vector<i64> c, std::vector<int> ex) {
        DioEquation e;
        e.coef = std::move(c);
        e.exps = std::move(ex);
        e.validate();
        return e;
    }
    static DioEquation sum_product(int m, int n) {
        DioEquation e;
        e.product_block = std::make_pair(m, n);
        e.validate();
        return e;
    }

    bool is_linear() const {
        return !product_block && std::all_of(exps.begin(), exps.end(), [](int x) { return x == 1; });
    }
    int arity() const { return product_block ? product_block->first + product_block->second : static_cast<int>(coef.size()); }

    void validate() const {
        if (product_block) {
            if (product_block->first < 1 || product_block->second < 1)
                throw InputError("equation: product form needs m, n >= 1");
            return;
        }
        if (coef.size() < 2) throw InputError("equation: need at least two terms");
        if (coef.size() != exps.size()) throw InputError("equation: exponent count mismatch");
        for (i64 c : coef)
            if (c == 0) throw InputError("equation: zero coefficient");
        for (int e : exps)
            if (e < 1 || e > 8) throw InputError("equation: exponents must lie in [1,8]");
    }

    /// Left side minus right side at x (checked arithmetic in __int128).
    __int128 evaluate(std::span<const i64> x) const {
        if (product_block) {
            auto [m, n] = *product_block;
            __int128 s = 0, p = 1;
            for (int i = 0; i < m; ++i) s += x[i];
            for (int j = 0; j < n; ++j) p *= x[m + j];
            return s - p;
        }
        __int128 s = 0;
        for (std::size_t i = 0; i < coef.size(); ++i) {
            __int128 t = coef[i];
            for (int e = 0; e < exps[i]; ++e) t *= x[i];
            s += t;
        }
        return s;
    }

    bool admissible(std::span<const i64> x) const {
        if (distinct_required) {
            std::vector<i64> v(x.begin(), x.end());
            std::sort(v.begin(), v.end());
            if (std::adjacent_find(v.begin(), v.end()) != v.end()) return false;
        }
        if (exclude_constant && std::all_of(x.begin(), x.end(), [&](i64 y) { return y == x[0]; })) return false;
        return true;
    }

    std::string to_string() const {
        std::ostringstream os;
        if (product_block) {
            os << "sum " << product_block->first << " prod " << product_block->second;
        } else {
            for (std::size_t i = 0; i < coef.size(); ++i) {
                if (i) os << ' ';
                os << coef[i];
                if (!is_linear()) os << '^' << exps[i];
            }
        }
        if (distinct_required) os << " distinct";
        return os.str();
    }
};

/// Mini-language: "1 1 -2" (linear), "sum 2 prod 3" (mixed form),
/// "1^1 1^1 -1^2" (power form, coef^exp). A trailing "distinct" token asks
/// for injective solutions. The form x + y = z^2 drops x = y = z = 2.
inline DioEquation parse_equation(const std::string& text) {
    std::istringstream in(text);
    std::vector<std::string> tok;
    for (std::string t; in >> t;) tok.push_back(t);
    bool distinct = false;
    if (!tok.empty() && tok.back() == "distinct") {
        distinct = true;
        tok.pop_back();
    }
    if (tok.empty()) throw InputError("equation: empty");
    DioEquation e;
    auto as_int = [&](const std::string& s) -> i64 {
        std::size_t used = 0;
        i64 v;
        try {
            v = std::stoll(s, &used);
        } catch (const std::exception&) {
            throw InputError("equation: bad token '" + s + "'");
        }
        if (used != s.size()) throw InputError("equation: bad token '" + s + "'");
        return v;
    };
    if (tok[0] == "sum") {
        if (tok.size() != 4 || tok[2] != "prod") throw InputError("equation: expected 'sum <m> prod <n>'");
        e = DioEquation::sum_product(static_cast<int>(as_int(tok[1])), static_cast<int>(as_int(tok[3])));
    } else {
        std::vector<i64> c;
        std::vector<int> ex;
        for (auto& t : tok) {
            auto caret = t.find('^');
            if (caret == std::string::npos) {
                c.push_back(as_int(t));
                ex.push_back(1);
            } else {
                c.push_back(as_int(t.substr(0, caret)));
                ex.push_back(static_cast<int>(as_int(t.substr(caret + 1))));
            }
        }
        e = DioEquation::power(c, ex);
        if (c == std::vector<i64>{1, 1, -1} && ex == std::vector<int>{1, 1, 2}) e.exclude_constant = true;
    }
    e.distinct_required = distinct;
    return e;
}

namespace detail {

inline i64 ipow_sat(i64 b, int e, i64 cap) {
    __int128 r = 1;
    for (int i = 0; i < e; ++i) {
        r *= b;
        if (r > cap) return cap + 1;
    }
    return static_cast<i64>(r);
}

/// Largest x ≥ 0 with x^e ≤ v.
inline i64 iroot(i64 v, int e) {
    if (v <= 0) return 0;
    i64 x = static_cast<i64>(std::pow(static_cast<long double>(v), 1.0L / e));
    while (x > 0 && ipow_sat(x, e, v) > v) --x;
    while (ipow_sat(x + 1, e, v) <= v) ++x;
    return x;
}

}  // namespace detail

/// Calls fn(tuple) for every solution in [1, N]^arity that passes
/// `admissible`, in lexicographic order of the enumerated coordinates.
/// One exponent-1 coordinate is solved for, the rest are enumerated within
/// magnitude bounds. Returns false if fn asked to stop.
template <class Fn>
bool for_each_solution(const DioEquation& eq, i64 N, Fn&& fn) {
    int k = eq.arity();
    std::vector<i64> x(static_cast<std::size_t>(k), 1);
    if (eq.product_block) {
        auto [m, n] = *eq.product_block;
        // enumerate y's with product ≤ m·N, then x_1..x_{m-1}, solve x_m
        i64 cap = static_cast<i64>(m) * N;
        std::function<bool(int, i64)> ys;
        std::function<bool(int, i64)> xs = [&](int i, i64 rest) -> bool {
            if (i == m - 1) {
                if (rest < 1 || rest > N) return true;
                x[i] = rest;
                if (!eq.admissible(x)) return true;
                return fn(std::span<const i64>(x));
            }
            for (i64 v = 1; v <= N && v <= rest - (m - 1 - i); ++v) {
                x[i] = v;
                if (!xs(i + 1, rest - v)) return false;
            }
            return true;
        };
        ys = [&](int j, i64 prod) -> bool {
            if (j == n) {
                if (prod < m) return true;
                return xs(0, prod);
            }
            for (i64 v = 1; v <= N && prod * v <= cap; ++v) {
                x[m + j] = v;
                if (!ys(j + 1, prod * v)) return false;
            }
            return true;
        };
        return ys(0, 1);
    }
    // magnitude bounds: a positive term cannot exceed the largest possible
    // negative side and vice versa
    const i64 big = std::numeric_limits<i64>::max() / 4;
    __int128 pos = 0, neg = 0;
    for (int i = 0; i < k; ++i) {
        __int128 t = static_cast<__int128>(std::abs(eq.coef[i])) * detail::ipow_sat(N, eq.exps[i], big);
        (eq.coef[i] > 0 ? pos : neg) += t;
    }
    std::vector<i64> bound(k);
    for (int i = 0; i < k; ++i) {
        __int128 other = eq.coef[i] > 0 ? neg : pos;
        __int128 lim = other / std::abs(eq.coef[i]);
        i64 l = lim > big ? big : static_cast<i64>(lim);
        bound[i] = std::min(N, detail::iroot(l, eq.exps[i]));
    }
    int solve = -1;
    for (int i = 0; i < k; ++i)
        if (eq.exps[i] == 1 && (solve < 0 || bound[i] >= bound[solve])) solve = i;
    std::vector<int> order;
    for (int i = 0; i < k; ++i)
        if (i != solve) order.push_back(i);
    std::function<bool(std::size_t, __int128)> rec = [&](std::size_t d, __int128 acc) -> bool {
        if (d == order.size()) {
            if (solve < 0) {
                if (acc != 0) return true;
            } else {
                __int128 c = eq.coef[solve];
                if ((-acc) % c != 0) return true;
                __int128 v = -acc / c;
                if (v < 1 || v > N) return true;
                x[solve] = static_cast<i64>(v);
            }
            if (!eq.admissible(x)) return true;
            return fn(std::span<const i64>(x));
        }
        int i = order[d];
        for (i64 v = 1; v <= bound[i]; ++v) {
            x[i] = v;
            __int128 t = eq.coef[i];
            for (int e = 0; e < eq.exps[i]; ++e) t *= v;
            if (!rec(d + 1, acc + t)) return false;
        }
        return true;
    };
    return rec(0, 0);
}

inline std::vector<std::vector<i64>> all_solutions(const DioEquation& eq, i64 N, std::size_t limit = SIZE_MAX) {
    std::vector<std::vector<i64>> out;
    for_each_solution(eq, N, [&](std::span<const i64> x) {
        out.emplace_back(x.begin(), x.end());
        return out.size() < limit;
    });
    return out;
}

}  // namespace rw
