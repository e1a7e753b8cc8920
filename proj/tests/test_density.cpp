#include "rw/density.hpp"

#include <gtest/gtest.h>

using namespace rw;

namespace {

IntSet random_set(std::mt19937_64& rng, i64 lo, i64 hi, int pct) {
    std::vector<i64> m;
    for (i64 x = lo; x <= hi; ++x)
        if (static_cast<int>(rng() % 100) < pct) m.push_back(x);
    return IntSet(Interval(lo, hi), m);
}

// direct scan of every interval of length n
std::pair<Rational, Interval> brute_block(const IntSet& a, i64 n, Interval s) {
    Rational best(-1);
    Interval w;
    for (i64 lo = s.lo; lo + n - 1 <= s.hi; ++lo) {
        i64 c = 0;
        for (i64 x = lo; x < lo + n; ++x) c += a.contains(x);
        if (Rational(c, n) > best) best = Rational(c, n), w = Interval(lo, lo + n - 1);
    }
    return {best, w};
}

}  // namespace

TEST(PrefixDensities, ShnirelmanZeroWithoutOne) {
    auto a = IntSet(Interval(1, 50), {2, 3, 4, 10, 11, 50});
    EXPECT_EQ(prefix_densities(a, 50).shnirelman, Rational(0));
}

TEST(PrefixDensities, FullInterval) {
    auto r = prefix_densities(IntSet::range(1, 77), 77);
    EXPECT_EQ(r.upper, Rational(1));
    EXPECT_EQ(r.lower, Rational(1));
    EXPECT_EQ(r.shnirelman, Rational(1));
}

TEST(PrefixDensities, OddsAgainstScan) {
    auto odds = gen::periodic(2, {1}, Interval(1, 1000));
    auto r = prefix_densities(odds, 1000);
    Rational mn(1), mx(0), tail(1);
    for (i64 n = 1; n <= 1000; ++n) {
        Rational d(odds.count_in(1, n), n);
        mn = std::min(mn, d), mx = std::max(mx, d);
        if (n >= 500) tail = std::min(tail, d);
    }
    EXPECT_EQ(r.shnirelman, Rational(1, 2));
    EXPECT_EQ(r.shnirelman, mn);
    EXPECT_EQ(r.upper, mx);
    EXPECT_EQ(r.lower, tail);
}

TEST(PrefixDensities, RejectsOutOfRange) {
    EXPECT_THROW(prefix_densities(IntSet::of({0, 3}), 10), InputError);
    EXPECT_THROW(prefix_densities(IntSet::of({3, 11}), 10), InputError);
}

TEST(PrefixDensities, ProvableChainParts) {
    std::mt19937_64 rng(2);
    for (int it = 0; it < 40; ++it) {
        auto a = random_set(rng, 1, 500, 10 + it);
        auto r = prefix_densities(a, 500);
        EXPECT_LE(r.shnirelman, r.lower);
        EXPECT_LE(r.lower, r.upper);
        // every prefix density is bounded by the block maximum at that length
        for (i64 n : {7, 50, 333}) EXPECT_LE(Rational(a.count_in(1, n), n), block_max(a, n, Interval(1, 500)).value);
    }
}

TEST(BlockMax, Examples) {
    auto evens = gen::periodic(2, {0}, Interval(1, 100));
    EXPECT_EQ(block_max(evens, 4, Interval(1, 100)).value, Rational(1, 2));
    auto run = IntSet(Interval(1, 100), {10, 11, 12, 13, 14, 15, 16, 17, 18, 19});
    auto b = block_max(run, 5, Interval(1, 100));
    EXPECT_EQ(b.value, Rational(1));
    EXPECT_EQ(b.witness, Interval(10, 14));
    auto sq = gen::squares(Interval(1, 100));
    auto s = block_max(sq, 10, Interval(1, 100));
    auto [bv, bw] = brute_block(sq, 10, Interval(1, 100));
    EXPECT_EQ(s.value, Rational(3, 10));
    EXPECT_EQ(s.witness, Interval(1, 10));
    EXPECT_EQ(s.value, bv);
    EXPECT_EQ(s.witness, bw);
    EXPECT_THROW(block_max(sq, 101, Interval(1, 100)), InputError);
}

TEST(BlockMax, RandomAgainstScanAnyThreadCount) {
    std::mt19937_64 rng(8);
    for (int it = 0; it < 15; ++it) {
        auto a = random_set(rng, 1, 3000, 5 + it * 3);
        for (i64 n : {1, 13, 400}) {
            auto [bv, bw] = brute_block(a, n, Interval(1, 3000));
            for (int th : {1, 4}) {
                set_thread_count(th);
                auto b = block_max(a, n, Interval(1, 3000));
                EXPECT_EQ(b.value, bv);
                EXPECT_EQ(b.witness, bw);
            }
            set_thread_count(0);
        }
    }
}

TEST(BanachEstimate, Examples) {
    auto m3 = gen::periodic(3, {0}, Interval(1, 3000));
    auto r = banach_estimate(m3, {10, 100, 1000});
    EXPECT_LE(boost::abs(r.banach_estimate - Rational(1, 3)), Rational(1, 100));
    EXPECT_EQ(banach_estimate(IntSet::empty(Interval(1, 100)), {5, 50}).banach_estimate, Rational(0));
    auto odds = gen::periodic(2, {1}, Interval(1, 999));
    for (i64 n : {2, 10, 64}) EXPECT_EQ(banach_estimate(odds, {n}).banach_estimate, Rational(1, 2));
}

TEST(Fekete, SubadditiveAndHalving) {
    std::mt19937_64 rng(21);
    for (int it = 0; it < 10; ++it) {
        auto a = random_set(rng, 1, 2000, 20 + it * 5);
        Interval w(1, 2000);
        for (int p = 0; p < 40; ++p) {
            i64 m = 1 + static_cast<i64>(rng() % 999), n = 1 + static_cast<i64>(rng() % 999);
            EXPECT_LE(max_count(a, m + n, w), max_count(a, m, w) + max_count(a, n, w));
            EXPECT_LE(block_max(a, 2 * n, w).value, block_max(a, n, w).value);
        }
    }
}

TEST(BanachEstimate, UnionSubadditive) {
    std::mt19937_64 rng(4);
    for (int it = 0; it < 20; ++it) {
        auto a = random_set(rng, 1, 1000, 15), b = random_set(rng, 1, 1000, 10);
        for (i64 n : {10, 100}) {
            auto ea = banach_estimate(a, {n}).banach_estimate, eb = banach_estimate(b, {n}).banach_estimate;
            EXPECT_LE(banach_estimate(set_union(a, b), {n}).banach_estimate, ea + eb);
        }
    }
}

TEST(BanachEstimate, FatteningMonotone) {
    auto a = gen::periodic(7, {2}, Interval(1, 700));
    Rational prev(0);
    for (i64 k = 0; k <= 4; ++k) {
        auto fat = sumset(a, IntSet::range(0, 2 * k)).restricted(Interval(1, 700));
        auto e = banach_estimate(fat, {49, 140}).banach_estimate;
        EXPECT_GE(e, prev);
        prev = e;
        if (2 * k >= 7) EXPECT_EQ(e, Rational(1));
    }
}

TEST(Mann, Examples) {
    std::vector<i64> m{0};
    for (i64 x = 2; x <= 200; x += 2) m.push_back(x);
    auto a = IntSet(Interval(0, 200), m);
    auto v = mann_check(a, a, 200, MannVariant::mann);
    EXPECT_TRUE(v.pass);
    EXPECT_FALSE(v.empirical);

    auto full = IntSet::range(0, 50);
    auto f = mann_check(full, full, 50, MannVariant::mann);
    EXPECT_TRUE(f.pass);
    EXPECT_EQ(f.rhs, Rational(1));
    EXPECT_EQ(f.lhs, Rational(1));

    EXPECT_THROW(mann_check(IntSet::of({1, 2}), full, 50, MannVariant::mann), InputError);

    std::vector<i64> q{0};
    for (i64 x = 4; x <= 400; x += 4) q.push_back(x);
    auto a4 = IntSet(Interval(0, 400), q);
    auto bm = mann_check(a4, a4, 400, MannVariant::banach_mann);
    EXPECT_TRUE(bm.empirical);
    EXPECT_GE(bm.lhs, Rational(1, 2));
    EXPECT_TRUE(bm.pass);
}

TEST(Mann, RandomPairsHoldExactly) {
    std::mt19937_64 rng(99);
    for (int it = 0; it < 30; ++it) {
        auto a = set_union(random_set(rng, 0, 600, 5 + it), IntSet::of({0}));
        auto b = set_union(random_set(rng, 0, 600, 3 + it), IntSet::of({0}));
        EXPECT_TRUE(mann_check(a, b, 600, MannVariant::mann).pass);
    }
}
