#include "rw/graphreg.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace rw;

namespace {

SimpleGraph complete(int n) {
    SimpleGraph g(n);
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v) g.add_edge(u, v);
    return g;
}

SimpleGraph random_graph(std::mt19937_64& rng, int n, double p) {
    SimpleGraph g(n);
    std::bernoulli_distribution coin(p);
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v)
            if (coin(rng)) g.add_edge(u, v);
    return g;
}

i64 brute_triangles(const SimpleGraph& g) {
    i64 c = 0;
    for (int u = 1; u <= g.n(); ++u)
        for (int v = u + 1; v <= g.n(); ++v)
            for (int w = v + 1; w <= g.n(); ++w)
                if (g.has_edge(u, v) && g.has_edge(v, w) && g.has_edge(u, w)) ++c;
    return c;
}

bool has_3ap(const IntSet& a) {
    for (i64 x : a.members())
        for (i64 y : a.members())
            if (y > x && a.contains(2 * y - x)) return true;
    return false;
}

// max |d(A,B) - d(X,Y)| over every admissible pair of subsets
Rational brute_worst(const SimpleGraph& g, const std::vector<int>& X, const std::vector<int>& Y, Rational eps) {
    i64 E = 0, D = 0;
    for (int x : X)
        for (int y : Y) E += g.has_edge(x, y), D += x != y;
    Rational d(E, D), worst(-1);
    for (u64 ma = 1; ma < (u64{1} << X.size()); ++ma) {
        i64 sa = std::popcount(ma);
        if (Rational(sa) < eps * static_cast<i64>(X.size())) continue;
        for (u64 mb = 1; mb < (u64{1} << Y.size()); ++mb) {
            i64 sb = std::popcount(mb);
            if (Rational(sb) < eps * static_cast<i64>(Y.size())) continue;
            i64 e = 0, slots = 0;
            for (std::size_t i = 0; i < X.size(); ++i)
                if (ma >> i & 1)
                    for (std::size_t j = 0; j < Y.size(); ++j)
                        if (mb >> j & 1) e += g.has_edge(X[i], Y[j]), slots += X[i] != Y[j];
            if (slots == 0) continue;
            Rational dev = Rational(e, slots) - d;
            if (dev < 0) dev = -dev;
            worst = std::max(worst, dev);
        }
    }
    return worst;
}

std::vector<int> range_vec(int lo, int hi) {
    std::vector<int> v;
    for (int i = lo; i <= hi; ++i) v.push_back(i);
    return v;
}

}  // namespace

TEST(GraphStats, Examples) {
    auto k3 = graph_stats(complete(3));
    EXPECT_EQ(k3.e, Rational(6, 9));
    EXPECT_EQ(k3.t, Rational(6, 27));
    EXPECT_EQ(k3.triangles, 1);

    auto empty = graph_stats(SimpleGraph(5));
    EXPECT_EQ(empty.e, 0);
    EXPECT_EQ(empty.t, 0);
    EXPECT_EQ(empty.triangles, 0);

    SimpleGraph c5(5);
    for (int i = 1; i <= 5; ++i) c5.add_edge(i, i % 5 + 1);
    auto s = graph_stats(c5);
    EXPECT_EQ(s.e, Rational(10, 25));
    EXPECT_EQ(s.t, 0);
    EXPECT_THROW(c5.add_edge(2, 2), InputError);
    EXPECT_THROW(c5.add_edge(0, 2), InputError);
}

TEST(GraphStats, TrianglesMatchBruteForce) {
    std::mt19937_64 rng(21);
    for (int t = 0; t < 40; ++t) {
        int n = 3 + static_cast<int>(rng() % 80);
        auto g = random_graph(rng, n, 0.05 + 0.9 * static_cast<double>(rng() % 100) / 100);
        i64 b = brute_triangles(g);
        EXPECT_EQ(triangle_count(g), b);
        EXPECT_EQ(list_triangles(g).size(), static_cast<std::size_t>(b));
        EXPECT_EQ(graph_stats(g).t == 0, list_triangles(g).empty());
    }
}

TEST(GraphIO, RoundTrip) {
    std::mt19937_64 rng(22);
    auto g = random_graph(rng, 30, 0.3);
    std::stringstream ss;
    write_graph(ss, g);
    EXPECT_EQ(read_graph(ss), g);
    std::stringstream bad1("3\n1 2 3\n"), bad2("3\n1 4\n"), bad3("# nothing\n"), ok("# c\n3\n\n1 2 # edge\n");
    EXPECT_THROW(read_graph(bad1), InputError);
    EXPECT_THROW(read_graph(bad2), InputError);
    EXPECT_THROW(read_graph(bad3), InputError);
    EXPECT_EQ(read_graph(ok).edge_count(), 1);
}

TEST(RothGraph, Examples) {
    auto none = roth_graph(IntSet::empty(Interval(1, 5)), 5);
    EXPECT_EQ(none.g.edge_count(), 0);
    EXPECT_EQ(none.g.n(), 45);

    auto one = roth_graph(IntSet::of({1}), 2);
    ASSERT_EQ(one.trivial.size(), 4u);
    for (int k = 1; k <= 4; ++k) {
        auto t = one.trivial[k - 1];
        EXPECT_EQ(t[0], one.vertex(1, k));
        EXPECT_EQ(t[1], one.vertex(2, k + 1));
        EXPECT_EQ(t[2], one.vertex(3, k + 2));
    }
    EXPECT_EQ(one.nontrivial, 0);

    auto three = roth_graph(IntSet::of({1, 2, 3}), 3);
    EXPECT_GT(three.nontrivial, 0);
    auto nt = roth_nontrivial(three);
    ASSERT_FALSE(nt.empty());
    auto p = roth_progression(three, nt[0]);
    std::array<i64, 3> sorted = p;
    std::sort(sorted.begin(), sorted.end());
    EXPECT_EQ(sorted, (std::array<i64, 3>{1, 2, 3}));
    EXPECT_THROW(roth_graph(IntSet::of({5}), 4), InputError);
}

TEST(RothGraph, CodingSoundness) {
    std::mt19937_64 rng(23);
    for (int t = 0; t < 40; ++t) {
        i64 n = 5 + static_cast<i64>(rng() % 26);
        std::vector<i64> m;
        for (i64 x = 1; x <= n; ++x)
            if (rng() % 4 == 0) m.push_back(x);
        IntSet a(Interval(1, n), m);
        auto r = roth_graph(a, n);
        EXPECT_EQ(r.nontrivial > 0, has_3ap(a));
        EXPECT_GE(static_cast<i64>(r.trivial.size()), static_cast<i64>(m.size()) * n);
        // triangle count from the arithmetic directly: v1, a, b with (a+b)/2 ∈ A
        i64 direct = 0;
        for (i64 v = 1; v <= 3 * n; ++v)
            for (i64 x : m)
                for (i64 y : m)
                    if ((x + y) % 2 == 0 && a.contains((x + y) / 2) && v + x + y <= 3 * n) ++direct;
        EXPECT_EQ(r.triangles, direct);
        for (const auto& tri : roth_nontrivial(r, 50)) {
            auto [x, c, y] = roth_progression(r, tri);
            EXPECT_TRUE(a.contains(x) && a.contains(c) && a.contains(y));
            EXPECT_EQ(x - c, c - y);
            EXPECT_NE(x, y);
        }
    }
}

TEST(TriangleRemoval, Examples) {
    SimpleGraph c5(5);
    for (int i = 1; i <= 5; ++i) c5.add_edge(i, i % 5 + 1);
    EXPECT_TRUE(triangle_removal(c5).removed.empty());
    auto k3 = triangle_removal(complete(3), RemovalStrategy::exhaustive);
    EXPECT_EQ(k3.removed.size(), 1u);
    EXPECT_TRUE(k3.triangle_free);
    EXPECT_EQ(triangle_removal(complete(3)).removed.size(), 1u);

    auto r = roth_graph(IntSet::of({1, 2, 4}), 4);
    auto rem = triangle_removal(r.g);
    EXPECT_TRUE(rem.triangle_free);
    EXPECT_GE(rem.removed.size(), r.trivial.size());
    EXPECT_THROW(triangle_removal(complete(13), RemovalStrategy::exhaustive), InputError);
}

TEST(TriangleRemoval, ExactIsMinimum) {
    std::mt19937_64 rng(24);
    for (int t = 0; t < 30; ++t) {
        int n = 4 + static_cast<int>(rng() % 4);
        auto g = random_graph(rng, n, 0.6);
        auto es = g.edges();
        std::size_t best = es.size();
        for (u64 mask = 0; mask < (u64{1} << es.size()); ++mask) {
            if (static_cast<std::size_t>(std::popcount(mask)) >= best) continue;
            SimpleGraph h = g;
            for (std::size_t i = 0; i < es.size(); ++i)
                if (mask >> i & 1) h.remove_edge(es[i].first, es[i].second);
            if (brute_triangles(h) == 0) best = std::popcount(mask);
        }
        auto ex = triangle_removal(g, RemovalStrategy::exhaustive);
        auto gr = triangle_removal(g);
        EXPECT_TRUE(ex.triangle_free);
        EXPECT_TRUE(gr.triangle_free);
        EXPECT_EQ(ex.removed.size(), best);
        EXPECT_GE(gr.removed.size(), best);
        EXPECT_EQ(ex.removed_density, Rational(2 * static_cast<i64>(best), n * n));
    }
}

TEST(Pseudorandom, Examples) {
    // complete bipartite between X and Y
    SimpleGraph kb(16);
    for (int x = 1; x <= 8; ++x)
        for (int y = 9; y <= 16; ++y) kb.add_edge(x, y);
    for (Rational e : {Rational(1, 10), Rational(1, 2)}) {
        EXPECT_TRUE(pseudorandom_check(kb, range_vec(1, 8), range_vec(9, 16), e, WitnessPolicy::exhaustive()).pass);
        EXPECT_TRUE(pseudorandom_check(kb, range_vec(1, 8), range_vec(9, 16), e).pass);
    }
    // half split: edges only from X1 = {1..4} to Y
    SimpleGraph hs(16);
    for (int x = 1; x <= 4; ++x)
        for (int y = 9; y <= 16; ++y) hs.add_edge(x, y);
    auto v = pseudorandom_check(hs, range_vec(1, 8), range_vec(9, 16), Rational(1, 4), WitnessPolicy::exhaustive());
    EXPECT_FALSE(v.pass);
    EXPECT_EQ(v.wa, range_vec(1, 4));
    EXPECT_EQ(v.wb, range_vec(9, 16));
    EXPECT_EQ(v.deviation, Rational(1, 2));
    auto vh = pseudorandom_check(hs, range_vec(1, 8), range_vec(9, 16), Rational(1, 4));
    EXPECT_FALSE(vh.pass);
    EXPECT_EQ(vh.deviation, Rational(1, 2));
    SimpleGraph big(20);
    EXPECT_THROW(pseudorandom_check(big, range_vec(1, 17), range_vec(1, 3), Rational(1, 4), WitnessPolicy::exhaustive()), InputError);
}

TEST(Pseudorandom, ExhaustiveMatchesBruteForce) {
    std::mt19937_64 rng(25);
    for (int t = 0; t < 60; ++t) {
        auto g = random_graph(rng, 14, 0.2 + 0.6 * static_cast<double>(rng() % 100) / 100);
        int xs = 2 + static_cast<int>(rng() % 7), ys = 2 + static_cast<int>(rng() % 7);
        std::vector<int> X, Y;
        std::vector<int> perm = range_vec(1, 14);
        std::shuffle(perm.begin(), perm.end(), rng);
        X.assign(perm.begin(), perm.begin() + xs);
        // Y may overlap X
        std::shuffle(perm.begin(), perm.end(), rng);
        Y.assign(perm.begin(), perm.begin() + ys);
        Rational eps(1 + static_cast<i64>(rng() % 5), 10);
        auto v = pseudorandom_check(g, X, Y, eps, WitnessPolicy::exhaustive());
        std::sort(X.begin(), X.end());
        std::sort(Y.begin(), Y.end());
        Rational w = brute_worst(g, X, Y, eps);
        EXPECT_EQ(v.pass, w < eps);
        EXPECT_TRUE(v.certified);
        if (!v.pass) {
            EXPECT_EQ(v.deviation, w);
            // recompute the reported witness
            i64 e = 0, slots = 0;
            for (int a : v.wa)
                for (int b : v.wb) e += g.has_edge(a, b), slots += a != b;
            EXPECT_EQ(Rational(e, slots), v.witness_density);
        }
    }
}

TEST(Pseudorandom, RandomBipartiteHeuristicPass) {
    std::mt19937_64 rng(26);
    SimpleGraph g(400);
    std::bernoulli_distribution coin(0.5);
    for (int x = 1; x <= 200; ++x)
        for (int y = 201; y <= 400; ++y)
            if (coin(rng)) g.add_edge(x, y);
    auto v = pseudorandom_check(g, range_vec(1, 200), range_vec(201, 400), Rational(1, 5), WitnessPolicy::heuristic(32, 7));
    EXPECT_TRUE(v.pass);
    EXPECT_TRUE(v.heuristic);
    EXPECT_FALSE(v.certified);
}

TEST(RegularPartition, Complete) {
    auto P = regular_partition(complete(40), Rational(1, 10));
    EXPECT_EQ(P.classes.size(), 1u);
    EXPECT_TRUE(P.satisfied);
    EXPECT_TRUE(P.certified);
    EXPECT_EQ(P.mass, 1);
}

TEST(RegularPartition, TwoCliques) {
    SimpleGraph g(200);
    for (int base : {0, 100})
        for (int u = 1; u <= 100; ++u)
            for (int v = u + 1; v <= 100; ++v) g.add_edge(base + u, base + v);
    auto P = regular_partition(g, Rational(1, 10));
    ASSERT_EQ(P.classes.size(), 2u);
    EXPECT_EQ(P.classes[0], range_vec(1, 100));
    EXPECT_EQ(P.classes[1], range_vec(101, 200));
    EXPECT_TRUE(P.satisfied);
    EXPECT_TRUE(P.certified);
    EXPECT_EQ(P.mass, 1);
    for (std::size_t i = 1; i < P.energy.size(); ++i) EXPECT_GE(P.energy[i], P.energy[i - 1] - 1e-12);
}

TEST(RegularPartition, RandomGraph) {
    std::mt19937_64 rng(27);
    auto g = random_graph(rng, 100, 0.5);
    auto P = regular_partition(g, Rational(1, 4), 64);
    EXPECT_LE(P.classes.size(), 64u);
    EXPECT_TRUE(P.satisfied);
    EXPECT_GT(P.mass, Rational(3, 4));
    for (std::size_t i = 1; i < P.energy.size(); ++i) EXPECT_GE(P.energy[i], P.energy[i - 1] - 1e-12);
    // the classes partition the vertex set
    std::vector<int> all;
    for (auto& c : P.classes) all.insert(all.end(), c.begin(), c.end());
    std::sort(all.begin(), all.end());
    EXPECT_EQ(all, range_vec(1, 100));
}

TEST(RegularPartition, RefinementRaisesEnergy) {
    // planted bipartition with a dense side: refinement must split it
    std::mt19937_64 rng(28);
    SimpleGraph g(120);
    std::bernoulli_distribution dense(0.9), sparse(0.1);
    for (int u = 1; u <= 120; ++u)
        for (int v = u + 1; v <= 120; ++v)
            if ((u <= 60) == (v <= 60) ? dense(rng) : sparse(rng)) g.add_edge(u, v);
    auto P = regular_partition(g, Rational(1, 5), 32);
    EXPECT_GE(P.classes.size(), 2u);
    EXPECT_GT(P.rounds, 0);
    for (std::size_t i = 1; i < P.energy.size(); ++i) EXPECT_GE(P.energy[i], P.energy[i - 1] - 1e-12);
    EXPECT_GT(P.energy.back(), P.energy.front());
}
