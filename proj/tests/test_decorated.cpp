#include <catch2/catch_amalgamated.hpp>

#include "oracles.hpp"
#include "stabcomb/decorated.hpp"
#include "stabcomb/enumerate.hpp"

using namespace stabcomb;

namespace {

DecoratedGraph single_vertex(int g, ClassVector a, int legs, CurveClassMonoid m = {}) {
    GraphBuilder b;
    int v = b.add_vertex();
    for (int i = 1; i <= legs; ++i) b.add_leg(v, i);
    return DecoratedGraph(b.build(), {g}, {std::move(a)}, std::move(m));
}

}  // namespace

TEST_CASE("stability conditions") {
    CHECK(is_stable(single_vertex(0, {0}, 3)));
    CHECK_FALSE(is_stable(single_vertex(0, {0}, 2)));
    CHECK(is_stable(single_vertex(1, {0}, 1)));
    CHECK_FALSE(is_stable(single_vertex(1, {0}, 0)));
    CHECK(is_stable(single_vertex(0, {1}, 0)));  // decorated vertex: no valence condition
    CHECK(is_stable(single_vertex(2, {0}, 0)));
}

TEST_CASE("invariant I values and monotonicity under contraction") {
    auto plain4 = single_vertex(0, {0}, 4);
    CHECK(invariant_I(plain4) == std::array<long long, 3>{0, 0, 0});

    // loop contraction strictly increases I (total genus grows)
    GraphBuilder b;
    int v = b.add_vertex();
    auto loop = b.add_loop_edge(v);
    for (int i = 1; i <= 3; ++i) b.add_leg(v, i);
    DecoratedGraph d(b.build(), {0}, {{0}});
    auto [q, w] = contract_decorated(d, {loop});
    CHECK(q.genus[0] == 1);
    CHECK(invariant_I(d) < invariant_I(q));

    // plain-to-non-plain contraction with plain valence m: third coordinate
    // grows by m - 2
    GraphBuilder c;
    int p = c.add_vertex(), np = c.add_vertex();
    auto e = c.add_edge(p, np);
    c.add_leg(p, 1);
    c.add_leg(p, 2);
    c.add_leg(np, 3);
    DecoratedGraph d2(c.build(), {0, 1}, {{0}, {0}});
    int m = d2.graph.valence(0);
    auto I_before = invariant_I(d2);
    auto [q2, w2] = contract_decorated(d2, {e});
    auto I_after = invariant_I(q2);
    CHECK(I_after[0] == I_before[0]);
    CHECK(I_after[1] == I_before[1]);
    CHECK(I_after[2] == I_before[2] + m - 2);
}

TEST_CASE("decorated contraction adds cycle rank of the contracted subgraph") {
    // contracting all three edges of a triangle merges it into one vertex of
    // genus 1
    GraphBuilder b;
    int x = b.add_vertex(), y = b.add_vertex(), z = b.add_vertex();
    auto e1 = b.add_edge(x, y);
    auto e2 = b.add_edge(y, z);
    auto e3 = b.add_edge(z, x);
    for (int i = 1; i <= 3; ++i) b.add_leg(x, i);
    b.add_leg(y, 4);
    b.add_leg(z, 5);
    DecoratedGraph d(b.build(), {0, 0, 0}, {{0}, {0}, {0}});
    CHECK(d.ambient_genus() == 1);
    auto [q, w] = contract_decorated(d, {e1, e2, e3});
    CHECK(q.graph.num_vertices() == 1);
    CHECK(q.genus[0] == 1);
    CHECK(q.ambient_genus() == 1);
}

TEST_CASE("saturation contracts plain forests and is idempotent") {
    // two adjacent plain vertices, each with 2 legs, one connecting edge
    GraphBuilder b;
    int u = b.add_vertex(), v = b.add_vertex();
    b.add_edge(u, v);
    b.add_leg(u, 1);
    b.add_leg(u, 2);
    b.add_leg(v, 3);
    b.add_leg(v, 4);
    DecoratedGraph d(b.build(), {0, 0}, {{0}, {0}});
    auto s = saturate(d);
    CHECK(s.graph.num_vertices() == 1);
    CHECK(s.num_markings() == 4);
    CHECK(is_saturated(s));
    CHECK(saturate(s).certificate() == s.certificate());

    // already saturated input comes back isomorphic
    auto t = single_vertex(1, {0}, 2);
    CHECK(saturate(t).certificate() == t.certificate());
}

TEST_CASE("saturation does not depend on the spanning forest") {
    // A plain 4-cycle with legs: all spanning forests of the plain subgraph
    // must give the same result.  Contract every maximal forest by hand.
    GraphBuilder b;
    std::vector<int> vs;
    for (int i = 0; i < 4; ++i) vs.push_back(b.add_vertex());
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < 4; ++i) es.push_back(b.add_edge(vs[i], vs[(i + 1) % 4]));
    for (int i = 0; i < 4; ++i) {
        b.add_leg(vs[i], 2 * i + 1);
        b.add_leg(vs[i], 2 * i + 2);
    }
    DecoratedGraph d(b.build(), {0, 0, 0, 0}, {{0}, {0}, {0}, {0}});
    auto base = saturate(d).certificate();
    // every 3-subset of the 4 cycle edges is a spanning tree
    for (int skip = 0; skip < 4; ++skip) {
        std::vector<std::pair<int, int>> forest;
        for (int i = 0; i < 4; ++i)
            if (i != skip) forest.push_back(es[i]);
        auto q = contract_decorated(d, forest).first;
        CHECK(q.certificate() == base);
    }
    CHECK(saturate(d).graph.num_vertices() == 1);
    CHECK(saturate(d).genus[0] == 0);  // the non-forest edge survives as a loop
    CHECK(saturate(d).graph.betti_1() == 1);
}

TEST_CASE("enumeration of small stable families") {
    CHECK(enumerate_stab(0, 3, {0}).size() == 1);
    CHECK(enumerate_stab(0, 4, {0}).size() == 4);
    CHECK(enumerate_stab(1, 1, {0}).size() == 2);
    CHECK(enumerate_stab(0, 0, {0}).empty());
    CHECK(enumerate_stab(1, 0, {0}).empty());
}

TEST_CASE("enumeration matches the naive labelled-structure generator") {
    CurveClassMonoid m;
    for (int h = 0; h <= 1; ++h)
        for (int n = 0; n <= 4; ++n)
            for (int bdeg = 0; bdeg <= 1; ++bdeg) {
                ClassVector beta{bdeg};
                auto fast = enumerate_stab(h, n, beta, m);
                auto naive = oracle::naive_stab_count(h, n, beta, m);
                INFO("h=" << h << " n=" << n << " beta=" << bdeg);
                CHECK(static_cast<long long>(fast.size()) == naive);
            }
}

TEST_CASE("enumerated graphs satisfy the Euler-characteristic pruning bound") {
    for (const auto& d : enumerate_stab(1, 3, {1})) {
        CHECK(is_stable(d));
        CHECK(d.ambient_genus() == 1);
        int chi = d.graph.num_vertices() - d.graph.num_internal_edges();
        CHECK(chi >= 1 - 1);
        for (int v = 0; v < d.graph.num_vertices(); ++v)
            if (d.is_plain(v) && d.graph.external_degree(v) == 0)
                CHECK(d.graph.valence(v) >= 3);
    }
}

TEST_CASE("resource guard aborts loudly") {
    EnumerationLimits tight;
    tight.max_candidates = 3;
    CHECK_THROWS_AS(enumerate_stab(1, 4, {1}, {}, tight), EnumerationOverflow);
}
