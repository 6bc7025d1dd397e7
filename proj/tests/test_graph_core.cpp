#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>

#include "oracles.hpp"
#include "stabcomb/canonical.hpp"
#include "stabcomb/contraction.hpp"
#include "stabcomb/halfedge_graph.hpp"
#include "stabcomb/json_io.hpp"

using namespace stabcomb;

namespace {

HalfEdgeGraph theta() {
    GraphBuilder b;
    int u = b.add_vertex(), v = b.add_vertex();
    b.add_edge(u, v);
    b.add_edge(u, v);
    b.add_edge(u, v);
    return b.build();
}

HalfEdgeGraph loop_graph() {
    GraphBuilder b;
    int v = b.add_vertex();
    b.add_loop_edge(v);
    return b.build();
}

}  // namespace

TEST_CASE("half-edge graph basics and betti numbers") {
    GraphBuilder b;
    int v = b.add_vertex();
    b.add_leg(v, 1);
    auto g = b.build();
    CHECK(g.betti_1() == 0);
    CHECK(g.num_external_edges() == 1);
    CHECK(g.valence(v) == 1);

    CHECK(loop_graph().betti_1() == 1);
    CHECK(theta().betti_1() == 2);

    // Betti via brute-force spanning-tree rank: for theta, rank of the cycle
    // space is |E| - (|V| - 1).
    CHECK(theta().num_internal_edges() - (theta().num_vertices() - 1) == 2);
}

TEST_CASE("validation rejects malformed data") {
    CHECK_THROWS(HalfEdgeGraph(1, {1, 0, 2}, {0, 0, 0}, {{0, 1}}));  // label on internal
    CHECK_THROWS(HalfEdgeGraph(1, {1, 2, 0}, {0, 0, 0}));            // not an involution
    CHECK_THROWS(HalfEdgeGraph(1, {0, 1}, {0, 1}));                  // vertex out of range
    CHECK_THROWS(HalfEdgeGraph(1, {0, 1}, {0, 0}, {{0, 1}, {1, 1}}));  // duplicate label
}

TEST_CASE("contraction of a single edge merges vertices") {
    GraphBuilder b;
    int u = b.add_vertex(), v = b.add_vertex();
    auto e = b.add_edge(u, v);
    b.add_leg(u, 1);
    b.add_leg(v, 2);
    auto g = b.build();
    auto [q, w] = contract_edges(g, {e});
    w.validate();
    CHECK(q.num_vertices() == 1);
    CHECK(q.num_half_edges() == 2);
    CHECK(q.betti_1() == 0);
}

TEST_CASE("contracting the empty set is the identity up to renumbering") {
    auto g = theta();
    auto [q, w] = contract_edges(g, {});
    w.validate();
    CHECK(canonical_form(q) == canonical_form(g));
    CHECK(q.num_vertices() == g.num_vertices());
}

TEST_CASE("triangle contracted along two edges becomes a loop") {
    GraphBuilder b;
    int x = b.add_vertex(), y = b.add_vertex(), z = b.add_vertex();
    auto e1 = b.add_edge(x, y);
    auto e2 = b.add_edge(y, z);
    b.add_edge(z, x);
    auto g = b.build();
    CHECK(g.betti_1() == 1);
    auto [q, w] = contract_edges(g, {e1, e2});
    w.validate();
    CHECK(q.num_vertices() == 1);
    CHECK(q.num_internal_edges() == 1);
    CHECK(q.betti_1() == 1);
    CHECK(canonical_form(q) == canonical_form(loop_graph()));
}

TEST_CASE("contraction rejects external edges") {
    GraphBuilder b;
    int v = b.add_vertex();
    int leg = b.add_leg(v, 1);
    b.add_loop_edge(v);
    auto g = b.build();
    CHECK_THROWS(contract_edges(g, {{leg, leg}}));
}

TEST_CASE("non-loop contraction preserves betti_1, loop contraction drops it") {
    // Exhaustive over connected graphs encoded by hand.
    std::vector<HalfEdgeGraph> graphs{theta(), loop_graph()};
    {
        GraphBuilder b;
        int u = b.add_vertex(), v = b.add_vertex();
        b.add_edge(u, v);
        b.add_loop_edge(u);
        b.add_loop_edge(v);
        graphs.push_back(b.build());
    }
    for (const auto& g : graphs) {
        for (auto e : g.internal_edges()) {
            auto [q, w] = contract_edges(g, {e});
            w.validate();
            bool loop = g.vertex_of(e.first) == g.vertex_of(e.second);
            if (loop) {
                CHECK(q.num_vertices() == g.num_vertices());
                CHECK(q.betti_1() == g.betti_1() - 1);
            } else {
                CHECK(q.num_vertices() == g.num_vertices() - 1);
                CHECK(q.betti_1() == g.betti_1());
            }
        }
    }
}

TEST_CASE("contracting S then T equals contracting S union T") {
    GraphBuilder b;
    int x = b.add_vertex(), y = b.add_vertex(), z = b.add_vertex();
    auto e1 = b.add_edge(x, y);
    auto e2 = b.add_edge(y, z);
    auto e3 = b.add_edge(z, x);
    b.add_leg(x, 1);
    auto g = b.build();

    auto [q1, w1] = contract_edges(g, {e1});
    // e2 in q1 carries new ids: find them through iota.
    std::vector<int> inv(g.num_half_edges(), -1);
    for (int h = 0; h < q1.num_half_edges(); ++h) inv[w1.iota[h]] = h;
    auto [q2, w2] = contract_edges(q1, {{inv[e2.first], inv[e2.second]}});
    auto [q12, w12] = contract_edges(g, {e1, e2});
    CHECK(canonical_form(q2) == canonical_form(q12));
    (void)e3;
}

TEST_CASE("canonical form is isomorphism-invariant and separating") {
    auto g = theta();
    std::mt19937 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<int> hp(g.num_half_edges()), vp(g.num_vertices());
        std::iota(hp.begin(), hp.end(), 0);
        std::iota(vp.begin(), vp.end(), 0);
        std::shuffle(hp.begin(), hp.end(), rng);
        std::shuffle(vp.begin(), vp.end(), rng);
        auto h = oracle::permuted_copy(g, hp, vp);
        CHECK(canonical_form(h) == canonical_form(g));
    }
    // path of 2 vertices vs loop on 1 vertex
    GraphBuilder b;
    int u = b.add_vertex(), v = b.add_vertex();
    b.add_edge(u, v);
    auto path = b.build();
    CHECK(canonical_form(path) != canonical_form(loop_graph()));
}

TEST_CASE("canonical form distinguishes colorings and labels") {
    GraphBuilder b;
    int u = b.add_vertex(), v = b.add_vertex();
    b.add_edge(u, v);
    auto g = b.build();
    CHECK(canonical_form(g, {"a", "b"}) != canonical_form(g, {"a", "a"}));
    CHECK(canonical_form(g, {"a", "b"}) == canonical_form(g, {"b", "a"}));

    GraphBuilder c1, c2;
    int w1 = c1.add_vertex();
    c1.add_leg(w1, 1);
    c1.add_leg(w1, 2);
    c1.add_loop_edge(w1);
    int w2 = c2.add_vertex();
    c2.add_leg(w2, 1);
    c2.add_leg(w2, 3);
    c2.add_loop_edge(w2);
    CHECK(canonical_form(c1.build()) != canonical_form(c2.build()));
    CanonicalOptions anon;
    anon.ignore_external_labels = true;
    CHECK(canonical_form(c1.build(), {}, anon) == canonical_form(c2.build(), {}, anon));
}

namespace {

/// All connected multigraphs with the given number of edges and no legs,
/// generated naively over symmetric multiplicity matrices.
std::vector<HalfEdgeGraph> naive_connected_multigraphs(int edges) {
    std::vector<HalfEdgeGraph> out;
    for (int nv = 1; nv <= edges + 1; ++nv) {
        std::vector<std::pair<int, int>> cells;
        for (int i = 0; i < nv; ++i)
            for (int j = i; j < nv; ++j) cells.emplace_back(i, j);
        std::vector<int> mult(cells.size(), 0);
        std::function<void(int, int)> rec = [&](int idx, int remaining) {
            if (idx == static_cast<int>(cells.size())) {
                if (remaining != 0) return;
                GraphBuilder b;
                for (int i = 0; i < nv; ++i) b.add_vertex();
                for (size_t c = 0; c < cells.size(); ++c)
                    for (int k = 0; k < mult[c]; ++k) b.add_edge(cells[c].first, cells[c].second);
                auto g = b.build();
                if (g.is_connected()) out.push_back(std::move(g));
                return;
            }
            for (int k = 0; k <= remaining; ++k) {
                mult[idx] = k;
                rec(idx + 1, remaining - k);
            }
            mult[idx] = 0;
        };
        rec(0, edges);
    }
    return out;
}

}  // namespace

TEST_CASE("certificate equality matches brute-force bijection search") {
    // All connected multigraphs with exactly 4 edges; classes by certificate
    // must match classes by direct bijection search.
    auto graphs = naive_connected_multigraphs(4);
    std::vector<std::string> certs;
    certs.reserve(graphs.size());
    for (const auto& g : graphs) certs.push_back(canonical_form(g));
    for (size_t i = 0; i < graphs.size(); ++i)
        for (size_t j = i + 1; j < graphs.size(); ++j) {
            bool oracle_iso = oracle::brute_force_isomorphic(graphs[i], graphs[j]);
            CHECK((certs[i] == certs[j]) == oracle_iso);
        }
}

TEST_CASE("automorphism groups") {
    // asymmetric labeled tree -> identity only
    GraphBuilder b;
    int u = b.add_vertex(), v = b.add_vertex();
    b.add_edge(u, v);
    b.add_leg(u, 1);
    b.add_leg(v, 2);
    b.add_leg(v, 3);
    auto t = b.build();
    auto auts = automorphisms(t);
    REQUIRE(auts.size() == 1);
    CHECK(automorphism_order(t) == 1);

    CHECK(automorphism_order(theta()) == 12);
    CHECK(automorphisms(theta()).size() == 12);
    CHECK(automorphism_order(loop_graph()) == 2);
    CHECK(automorphisms(loop_graph()).size() == 2);

    // Group axioms: closed under composition and inverse, contains identity.
    auto group = automorphisms(theta());
    std::set<std::vector<int>> gs(group.begin(), group.end());
    std::vector<int> id(theta().num_half_edges());
    std::iota(id.begin(), id.end(), 0);
    CHECK(gs.count(id) == 1);
    for (const auto& p : group) {
        std::vector<int> inv(p.size());
        for (size_t i = 0; i < p.size(); ++i) inv[p[i]] = static_cast<int>(i);
        CHECK(gs.count(inv) == 1);
    }
    for (size_t i = 0; i < group.size(); i += 5)
        for (size_t j = 0; j < group.size(); j += 3) {
            std::vector<int> comp(group[i].size());
            for (size_t k = 0; k < comp.size(); ++k) comp[k] = group[i][group[j][k]];
            CHECK(gs.count(comp) == 1);
        }
}

TEST_CASE("automorphisms preserve structure") {
    auto g = theta();
    for (const auto& p : automorphisms(g)) {
        for (int h = 0; h < g.num_half_edges(); ++h) {
            CHECK(g.sigma(p[h]) == p[g.sigma(h)]);
        }
    }
}

TEST_CASE("json round trip is the identity on certificates") {
    GraphBuilder b;
    int u = b.add_vertex(), v = b.add_vertex();
    b.add_edge(u, v);
    b.add_loop_edge(v);
    b.add_leg(u, 1);
    b.add_leg(u, 2);
    auto g = b.build();
    auto j = graph_to_json(g);
    auto g2 = graph_from_json(j);
    CHECK(canonical_form(g2) == canonical_form(g));
    CHECK(graph_to_json(g2) == j);

    auto dot = graph_to_dot(g);
    CHECK(dot.find("v0 -- v1") != std::string::npos);
}
