#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "stabcomb/canonical.hpp"
#include "stabcomb/enumerate.hpp"
#include "stabcomb/halfedge_graph.hpp"

namespace stabcomb {

/// Report of the tree-degree bound: a simply connected graph with all
/// valences >= 3 and excess i = sum (n(v) - 3), subject to the two leg
/// conditions, has at most 13i/2 external edges.  The intermediate counting
/// inequalities are part of the multi-vertex argument and are reported
/// alongside.
struct TreeBoundReport {
    bool preconditions_ok = false;
    std::string failed_precondition;
    int external_count = 0;
    int excess = 0;       // sum (n(v) - 3)
    int m30 = 0;          // trivalent vertices with no external edge
    int m31 = 0;          // trivalent vertices with one external edge
    int s = 0;            // vertices of valence > 3
    bool single_vertex = false;
    bool m30_le_s_minus_2 = false;      // vacuous for single-vertex trees
    bool m31_counting_ok = false;       // 2*m31 <= 3*m30 + 3*s + i
    bool external_le_13i_over_2 = false;
    bool ok = false;
};

inline TreeBoundReport check_tree_bound(const HalfEdgeGraph& t, int i) {
    TreeBoundReport r;
    r.excess = i;
    if (!t.is_connected() || t.betti_1() != 0) {
        r.failed_precondition = "graph is not simply connected";
        return r;
    }
    const int nv = t.num_vertices();
    int excess = 0;
    for (int v = 0; v < nv; ++v) {
        if (t.valence(v) < 3) {
            r.failed_precondition = "vertex of valence < 3";
            return r;
        }
        excess += t.valence(v) - 3;
    }
    if (excess != i) {
        r.failed_precondition = "excess does not match i";
        return r;
    }
    std::vector<int> ext(nv, 0);
    for (int h : t.external_half_edges()) ext[t.vertex_of(h)]++;
    for (int v = 0; v < nv; ++v)
        if (t.valence(v) == 3 && ext[v] >= 2) {
            r.failed_precondition = "trivalent vertex with two external edges";
            return r;
        }
    for (auto [a, b] : t.internal_edges()) {
        int u = t.vertex_of(a), v = t.vertex_of(b);
        if (u != v && t.valence(u) == 3 && t.valence(v) == 3 && ext[u] >= 1 && ext[v] >= 1) {
            r.failed_precondition = "adjacent trivalent vertices both with an external edge";
            return r;
        }
    }
    r.preconditions_ok = true;
    r.external_count = t.num_external_edges();
    r.single_vertex = nv == 1;
    for (int v = 0; v < nv; ++v) {
        if (t.valence(v) > 3)
            r.s++;
        else if (ext[v] == 0)
            r.m30++;
        else
            r.m31++;
    }
    // m30 <= s - 2 belongs to the counting argument for trees with more than
    // one vertex; a single qualifying vertex is bounded directly.
    r.m30_le_s_minus_2 = r.single_vertex || r.m30 <= r.s - 2;
    r.m31_counting_ok = 2 * r.m31 <= 3 * r.m30 + 3 * r.s + i;
    r.external_le_13i_over_2 = 2 * r.external_count <= 13 * i;
    r.ok = r.m30_le_s_minus_2 && r.m31_counting_ok && r.external_le_13i_over_2;
    return r;
}

/// Isomorphism classes of trees on nv unlabeled vertices (simple edges; a
/// multi-edge or loop would close a cycle), grown by leaf attachment.
inline std::vector<HalfEdgeGraph> enumerate_unlabeled_trees(int nv) {
    std::vector<HalfEdgeGraph> layer;
    {
        GraphBuilder b;
        b.add_vertex();
        layer.push_back(b.build());
    }
    for (int size = 2; size <= nv; ++size) {
        std::set<std::string> seen;
        std::vector<HalfEdgeGraph> next;
        for (const auto& t : layer) {
            for (int v = 0; v < t.num_vertices(); ++v) {
                GraphBuilder b;
                for (int u = 0; u < size; ++u) b.add_vertex();
                for (auto [a, bb] : t.internal_edges())
                    b.add_edge(t.vertex_of(a), t.vertex_of(bb));
                b.add_edge(v, size - 1);
                auto grown = b.build();
                if (seen.insert(canonical_form(grown)).second) next.push_back(std::move(grown));
            }
        }
        layer = std::move(next);
    }
    return layer;
}

/// All trees with valences >= 3 and excess exactly i, with anonymous legs,
/// one representative per isomorphism class, over all vertex counts up to
/// max_vertices.
inline std::vector<HalfEdgeGraph> enumerate_excess_trees(int i, int max_vertices) {
    std::vector<HalfEdgeGraph> out;
    std::set<std::string> seen;
    for (int nv = 1; nv <= max_vertices; ++nv) {
        for (const auto& t : enumerate_unlabeled_trees(nv)) {
            // legs(v) >= max(0, 3 - deg(v)); excess budget i on top
            std::vector<int> deg(nv, 0);
            for (auto [a, b] : t.internal_edges()) {
                deg[t.vertex_of(a)]++;
                deg[t.vertex_of(b)]++;
            }
            std::vector<int> base(nv), legs(nv);
            int base_total = 0;
            for (int v = 0; v < nv; ++v) {
                base[v] = std::max(0, 3 - deg[v]);
                base_total += base[v];
            }
            (void)base_total;
            std::function<void(int, int)> distribute = [&](int v, int budget) {
                if (v == nv) {
                    if (budget != 0) return;
                    GraphBuilder b;
                    for (int u = 0; u < nv; ++u) b.add_vertex();
                    for (auto [a, bb] : t.internal_edges())
                        b.add_edge(t.vertex_of(a), t.vertex_of(bb));
                    for (int u = 0; u < nv; ++u)
                        for (int k = 0; k < legs[u]; ++k) b.add_leg(u);
                    auto g = b.build();
                    if (seen.insert(canonical_form(g)).second) out.push_back(std::move(g));
                    return;
                }
                for (int extra = 0; extra <= budget; ++extra) {
                    legs[v] = base[v] + extra;
                    distribute(v + 1, budget - extra);
                }
                legs[v] = 0;
            };
            distribute(0, i);
        }
    }
    return out;
}

struct TreeSweepResult {
    long long trees_examined = 0;
    long long qualifying = 0;
    int max_qualifying_vertices = 0;
    std::vector<TreeBoundReport> violations;  // expected empty
};

/// Sweeps every tree with excess i (vertex counts up to max_vertices) and
/// verifies the degree bound on all qualifying ones.
inline TreeSweepResult tree_bound_sweep(int i, int max_vertices) {
    TreeSweepResult res;
    for (const auto& t : enumerate_excess_trees(i, max_vertices)) {
        res.trees_examined++;
        auto rep = check_tree_bound(t, i);
        if (!rep.preconditions_ok) continue;
        res.qualifying++;
        res.max_qualifying_vertices = std::max(res.max_qualifying_vertices, t.num_vertices());
        if (!rep.ok) res.violations.push_back(rep);
    }
    return res;
}

}  // namespace stabcomb
