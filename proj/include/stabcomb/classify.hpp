#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "stabcomb/decorated.hpp"
#include "stabcomb/halfedge_graph.hpp"

namespace stabcomb {

enum class HalfEdgeTag { Free, Bound, PlainAdjacent };

/// Path semantics for the freeness test of an internal half-edge at a
/// decorated vertex v.  WalkInterior treats paths as walks through interior
/// vertices: an edge from the far component back to v reaches a half-edge at
/// v without crossing v itself, so it binds.  ComponentOnly ignores such
/// return edges and looks only for decorated vertices in the far component.
enum class FreeEdgeSemantics { WalkInterior, ComponentOnly };

struct HalfEdgeClassification {
    std::vector<HalfEdgeTag> tag;                  // per half-edge
    std::vector<int> free_count;                   // F(v) per vertex
    std::vector<std::vector<int>> bound_classes;   // partition of bound half-edges
    std::vector<int> class_of;                     // bound half-edge -> class, else -1

    int total_free() const {
        int c = 0;
        for (auto t : tag)
            if (t == HalfEdgeTag::Free) ++c;
        return c;
    }

    int total_bound() const {
        int c = 0;
        for (auto t : tag)
            if (t == HalfEdgeTag::Bound) ++c;
        return c;
    }
};

/// Tags every half-edge as free, bound or plain-adjacent, and computes the
/// equivalence classes of bound half-edges joined by paths avoiding
/// decorated interior vertices.
inline HalfEdgeClassification classify_half_edges(
    const DecoratedGraph& d, FreeEdgeSemantics semantics = FreeEdgeSemantics::WalkInterior) {
    const auto& g = d.graph;
    const int m = g.num_half_edges();
    const int nv = g.num_vertices();
    HalfEdgeClassification out;
    out.tag.assign(m, HalfEdgeTag::Free);
    out.free_count.assign(nv, 0);
    out.class_of.assign(m, -1);

    std::vector<bool> decorated(nv);
    for (int v = 0; v < nv; ++v) decorated[v] = !d.is_undecorated(v);

    // adjacency over vertices for component searches
    std::vector<std::vector<int>> adj(nv);
    for (auto [a, b] : g.internal_edges()) {
        int u = g.vertex_of(a), v = g.vertex_of(b);
        if (u != v) {
            adj[u].push_back(v);
            adj[v].push_back(u);
        }
    }

    for (int h = 0; h < m; ++h) {
        int v = g.vertex_of(h);
        if (d.is_plain(v)) {
            out.tag[h] = HalfEdgeTag::PlainAdjacent;
            continue;
        }
        if (!decorated[v]) {
            out.tag[h] = HalfEdgeTag::Free;  // undecorated non-plain vertex
            continue;
        }
        if (g.is_external(h)) {
            out.tag[h] = HalfEdgeTag::Free;  // leaves only through v
            continue;
        }
        int w = g.vertex_of(g.sigma(h));
        if (w == v) {
            out.tag[h] = HalfEdgeTag::Bound;  // its partner sits at decorated v
            continue;
        }
        // component of the graph minus v that contains w
        std::vector<bool> seen(nv, false);
        std::vector<int> stack{w};
        seen[w] = true;
        bool has_decorated = false;
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            if (decorated[x]) has_decorated = true;
            for (int y : adj[x])
                if (y != v && !seen[y]) {
                    seen[y] = true;
                    stack.push_back(y);
                }
        }
        bool returns_to_v = false;
        if (semantics == FreeEdgeSemantics::WalkInterior) {
            int edges_into_component = 0;
            for (auto [a, b] : g.internal_edges()) {
                int x = g.vertex_of(a), y = g.vertex_of(b);
                if (x == v && y != v && seen[y]) ++edges_into_component;
                if (y == v && x != v && seen[x]) ++edges_into_component;
            }
            returns_to_v = edges_into_component > 1;  // one of them carries h itself
        }
        out.tag[h] = (has_decorated || returns_to_v) ? HalfEdgeTag::Bound : HalfEdgeTag::Free;
    }

    for (int h = 0; h < m; ++h)
        if (out.tag[h] == HalfEdgeTag::Free) out.free_count[g.vertex_of(h)]++;

    // Equivalence on bound half-edges: connected components of the graph with
    // decorated vertices deleted, bound half-edges kept as pendant points.
    // Node ids: 0..nv-1 for vertices (only undecorated ones used), nv + h for
    // the pendant of half-edge h at a decorated vertex.
    std::vector<int> parent(nv + m);
    for (int i = 0; i < nv + m; ++i) parent[i] = i;
    std::function<int(int)> find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    auto unite = [&](int a, int b) { parent[find(a)] = find(b); };
    auto node = [&](int h) {
        int v = g.vertex_of(h);
        return decorated[v] ? nv + h : v;
    };
    for (auto [a, b] : g.internal_edges()) unite(node(a), node(b));

    std::map<int, int> class_index;
    for (int h = 0; h < m; ++h) {
        if (out.tag[h] != HalfEdgeTag::Bound) continue;
        int root = find(node(h));
        auto it = class_index.find(root);
        if (it == class_index.end()) {
            it = class_index.emplace(root, static_cast<int>(out.bound_classes.size())).first;
            out.bound_classes.emplace_back();
        }
        out.class_of[h] = it->second;
        out.bound_classes[it->second].push_back(h);
    }
    return out;
}

inline int count_free(const DecoratedGraph& d,
                      FreeEdgeSemantics semantics = FreeEdgeSemantics::WalkInterior) {
    return classify_half_edges(d, semantics).total_free();
}

/// True when the stratum of d contributes nothing below degree i: the number
/// of free half-edges exceeds i.
inline bool vanishing_predicate(const DecoratedGraph& d, int i,
                                FreeEdgeSemantics semantics = FreeEdgeSemantics::WalkInterior) {
    return count_free(d, semantics) > i;
}

/// The bipartite contraction graph: one vertex per decorated vertex of d,
/// one per equivalence class of bound half-edges, and one edge per bound
/// half-edge joining its class to its vertex.
inline HalfEdgeGraph bipartite_contraction_graph(
    const DecoratedGraph& d, FreeEdgeSemantics semantics = FreeEdgeSemantics::WalkInterior) {
    auto cls = classify_half_edges(d, semantics);
    if (cls.total_bound() == 0)
        throw std::invalid_argument("bipartite_contraction_graph: no bound half-edges");
    GraphBuilder b;
    std::map<int, int> dec_vertex;
    for (int v = 0; v < d.graph.num_vertices(); ++v)
        if (!d.is_undecorated(v)) dec_vertex[v] = b.add_vertex();
    std::vector<int> class_vertex(cls.bound_classes.size());
    for (size_t c = 0; c < cls.bound_classes.size(); ++c) class_vertex[c] = b.add_vertex();
    for (int h = 0; h < d.graph.num_half_edges(); ++h)
        if (cls.tag[h] == HalfEdgeTag::Bound)
            b.add_edge(dec_vertex.at(d.graph.vertex_of(h)), class_vertex[cls.class_of[h]]);
    return b.build();
}

struct BoundHalfEdgeReport {
    int bound_half_edges = 0;
    long long limit = 0;  // 2g - 2 + 2(L.alpha)
    int chi_bipartite = 0;
    bool ok = false;
};

/// Counts bound half-edges and checks them against 2g - 2 + 2(L.alpha),
/// together with chi(G') >= 1 - g for the bipartite contraction graph.
inline BoundHalfEdgeReport bound_halfedge_bound(
    const DecoratedGraph& d, FreeEdgeSemantics semantics = FreeEdgeSemantics::WalkInterior) {
    auto cls = classify_half_edges(d, semantics);
    if (cls.total_bound() == 0)
        throw std::invalid_argument("bound_halfedge_bound: no bound half-edges");
    auto gp = bipartite_contraction_graph(d, semantics);
    BoundHalfEdgeReport r;
    r.bound_half_edges = cls.total_bound();
    long long g = d.ambient_genus();
    r.limit = 2 * g - 2 + 2 * d.monoid.degree_of(d.ambient_class());
    r.chi_bipartite = gp.num_vertices() - gp.num_internal_edges();
    r.ok = r.bound_half_edges <= r.limit && r.chi_bipartite >= 1 - g;
    return r;
}

/// Plain-vertex bound for a saturated graph whose free count is at most i:
/// #plain <= max(i + 2g + 2(L.alpha), 1).
inline bool check_plain_bound(const DecoratedGraph& d, int i) {
    long long g = d.ambient_genus();
    long long limit =
        std::max<long long>(i + 2 * g + 2 * d.monoid.degree_of(d.ambient_class()), 1);
    return d.num_plain_vertices() <= limit;
}

}  // namespace stabcomb
