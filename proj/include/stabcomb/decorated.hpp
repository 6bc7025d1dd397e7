#pragma once

#include <algorithm>
#include <array>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "stabcomb/canonical.hpp"
#include "stabcomb/contraction.hpp"
#include "stabcomb/halfedge_graph.hpp"
#include "stabcomb/monoid.hpp"

namespace stabcomb {

/// Connected graph with genus and curve-class labels per vertex.  The ambient
/// genus is h1(G) + sum g(v), the ambient class is sum alpha(v).
struct DecoratedGraph {
    HalfEdgeGraph graph;
    std::vector<int> genus;          // per vertex
    std::vector<ClassVector> alpha;  // per vertex
    CurveClassMonoid monoid;

    DecoratedGraph() = default;
    DecoratedGraph(HalfEdgeGraph g, std::vector<int> gen, std::vector<ClassVector> al,
                   CurveClassMonoid m = {})
        : graph(std::move(g)), genus(std::move(gen)), alpha(std::move(al)), monoid(std::move(m)) {
        validate();
    }

    void validate() const {
        const int nv = graph.num_vertices();
        if (static_cast<int>(genus.size()) != nv || static_cast<int>(alpha.size()) != nv)
            throw std::invalid_argument("decoration arrays must match vertex count");
        for (int v = 0; v < nv; ++v) {
            if (genus[v] < 0) throw std::invalid_argument("negative genus label");
            if (!monoid.is_effective(alpha[v]))
                throw std::invalid_argument("vertex class is not effective");
        }
        if (!graph.is_connected())
            throw std::invalid_argument("decorated graph must be connected");
    }

    int ambient_genus() const {
        int g = graph.betti_1();
        for (int x : genus) g += x;
        return g;
    }

    ClassVector ambient_class() const {
        ClassVector b = monoid.zero();
        for (const auto& a : alpha) b = monoid.add(b, a);
        return b;
    }

    int num_markings() const { return graph.num_external_edges(); }

    bool is_undecorated(int v) const { return monoid.is_zero(alpha[v]); }
    bool is_plain(int v) const { return genus[v] == 0 && is_undecorated(v); }

    int num_plain_vertices() const {
        int c = 0;
        for (int v = 0; v < graph.num_vertices(); ++v)
            if (is_plain(v)) ++c;
        return c;
    }

    /// Decoration key used as the vertex coloring in canonical forms.
    std::vector<std::string> colors() const {
        std::vector<std::string> c(graph.num_vertices());
        for (int v = 0; v < graph.num_vertices(); ++v) {
            std::ostringstream s;
            s << "g=" << genus[v] << ";a=" << CurveClassMonoid::to_string(alpha[v]);
            c[v] = s.str();
        }
        return c;
    }

    std::string certificate(const CanonicalOptions& opt = {}) const {
        return canonical_form(graph, colors(), opt);
    }
};

/// Stability: every plain vertex has valence >= 3 and every undecorated
/// genus-1 vertex has valence >= 1 (classes are effective by construction).
inline bool is_stable(const DecoratedGraph& d) {
    for (int v = 0; v < d.graph.num_vertices(); ++v) {
        if (!d.monoid.is_effective(d.alpha[v])) return false;
        if (!d.is_undecorated(v)) continue;
        int val = d.graph.valence(v);
        if (d.genus[v] == 0 && val < 3) return false;
        if (d.genus[v] == 1 && val < 1) return false;
    }
    return true;
}

/// Lexicographic invariant monotone under single-edge contraction:
/// (total genus, -(number of non-plain vertices), total valence of non-plain
/// vertices).  Constant exactly for contractions of edges joining two
/// distinct plain vertices.
inline std::array<long long, 3> invariant_I(const DecoratedGraph& d) {
    long long total_genus = 0, non_plain = 0, non_plain_valence = 0;
    for (int v = 0; v < d.graph.num_vertices(); ++v) {
        total_genus += d.genus[v];
        if (!d.is_plain(v)) {
            ++non_plain;
            non_plain_valence += d.graph.valence(v);
        }
    }
    return {total_genus, -non_plain, non_plain_valence};
}

/// Quotient of a decorated graph by a set of internal edges.  Merged vertices
/// add their genus and class labels; each independent cycle collapsed inside
/// a merge class adds one to the genus of the image vertex (a contracted loop
/// is the basic case).
inline std::pair<DecoratedGraph, Contraction> contract_decorated(
    const DecoratedGraph& d, const std::vector<std::pair<int, int>>& edges) {
    auto [q, w] = contract_edges(d.graph, edges);
    const int nv = q.num_vertices();
    std::vector<int> genus(nv, 0);
    std::vector<ClassVector> alpha(nv, d.monoid.zero());
    std::vector<int> class_vertices(nv, 0), class_edges(nv, 0);
    for (int v = 0; v < d.graph.num_vertices(); ++v) {
        int t = w.vertex_map[v];
        genus[t] += d.genus[v];
        alpha[t] = d.monoid.add(alpha[t], d.alpha[v]);
        class_vertices[t] += 1;
    }
    for (auto [a, b] : edges) class_edges[w.vertex_map[d.graph.vertex_of(a)]] += 1;
    for (int t = 0; t < nv; ++t) genus[t] += class_edges[t] - class_vertices[t] + 1;
    DecoratedGraph out(std::move(q), std::move(genus), std::move(alpha), d.monoid);
    return {std::move(out), std::move(w)};
}

/// Saturation: contract a spanning forest of the subgraph induced on plain
/// vertices.  The result has no two adjacent plain vertices and does not
/// depend on the forest, up to isomorphism.
inline DecoratedGraph saturate(const DecoratedGraph& d) {
    std::vector<int> parent(d.graph.num_vertices());
    for (int v = 0; v < d.graph.num_vertices(); ++v) parent[v] = v;
    std::function<int(int)> find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    std::vector<std::pair<int, int>> forest;
    for (auto e : d.graph.internal_edges()) {
        int u = d.graph.vertex_of(e.first), v = d.graph.vertex_of(e.second);
        if (u == v || !d.is_plain(u) || !d.is_plain(v)) continue;
        int ru = find(u), rv = find(v);
        if (ru == rv) continue;
        parent[std::max(ru, rv)] = std::min(ru, rv);
        forest.push_back(e);
    }
    return contract_decorated(d, forest).first;
}

inline bool is_saturated(const DecoratedGraph& d) {
    for (auto e : d.graph.internal_edges()) {
        int u = d.graph.vertex_of(e.first), v = d.graph.vertex_of(e.second);
        if (u != v && d.is_plain(u) && d.is_plain(v)) return false;
    }
    return true;
}

}  // namespace stabcomb
