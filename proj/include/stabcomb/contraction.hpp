#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <vector>

#include "stabcomb/halfedge_graph.hpp"

namespace stabcomb {

/// Witness of a quotient map source -> target contracting a set of internal
/// edges.  iota embeds the target's half-edges into the source; vertex_map
/// sends each source vertex to its image.
struct Contraction {
    HalfEdgeGraph source;
    HalfEdgeGraph target;
    std::vector<int> iota;        // target half-edge -> source half-edge
    std::vector<int> vertex_map;  // source vertex -> target vertex

    void validate() const {
        if (static_cast<int>(iota.size()) != target.num_half_edges())
            throw std::invalid_argument("iota size mismatch");
        std::set<int> image;
        for (int h = 0; h < target.num_half_edges(); ++h) {
            int s = iota[h];
            if (s < 0 || s >= source.num_half_edges() || !image.insert(s).second)
                throw std::invalid_argument("iota is not an embedding");
            if (iota[target.sigma(h)] != source.sigma(s))
                throw std::invalid_argument("iota does not commute with the involutions");
            if (target.label_of(h) != source.label_of(s))
                throw std::invalid_argument("iota does not preserve labels");
        }
        // Bijection on fixed points.
        for (int s = 0; s < source.num_half_edges(); ++s)
            if (source.sigma(s) == s && !image.count(s))
                throw std::invalid_argument("external edge dropped by contraction");
        // The induced vertex map must be well defined w.r.t. iota...
        if (static_cast<int>(vertex_map.size()) != source.num_vertices())
            throw std::invalid_argument("vertex map size mismatch");
        for (int h = 0; h < target.num_half_edges(); ++h)
            if (vertex_map[source.vertex_of(iota[h])] != target.vertex_of(h))
                throw std::invalid_argument("vertex map inconsistent with iota");
        // ...surjective...
        std::set<int> hit(vertex_map.begin(), vertex_map.end());
        if (static_cast<int>(hit.size()) != target.num_vertices())
            throw std::invalid_argument("vertex map not surjective");
        // ...and contracted edges must join vertices with equal image.
        for (int s = 0; s < source.num_half_edges(); ++s) {
            if (source.sigma(s) == s || image.count(s)) continue;
            if (vertex_map[source.vertex_of(s)] != vertex_map[source.vertex_of(source.sigma(s))])
                throw std::invalid_argument("contracted edge joins vertices with distinct images");
        }
    }
};

/// Topological quotient by a set of internal edges: vertices merged along
/// non-loop edges, loop edges deleted, the contracted half-edges removed.
/// Surviving half-edges are renumbered densely in their original order; the
/// returned witness records the embedding.
inline std::pair<HalfEdgeGraph, Contraction> contract_edges(
    const HalfEdgeGraph& g, const std::vector<std::pair<int, int>>& edges) {
    const int m = g.num_half_edges();
    std::vector<bool> removed(m, false);
    for (auto [a, b] : edges) {
        if (a < 0 || a >= m || g.sigma(a) != b || a == b)
            throw std::invalid_argument("contract_edges: not an internal edge");
        removed[a] = removed[b] = true;
    }

    std::vector<int> parent(g.num_vertices());
    for (int v = 0; v < g.num_vertices(); ++v) parent[v] = v;
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (auto [a, b] : edges) {
        int ra = find(g.vertex_of(a)), rb = find(g.vertex_of(b));
        if (ra != rb) parent[std::max(ra, rb)] = std::min(ra, rb);
    }

    std::vector<int> new_vertex(g.num_vertices(), -1);
    int nv = 0;
    for (int v = 0; v < g.num_vertices(); ++v)
        if (find(v) == v) new_vertex[v] = nv++;
    for (int v = 0; v < g.num_vertices(); ++v) new_vertex[v] = new_vertex[find(v)];

    std::vector<int> new_id(m, -1), iota;
    for (int h = 0; h < m; ++h)
        if (!removed[h]) {
            new_id[h] = static_cast<int>(iota.size());
            iota.push_back(h);
        }
    std::vector<int> sigma(iota.size()), vtx(iota.size());
    std::map<int, int> labels;
    for (int h = 0; h < m; ++h) {
        if (removed[h]) continue;
        sigma[new_id[h]] = new_id[g.sigma(h)];
        vtx[new_id[h]] = new_vertex[g.vertex_of(h)];
        if (auto lab = g.label_of(h)) labels[new_id[h]] = *lab;
    }

    HalfEdgeGraph target(nv, std::move(sigma), std::move(vtx), std::move(labels));
    Contraction w{g, target, std::move(iota), std::move(new_vertex)};
    return {std::move(target), std::move(w)};
}

}  // namespace stabcomb
