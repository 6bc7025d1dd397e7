#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "stabcomb/canonical.hpp"
#include "stabcomb/contraction.hpp"
#include "stabcomb/exact_linalg.hpp"
#include "stabcomb/halfedge_graph.hpp"

namespace stabcomb {

/// Independence complex of the graphic matroid on the internal edges of a
/// connected graph: faces are the forests (acyclic edge subsets), including
/// the empty face.  Loops belong to no face.  Pure of dimension
/// |E| - betti_1 - 1.
struct IndependenceComplex {
    int ground_size = 0;
    int betti = 0;                       // betti_1 of the underlying graph
    std::vector<std::vector<int>> faces_by_dim;  // bitmasks, index = dim + 1
    // faces_by_dim[0] = {0} is the empty face at dimension -1

    int dimension() const { return static_cast<int>(faces_by_dim.size()) - 2; }

    long long face_count() const {
        long long c = 0;
        for (const auto& f : faces_by_dim) c += static_cast<long long>(f.size());
        return c;
    }
};

inline IndependenceComplex independence_complex(const HalfEdgeGraph& g) {
    if (!g.is_connected())
        throw std::invalid_argument("independence_complex expects a connected graph");
    auto edges = g.internal_edges();
    const int ne = static_cast<int>(edges.size());
    if (ne > 30) throw std::invalid_argument("independence_complex: too many edges");
    IndependenceComplex c;
    c.ground_size = ne;
    c.betti = g.betti_1();
    c.faces_by_dim.assign(1, {0});
    // grow forests one edge at a time; a subset is a forest iff adding each
    // edge in index order never closes a cycle
    std::vector<int> parent(g.num_vertices());
    std::function<void(int, std::vector<int>&, int)> grow =
        [&](int from, std::vector<int>& uf, int mask) {
            for (int e = from; e < ne; ++e) {
                auto find = [&](int x) {
                    while (uf[x] != x) x = uf[x] = uf[uf[x]];
                    return x;
                };
                int u = find(g.vertex_of(edges[e].first));
                int v = find(g.vertex_of(edges[e].second));
                if (u == v) continue;  // loop or cycle-closing edge
                auto uf2 = uf;
                uf2[u] = v;
                int mask2 = mask | (1 << e);
                int dim = __builtin_popcount(static_cast<unsigned>(mask2)) - 1;
                if (static_cast<int>(c.faces_by_dim.size()) <= dim + 1)
                    c.faces_by_dim.resize(dim + 2);
                c.faces_by_dim[dim + 1].push_back(mask2);
                grow(e + 1, uf2, mask2);
            }
        };
    for (int v = 0; v < g.num_vertices(); ++v) parent[v] = v;
    grow(0, parent, 0);
    for (auto& fs : c.faces_by_dim) std::sort(fs.begin(), fs.end());
    return c;
}

/// Reduced rational homology ranks by boundary-matrix ranks in exact integer
/// arithmetic (augmented complex: the empty face sits in degree -1).
struct HomologyRanks {
    std::map<int, long long> rank;  // degree -> rank, zero entries omitted
    int top_degree = 0;             // |E| - betti - 1
    long long top_rank = 0;

    long long at(int degree) const {
        auto it = rank.find(degree);
        return it == rank.end() ? 0 : it->second;
    }
};

inline HomologyRanks homology_ranks(const IndependenceComplex& c) {
    const int top = static_cast<int>(c.faces_by_dim.size()) - 2;  // max dim
    // boundary_rank[k] = rank of d_k : C_k -> C_{k-1}, k from 0 to top
    std::vector<int> boundary_rank(top + 2, 0);
    std::vector<std::map<int, int>> index_of(top + 2);
    for (int k = -1; k <= top; ++k) {
        const auto& fs = c.faces_by_dim[k + 1];
        for (size_t i = 0; i < fs.size(); ++i) index_of[k + 1][fs[i]] = static_cast<int>(i);
    }
    for (int k = 0; k <= top; ++k) {
        const auto& fs = c.faces_by_dim[k + 1];
        const auto& lower = c.faces_by_dim[k];
        if (fs.empty() || lower.empty()) continue;
        std::vector<std::vector<BigInt>> mat(fs.size(), std::vector<BigInt>(lower.size(), 0));
        for (size_t i = 0; i < fs.size(); ++i) {
            int mask = fs[i];
            int sign = 1, seen = 0;
            for (int e = 0; e < c.ground_size; ++e) {
                if (!(mask >> e & 1)) continue;
                int sub = mask & ~(1 << e);
                mat[i][index_of[k][sub]] = (seen % 2 == 0) ? sign : -sign;
                ++seen;
            }
        }
        boundary_rank[k + 1] = integer_matrix_rank(std::move(mat));
    }
    HomologyRanks h;
    h.top_degree = c.ground_size - c.betti - 1;
    for (int k = -1; k <= top; ++k) {
        long long dim_k = static_cast<long long>(c.faces_by_dim[k + 1].size());
        long long r = dim_k - boundary_rank[k + 1] -
                      (k + 2 < static_cast<int>(boundary_rank.size()) ? boundary_rank[k + 2] : 0);
        if (r != 0) h.rank[k] = r;
    }
    h.top_rank = h.at(h.top_degree);
    return h;
}

/// Tutte polynomial evaluated at (0, 1) by deletion-contraction with
/// certificate-memoized subproblems.  A bridge forces the value 0 (factor x);
/// loops contribute a factor y = 1.
inline long long tutte_01(const HalfEdgeGraph& g,
                          std::map<std::string, long long>* memo = nullptr) {
    if (!g.is_connected()) throw std::invalid_argument("tutte_01 expects a connected graph");
    if (g.num_external_edges() > 0) {
        // only the internal edges carry matroid structure
        GraphBuilder b;
        for (int v = 0; v < g.num_vertices(); ++v) b.add_vertex();
        for (auto e : g.internal_edges()) b.add_edge(g.vertex_of(e.first), g.vertex_of(e.second));
        return tutte_01(b.build(), memo);
    }
    std::map<std::string, long long> local;
    if (!memo) memo = &local;
    std::function<long long(const HalfEdgeGraph&)> eval =
        [&](const HalfEdgeGraph& graph) -> long long {
        auto edges = graph.internal_edges();
        if (edges.empty()) return 1;
        auto cert = canonical_form(graph);
        auto it = memo->find(cert);
        if (it != memo->end()) return it->second;

        // find an edge that is neither a loop nor a bridge
        long long value = -1;
        bool found_ordinary = false;
        for (auto e : edges) {
            if (graph.vertex_of(e.first) == graph.vertex_of(e.second)) continue;  // loop
            auto [del, w] = contract_edges(graph, {e});
            (void)w;
            // deletion: drop the pair entirely
            std::vector<std::pair<int, int>> keep;
            for (auto f : edges)
                if (f != e) keep.push_back(f);
            GraphBuilder b;
            for (int v = 0; v < graph.num_vertices(); ++v) b.add_vertex();
            for (auto f : keep) b.add_edge(graph.vertex_of(f.first), graph.vertex_of(f.second));
            auto deleted = b.build();
            if (!deleted.is_connected()) continue;  // e was a bridge
            found_ordinary = true;
            value = eval(deleted) + eval(del);
            break;
        }
        if (!found_ordinary) {
            // only loops and bridges remain: value is x^bridges * y^loops at (0,1)
            bool has_bridge = false;
            for (auto e : edges)
                if (graph.vertex_of(e.first) != graph.vertex_of(e.second)) has_bridge = true;
            value = has_bridge ? 0 : 1;
        }
        memo->emplace(std::move(cert), value);
        return value;
    };
    return eval(g);
}

/// Top-degree reduced homology rank of the independence complex; agrees with
/// tutte_01 on graphic matroids.
inline long long i_invariant(const HalfEdgeGraph& g) {
    return homology_ranks(independence_complex(g)).top_rank;
}

}  // namespace stabcomb
