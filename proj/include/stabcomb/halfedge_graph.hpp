#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace stabcomb {

/// Finite graph given by a set of half-edges {0..m-1}, an involution sigma,
/// and a partition of the half-edges into vertices.  A sigma-orbit of size
/// two is an internal edge; a fixed point is an external edge (a leg) and may
/// carry an integer marking label.  Vertices with no half-edges are allowed;
/// they matter once vertices carry decorations.
class HalfEdgeGraph {
public:
    HalfEdgeGraph() = default;

    HalfEdgeGraph(int num_vertices, std::vector<int> involution,
                  std::vector<int> vertex_of, std::map<int, int> labels = {})
        : num_vertices_(num_vertices),
          involution_(std::move(involution)),
          vertex_of_(std::move(vertex_of)),
          labels_(std::move(labels)) {
        validate();
    }

    /// Builds from explicit vertex blocks and a list of internal-edge pairs.
    /// Half-edge ids are the union of the blocks; every id not in a pair is a
    /// fixed point of sigma.
    static HalfEdgeGraph from_blocks(const std::vector<std::vector<int>>& blocks,
                                     const std::vector<std::pair<int, int>>& internal_pairs,
                                     const std::map<int, int>& labels = {}) {
        int m = 0;
        for (const auto& b : blocks)
            for (int h : b) m = std::max(m, h + 1);
        std::vector<int> sigma(m), vtx(m, -1);
        for (int h = 0; h < m; ++h) sigma[h] = h;
        for (auto [a, b] : internal_pairs) {
            sigma[a] = b;
            sigma[b] = a;
        }
        for (int v = 0; v < static_cast<int>(blocks.size()); ++v)
            for (int h : blocks[v]) vtx[h] = v;
        return HalfEdgeGraph(static_cast<int>(blocks.size()), std::move(sigma),
                             std::move(vtx), labels);
    }

    int num_half_edges() const { return static_cast<int>(involution_.size()); }
    int num_vertices() const { return num_vertices_; }
    int sigma(int h) const { return involution_.at(h); }
    int vertex_of(int h) const { return vertex_of_.at(h); }
    bool is_external(int h) const { return involution_[h] == h; }

    const std::map<int, int>& labels() const { return labels_; }

    std::optional<int> label_of(int h) const {
        auto it = labels_.find(h);
        if (it == labels_.end()) return std::nullopt;
        return it->second;
    }

    /// Vertex blocks, each sorted ascending; empty blocks kept.
    std::vector<std::vector<int>> blocks() const {
        std::vector<std::vector<int>> b(num_vertices_);
        for (int h = 0; h < num_half_edges(); ++h) b[vertex_of_[h]].push_back(h);
        return b;
    }

    /// Internal edges as pairs (a, b) with a < b, sorted.
    std::vector<std::pair<int, int>> internal_edges() const {
        std::vector<std::pair<int, int>> e;
        for (int h = 0; h < num_half_edges(); ++h)
            if (involution_[h] > h) e.emplace_back(h, involution_[h]);
        return e;
    }

    std::vector<int> external_half_edges() const {
        std::vector<int> e;
        for (int h = 0; h < num_half_edges(); ++h)
            if (involution_[h] == h) e.push_back(h);
        return e;
    }

    int num_internal_edges() const {
        int c = 0;
        for (int h = 0; h < num_half_edges(); ++h)
            if (involution_[h] > h) ++c;
        return c;
    }

    int num_external_edges() const {
        return num_half_edges() - 2 * num_internal_edges();
    }

    int valence(int v) const {
        int c = 0;
        for (int h = 0; h < num_half_edges(); ++h)
            if (vertex_of_[h] == v) ++c;
        return c;
    }

    int external_degree(int v) const {
        int c = 0;
        for (int h = 0; h < num_half_edges(); ++h)
            if (vertex_of_[h] == v && is_external(h)) ++c;
        return c;
    }

    int loops_at(int v) const {
        int c = 0;
        for (auto [a, b] : internal_edges())
            if (vertex_of_[a] == v && vertex_of_[b] == v) ++c;
        return c;
    }

    /// Symmetric multiplicity matrix; loops counted once on the diagonal.
    std::vector<std::vector<int>> multiplicity_matrix() const {
        std::vector<std::vector<int>> m(num_vertices_, std::vector<int>(num_vertices_, 0));
        for (auto [a, b] : internal_edges()) {
            int u = vertex_of_[a], v = vertex_of_[b];
            if (u == v)
                m[u][u] += 1;
            else {
                m[u][v] += 1;
                m[v][u] += 1;
            }
        }
        return m;
    }

    /// Component id per vertex (ids numbered by smallest member vertex).
    std::vector<int> component_ids() const {
        std::vector<int> parent(num_vertices_);
        for (int v = 0; v < num_vertices_; ++v) parent[v] = v;
        auto find = [&](int x) {
            while (parent[x] != x) x = parent[x] = parent[parent[x]];
            return x;
        };
        for (auto [a, b] : internal_edges()) {
            int ra = find(vertex_of_[a]), rb = find(vertex_of_[b]);
            if (ra != rb) parent[std::max(ra, rb)] = std::min(ra, rb);
        }
        std::vector<int> id(num_vertices_);
        std::map<int, int> remap;
        for (int v = 0; v < num_vertices_; ++v) {
            int r = find(v);
            auto it = remap.find(r);
            if (it == remap.end()) it = remap.emplace(r, static_cast<int>(remap.size())).first;
            id[v] = it->second;
        }
        return id;
    }

    int num_components() const {
        auto ids = component_ids();
        return ids.empty() ? 0 : 1 + *std::max_element(ids.begin(), ids.end());
    }

    bool is_connected() const { return num_vertices_ <= 1 || num_components() == 1; }

    /// First Betti number: |internal edges| - |V| + #components.
    int betti_1() const {
        return num_internal_edges() - num_vertices_ + num_components();
    }

    void validate() const {
        const int m = num_half_edges();
        if (static_cast<int>(vertex_of_.size()) != m)
            throw std::invalid_argument("vertex map size mismatch");
        if (num_vertices_ < 0) throw std::invalid_argument("negative vertex count");
        for (int h = 0; h < m; ++h) {
            int s = involution_[h];
            if (s < 0 || s >= m || involution_[s] != h)
                throw std::invalid_argument("involution is not an involution");
            if (vertex_of_[h] < 0 || vertex_of_[h] >= num_vertices_)
                throw std::invalid_argument("half-edge outside vertex range");
        }
        std::set<int> seen;
        for (auto [h, lab] : labels_) {
            if (h < 0 || h >= m || involution_[h] != h)
                throw std::invalid_argument("label on a non-external half-edge");
            if (!seen.insert(lab).second)
                throw std::invalid_argument("duplicate marking label");
        }
    }

    bool operator==(const HalfEdgeGraph& o) const {
        return num_vertices_ == o.num_vertices_ && involution_ == o.involution_ &&
               vertex_of_ == o.vertex_of_ && labels_ == o.labels_;
    }

private:
    int num_vertices_ = 0;
    std::vector<int> involution_;
    std::vector<int> vertex_of_;
    std::map<int, int> labels_;
};

/// Incremental construction helper used by enumerators and tests.
class GraphBuilder {
public:
    int add_vertex() {
        blocks_.emplace_back();
        return static_cast<int>(blocks_.size()) - 1;
    }

    /// Internal edge u-v (loop when u == v); returns the edge's half-edge pair.
    std::pair<int, int> add_edge(int u, int v) {
        int a = next_id_++, b = next_id_++;
        blocks_.at(u).push_back(a);
        blocks_.at(v).push_back(b);
        pairs_.emplace_back(a, b);
        return {a, b};
    }

    std::pair<int, int> add_loop_edge(int v) { return add_edge(v, v); }

    int add_leg(int v, std::optional<int> label = std::nullopt) {
        int a = next_id_++;
        blocks_.at(v).push_back(a);
        if (label) labels_[a] = *label;
        return a;
    }

    HalfEdgeGraph build() const { return HalfEdgeGraph::from_blocks(blocks_, pairs_, labels_); }

private:
    std::vector<std::vector<int>> blocks_;
    std::vector<std::pair<int, int>> pairs_;
    std::map<int, int> labels_;
    int next_id_ = 0;
};

}  // namespace stabcomb
