#pragma once

#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "stabcomb/halfedge_graph.hpp"

namespace stabcomb {

using Json = nlohmann::json;

/// Schema: {half_edges: [id], involution: [[a,b]...], vertices: [[id...]...],
/// labels: {"id": label}}.  Fixed points are the ids not covered by an
/// involution pair.  Ids may be arbitrary; they are densified on import.
inline Json graph_to_json(const HalfEdgeGraph& g) {
    Json j;
    std::vector<int> ids(g.num_half_edges());
    for (int h = 0; h < g.num_half_edges(); ++h) ids[h] = h;
    j["half_edges"] = ids;
    Json pairs = Json::array();
    for (auto [a, b] : g.internal_edges()) pairs.push_back({a, b});
    j["involution"] = pairs;
    j["vertices"] = g.blocks();
    Json labels = Json::object();
    for (auto [h, lab] : g.labels()) labels[std::to_string(h)] = lab;
    j["labels"] = labels;
    return j;
}

inline HalfEdgeGraph graph_from_json(const Json& j) {
    if (!j.contains("half_edges") || !j.contains("vertices"))
        throw std::invalid_argument("graph json: missing half_edges or vertices");
    std::vector<long long> raw = j.at("half_edges").get<std::vector<long long>>();
    std::map<long long, int> remap;  // id -> dense index in list order
    for (long long id : raw)
        if (!remap.emplace(id, static_cast<int>(remap.size())).second)
            throw std::invalid_argument("graph json: duplicate half-edge id");

    const int m = static_cast<int>(raw.size());
    std::vector<int> sigma(m), vtx(m, -1);
    for (int h = 0; h < m; ++h) sigma[h] = h;
    if (j.contains("involution"))
        for (const auto& p : j.at("involution")) {
            long long a = p.at(0).get<long long>(), b = p.at(1).get<long long>();
            if (!remap.count(a) || !remap.count(b))
                throw std::invalid_argument("graph json: involution uses unknown id");
            if (a == b) continue;
            sigma[remap[a]] = remap[b];
            sigma[remap[b]] = remap[a];
        }
    const auto& blocks = j.at("vertices");
    int nv = static_cast<int>(blocks.size());
    for (int v = 0; v < nv; ++v)
        for (const auto& idj : blocks[v]) {
            long long id = idj.get<long long>();
            if (!remap.count(id))
                throw std::invalid_argument("graph json: vertex block uses unknown id");
            vtx[remap[id]] = v;
        }
    std::map<int, int> labels;
    if (j.contains("labels"))
        for (auto it = j.at("labels").begin(); it != j.at("labels").end(); ++it) {
            long long id = std::stoll(it.key());
            if (!remap.count(id))
                throw std::invalid_argument("graph json: label on unknown id");
            labels[remap[id]] = it.value().get<int>();
        }
    return HalfEdgeGraph(nv, std::move(sigma), std::move(vtx), std::move(labels));
}

/// DOT export as an undirected multigraph; legs rendered as point nodes.
inline std::string graph_to_dot(const HalfEdgeGraph& g,
                                const std::vector<std::string>& vertex_labels = {}) {
    std::ostringstream out;
    out << "graph G {\n";
    for (int v = 0; v < g.num_vertices(); ++v) {
        out << "  v" << v;
        if (v < static_cast<int>(vertex_labels.size()))
            out << " [label=\"" << vertex_labels[v] << "\"]";
        out << ";\n";
    }
    for (auto [a, b] : g.internal_edges())
        out << "  v" << g.vertex_of(a) << " -- v" << g.vertex_of(b) << ";\n";
    for (int h : g.external_half_edges()) {
        out << "  x" << h << " [shape=point";
        if (auto lab = g.label_of(h)) out << ", xlabel=\"" << *lab << "\"";
        out << "];\n";
        out << "  v" << g.vertex_of(h) << " -- x" << h << ";\n";
    }
    out << "}\n";
    return out.str();
}

}  // namespace stabcomb
