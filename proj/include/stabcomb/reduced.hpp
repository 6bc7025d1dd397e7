#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "stabcomb/bigint.hpp"
#include "stabcomb/classify.hpp"
#include "stabcomb/decorated.hpp"
#include "stabcomb/enumerate.hpp"

namespace stabcomb {

/// Saturated graph in which every plain vertex keeps at most one external
/// edge; the chosen normal form of a relabeling orbit.
struct ReducedGraph {
    DecoratedGraph graph;
    bool reduced = true;

    /// Certificate with external labels erased: two reduced graphs generate
    /// the same orbit exactly when these agree.
    std::string orbit_certificate() const {
        CanonicalOptions opt;
        opt.ignore_external_labels = true;
        return graph.certificate(opt);
    }
};

/// Removes all but one external edge at every plain vertex, stabilizes, and
/// relabels the surviving legs 1..n(K) in their original order.  A plain
/// vertex left with one leg and one internal edge is smoothed away, the leg
/// moving to its neighbor.  The fully degenerate case (a single plain vertex)
/// keeps one leg and is returned unstable.
inline ReducedGraph reduce_graph(const DecoratedGraph& d) {
    if (!is_saturated(d))
        throw std::invalid_argument("reduce_graph expects a saturated graph");
    const auto& g = d.graph;
    const int m = g.num_half_edges();
    std::vector<bool> drop(m, false);
    std::vector<int> move_to(m, -1);  // leg -> new vertex after smoothing

    for (int v = 0; v < g.num_vertices(); ++v) {
        if (!d.is_plain(v)) continue;
        std::vector<int> legs;
        int internal_deg = 0;
        for (int h = 0; h < m; ++h)
            if (g.vertex_of(h) == v) {
                if (g.is_external(h))
                    legs.push_back(h);
                else
                    ++internal_deg;
            }
        if (legs.size() <= 1) continue;
        std::sort(legs.begin(), legs.end(), [&](int a, int b) {
            return g.label_of(a) < g.label_of(b);
        });
        for (size_t k = 1; k < legs.size(); ++k) drop[legs[k]] = true;
        if (internal_deg == 1) {
            // valence falls to 2: smooth the vertex, hand the leg across
            int kept = legs[0];
            int partner = -1;
            for (int h = 0; h < m; ++h)
                if (g.vertex_of(h) == v && !g.is_external(h)) partner = h;
            drop[kept] = false;
            move_to[kept] = g.vertex_of(g.sigma(partner));
            drop[partner] = true;
            drop[g.sigma(partner)] = true;
            // the surviving leg replaces the half-edge at the neighbor
        }
    }

    // rebuild
    std::vector<std::vector<int>> blocks;
    std::vector<int> vmap(g.num_vertices(), -1);
    std::vector<bool> vertex_gone(g.num_vertices(), false);
    for (int v = 0; v < g.num_vertices(); ++v) {
        if (!d.is_plain(v)) continue;
        bool all_dropped = true;
        for (int h = 0; h < m; ++h)
            if (g.vertex_of(h) == v && !drop[h] && move_to[h] == -1) all_dropped = false;
        // a smoothed vertex retains only the moved leg
        bool smoothed = false;
        for (int h = 0; h < m; ++h)
            if (g.vertex_of(h) == v && move_to[h] != -1) smoothed = true;
        vertex_gone[v] = smoothed && all_dropped;
    }

    std::vector<int> genus;
    std::vector<ClassVector> alpha;
    for (int v = 0; v < g.num_vertices(); ++v) {
        if (vertex_gone[v]) continue;
        vmap[v] = static_cast<int>(blocks.size());
        blocks.emplace_back();
        genus.push_back(d.genus[v]);
        alpha.push_back(d.alpha[v]);
    }
    std::vector<int> new_id(m, -1);
    std::vector<std::pair<int, int>> pairs;
    std::map<int, int> labels;
    int next = 0;
    std::vector<int> kept;
    for (int h = 0; h < m; ++h)
        if (!drop[h]) kept.push_back(h);
    for (int h : kept) new_id[h] = next++;
    for (int h : kept) {
        int target = move_to[h] != -1 ? move_to[h] : g.vertex_of(h);
        blocks[vmap[target]].push_back(new_id[h]);
        if (!g.is_external(h)) {
            if (g.sigma(h) > h) pairs.emplace_back(new_id[h], new_id[g.sigma(h)]);
        }
    }
    // relabel 1..k preserving the original label order
    std::vector<std::pair<int, int>> old_labels;  // (label, new id)
    for (int h : kept)
        if (auto lab = g.label_of(h)) old_labels.emplace_back(*lab, new_id[h]);
    std::sort(old_labels.begin(), old_labels.end());
    int next_label = 1;
    for (auto [lab, id] : old_labels) labels[id] = next_label++;

    DecoratedGraph out(HalfEdgeGraph::from_blocks(blocks, pairs, labels), std::move(genus),
                       std::move(alpha), d.monoid);
    return ReducedGraph{std::move(out), true};
}

inline bool is_reduced(const DecoratedGraph& d) {
    if (!is_saturated(d)) return false;
    for (int v = 0; v < d.graph.num_vertices(); ++v)
        if (d.is_plain(v) && d.graph.external_degree(v) > 1) return false;
    return true;
}

/// Pullback of a saturated graph along a surjection f: [m] -> [n]: each leg
/// label i is replaced by the labels of its fiber, attached directly at a
/// plain vertex and on a new plain tail otherwise.
inline DecoratedGraph surjection_pullback(const DecoratedGraph& d, const std::vector<int>& f) {
    const auto& g = d.graph;
    const int n = d.num_markings();
    const int m = static_cast<int>(f.size());
    std::vector<std::vector<int>> fiber(n + 1);
    for (int x = 0; x < m; ++x) {
        if (f[x] < 1 || f[x] > n) throw std::invalid_argument("pullback: target out of range");
        fiber[f[x]].push_back(x + 1);
    }
    for (int i = 1; i <= n; ++i)
        if (fiber[i].empty()) throw std::invalid_argument("pullback: map is not surjective");

    GraphBuilder b;
    for (int v = 0; v < g.num_vertices(); ++v) b.add_vertex();
    std::vector<int> genus(d.genus);
    std::vector<ClassVector> alpha(d.alpha);
    for (auto [x, y] : g.internal_edges()) b.add_edge(g.vertex_of(x), g.vertex_of(y));
    for (int h : g.external_half_edges()) {
        int lab = *g.label_of(h);
        int v = g.vertex_of(h);
        const auto& fib = fiber[lab];
        if (fib.size() == 1) {
            b.add_leg(v, fib[0]);
        } else if (d.is_plain(v)) {
            for (int x : fib) b.add_leg(v, x);
        } else {
            int tail = b.add_vertex();
            genus.push_back(0);
            alpha.push_back(d.monoid.zero());
            b.add_edge(v, tail);
            for (int x : fib) b.add_leg(tail, x);
        }
    }
    return DecoratedGraph(b.build(), std::move(genus), std::move(alpha), d.monoid);
}

struct OrbitEntry {
    ReducedGraph representative;
    long long orbit_size = 0;  // classes of Q(h,n,beta) in this orbit
    int free_half_edges = 0;
};

/// Partition of the saturated classes at level n into relabeling orbits,
/// keyed by the reduced representative; only orbits whose representative has
/// at most i_max free half-edges are listed.
inline std::vector<OrbitEntry> orbit_decompose(int h, int n, const ClassVector& beta,
                                               int i_max, const CurveClassMonoid& monoid = {},
                                               const EnumerationLimits& limits = {}) {
    auto classes = enumerate_stab(h, n, beta, monoid, limits);
    std::map<std::string, OrbitEntry> orbits;
    for (auto& d : classes) {
        if (!is_saturated(d)) continue;
        auto red = reduce_graph(d);
        auto key = red.orbit_certificate();
        auto it = orbits.find(key);
        if (it == orbits.end()) {
            OrbitEntry e;
            e.free_half_edges = count_free(d);
            e.representative = std::move(red);
            it = orbits.emplace(key, std::move(e)).first;
        }
        it->second.orbit_size++;
    }
    std::vector<OrbitEntry> out;
    for (auto& [k, e] : orbits)
        if (e.free_half_edges <= i_max) out.push_back(std::move(e));
    return out;
}

/// Symbolic product decomposition of the locus spanned by the relabeling
/// orbit of a reduced graph K: a fixed factor Y(K) over the vertices that
/// are not plain or carry no external edge, and one marked-curve family per
/// external label of K.
struct StratumFactorization {
    struct YFactor {
        bool plain = false;
        int genus = 0;        // genus label, or self-edge genus for plain
        ClassVector alpha;    // empty-class zero for plain
        int markings = 0;     // marked points of the factor
    };
    struct LegFamily {
        int label = 0;
        bool plain_vertex = false;
        int genus = 0;   // self-edge genus of the plain vertex, else 0
        int extra = 0;   // additional marked points carried by the family
    };
    std::vector<YFactor> y_factors;
    std::vector<LegFamily> families;

    size_t factor_count() const { return families.size() + 1; }
};

inline StratumFactorization stratum_factorization(const ReducedGraph& k) {
    const auto& d = k.graph;
    const auto& g = d.graph;
    StratumFactorization out;
    for (int v = 0; v < g.num_vertices(); ++v) {
        bool leg_adjacent = g.external_degree(v) > 0;
        if (d.is_plain(v) && leg_adjacent) continue;  // absorbed into a family
        StratumFactorization::YFactor f;
        f.plain = d.is_plain(v);
        if (f.plain) {
            f.genus = g.loops_at(v) ;  // all-rational locus of that genus
            f.alpha = d.monoid.zero();
            f.markings = g.valence(v) - 2 * g.loops_at(v);
        } else {
            f.genus = d.genus[v];
            f.alpha = d.alpha[v];
            f.markings = g.valence(v);
        }
        out.y_factors.push_back(std::move(f));
    }
    for (int h : g.external_half_edges()) {
        StratumFactorization::LegFamily fam;
        fam.label = *g.label_of(h);
        int v = g.vertex_of(h);
        fam.plain_vertex = d.is_plain(v);
        if (fam.plain_vertex) {
            fam.genus = g.loops_at(v);
            fam.extra = g.valence(v) - 1;
        } else {
            fam.genus = 0;
            fam.extra = 1;  // the attachment point
        }
        out.families.push_back(fam);
    }
    std::sort(out.families.begin(), out.families.end(),
              [](const auto& a, const auto& b) { return a.label < b.label; });
    return out;
}

enum class HeightVariant { Standard, Conservative };

/// Height bound (13i/2 + 1)(i + 2g + 2 deg + 1); the conservative variant
/// doubles the free-edge term to (13i/2 + 1)(2i + 2g + 2 deg + 1).  Computed
/// in exact rational arithmetic and rounded up.
inline BigInt height_constant(int i, int g, long long deg_alpha,
                              HeightVariant variant = HeightVariant::Standard) {
    BigRat first = BigRat(13 * i, 2) + 1;
    long long iterm = variant == HeightVariant::Standard ? i : 2LL * i;
    BigRat second = BigRat(iterm + 2LL * g + 2 * deg_alpha + 1);
    BigRat prod = first * second;
    BigInt num = boost::multiprecision::numerator(prod);
    BigInt den = boost::multiprecision::denominator(prod);
    BigInt q = num / den;
    if (q * den != num) q += 1;  // ceil for positive values
    return q;
}

}  // namespace stabcomb
