#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "stabcomb/canonical.hpp"
#include "stabcomb/decorated.hpp"
#include "stabcomb/halfedge_graph.hpp"
#include "stabcomb/monoid.hpp"

namespace stabcomb {

struct EnumerationLimits {
    /// Hard ceiling on candidate graphs examined before deduplication.
    long long max_candidates = 1'000'000;
    /// Re-deduplicate outputs by full labeled certificate (cross-check of the
    /// orbit bookkeeping; disable only for large bound sweeps).
    bool paranoid_dedup = true;
};

class EnumerationOverflow : public std::runtime_error {
public:
    explicit EnumerationOverflow(const std::string& what) : std::runtime_error(what) {}
};

namespace detail {

/// Visits every symmetric multiplicity matrix (loops on the diagonal) with
/// total internal degree 2*edges and deg[i] >= lb[i].  Within a run of equal
/// color ids the internal degree sequence is required to be nonincreasing;
/// any isomorphism class has a representative of that form, so this is a
/// safe symmetry reduction (pass distinct ids to disable).  Throws
/// EnumerationOverflow when the leaf budget runs out.
inline void for_each_multigraph(int nv, int edges, const std::vector<int>& lb,
                                const std::vector<int>& color_id, long long& budget,
                                const std::function<void(const std::vector<std::vector<int>>&)>& cb) {
    const int target = 2 * edges;
    std::vector<std::vector<int>> mult(nv, std::vector<int>(nv, 0));
    std::vector<int> deg(nv, 0);
    int assigned = 0;
    // Every row ends with final degree >= max(lb, current); their sum can
    // never exceed the target, which caps each cell tightly.
    int minfinal = 0;
    for (int x : lb) minfinal += x;
    if (minfinal > target) return;

    auto bump = [&](int v, int add) {
        int before = std::max(lb[v], deg[v]);
        deg[v] += add;
        minfinal += std::max(lb[v], deg[v]) - before;
    };

    std::function<void(int, int)> rec = [&](int i, int j) {
        if (i == nv) {
            if (assigned != target) return;
            if (--budget < 0)
                throw EnumerationOverflow("candidate ceiling exceeded during enumeration");
            cb(mult);
            return;
        }
        if (j == nv) {
            if (deg[i] < lb[i]) return;
            if (i > 0 && color_id[i] == color_id[i - 1] && deg[i] > deg[i - 1]) return;
            rec(i + 1, i + 1);
            return;
        }
        int room = (target - assigned) / 2;  // every unit adds 2 to the total
        if (i > 0 && color_id[i] == color_id[i - 1]) {
            int slack = deg[i - 1] - deg[i];
            if (slack < 0) return;  // sorted-run constraint already violated
            room = std::min(room, (i == j) ? slack / 2 : slack);
        }
        for (int k = 0; k <= room; ++k) {
            if (k > 0) {
                bump(i, (i == j) ? 2 : 1);
                if (i != j) bump(j, 1);
                assigned += 2;
                if (minfinal > target) {  // no completion can satisfy all rows
                    bump(i, (i == j) ? -2 : -1);
                    if (i != j) bump(j, -1);
                    assigned -= 2;
                    break;
                }
            }
            mult[i][j] = mult[j][i] = k;
            rec(i, j + 1);
        }
        // restore the accumulated increments of this cell
        int k_final = mult[i][j];
        bump(i, (i == j) ? -2 * k_final : -k_final);
        if (i != j) bump(j, -k_final);
        assigned -= 2 * k_final;
        mult[i][j] = mult[j][i] = 0;
    };
    rec(0, 0);
}

inline bool matrix_connected(const std::vector<std::vector<int>>& mult) {
    const int nv = static_cast<int>(mult.size());
    if (nv <= 1) return true;
    std::vector<int> stack{0}, seen(nv, 0);
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int u = 0; u < nv; ++u)
            if (u != v && mult[v][u] > 0 && !seen[u]) {
                seen[u] = 1;
                ++count;
                stack.push_back(u);
            }
    }
    return count == nv;
}

inline HalfEdgeGraph graph_from_matrix(const std::vector<std::vector<int>>& mult,
                                       const std::vector<int>& anon_legs,
                                       const std::vector<std::vector<int>>& leg_labels = {}) {
    const int nv = static_cast<int>(mult.size());
    GraphBuilder b;
    for (int v = 0; v < nv; ++v) b.add_vertex();
    for (int i = 0; i < nv; ++i)
        for (int j = i; j < nv; ++j)
            for (int k = 0; k < mult[i][j]; ++k) b.add_edge(i, j);
    for (int v = 0; v < nv; ++v) {
        int named = v < static_cast<int>(leg_labels.size())
                        ? static_cast<int>(leg_labels[v].size())
                        : 0;
        for (int k = 0; k < anon_legs[v] - named; ++k) b.add_leg(v);
        if (v < static_cast<int>(leg_labels.size()))
            for (int lab : leg_labels[v]) b.add_leg(v, lab);
    }
    return b.build();
}

}  // namespace detail

/// Complete, duplicate-free enumeration of the isomorphism classes of stable
/// decorated graphs of ambient genus h with markings 1..n and total class
/// beta.  Vertex counts run up to the Euler-characteristic bound; decorated
/// shapes are generated by a degree-constrained matrix search and labels are
/// distributed over each shape up to its automorphisms.
inline std::vector<DecoratedGraph> enumerate_stab(int h, int n, const ClassVector& beta,
                                                  const CurveClassMonoid& monoid = {},
                                                  const EnumerationLimits& limits = {}) {
    if (h < 0 || n < 0) throw std::invalid_argument("enumerate_stab: h, n must be nonnegative");
    if (!monoid.is_effective(beta))
        throw std::invalid_argument("enumerate_stab: beta must be effective");

    struct Triple {
        int g;
        ClassVector a;
        int legs;
    };
    const long long lb_beta = monoid.degree_of(beta);
    const auto alphas = monoid.classes_below(beta);

    // Candidate decorations, sorted descending so multisets are generated as
    // nonincreasing sequences.
    std::vector<Triple> triples;
    for (int g = 0; g <= h; ++g)
        for (const auto& a : alphas)
            for (int legs = 0; legs <= n; ++legs) triples.push_back({g, a, legs});
    std::sort(triples.begin(), triples.end(), [](const Triple& x, const Triple& y) {
        return std::tie(x.g, x.a, x.legs) > std::tie(y.g, y.a, y.legs);
    });

    auto min_valence = [&](const Triple& t) {
        if (t.g == 0 && monoid.is_zero(t.a)) return 3;
        if (t.g == 1 && monoid.is_zero(t.a)) return 1;
        return 0;
    };

    long long budget = limits.max_candidates;
    std::set<std::string> shape_seen;
    std::set<std::string> labeled_seen;
    std::vector<std::pair<std::string, DecoratedGraph>> keyed;
    std::vector<DecoratedGraph> out;

    CanonicalOptions anon_opt;
    anon_opt.ignore_external_labels = true;

    const int vmax = n + 5 * h + 3 * static_cast<int>(lb_beta) + 1;

    auto process_shape = [&](int nv, const std::vector<Triple>& chosen,
                             const std::vector<std::vector<int>>& mult) {
        std::vector<int> anon_legs(nv);
        std::vector<int> genus(nv);
        std::vector<ClassVector> alpha(nv);
        for (int v = 0; v < nv; ++v) {
            anon_legs[v] = chosen[v].legs;
            genus[v] = chosen[v].g;
            alpha[v] = chosen[v].a;
        }
        auto shape_graph = detail::graph_from_matrix(mult, anon_legs);
        DecoratedGraph shape(shape_graph, genus, alpha, monoid);
        if (!is_stable(shape)) return;  // legs are anonymous; valences decide
        auto cert = canonical_form(shape_graph, shape.colors(), anon_opt);
        if (!shape_seen.insert(cert).second) return;

        auto vauts = vertex_automorphisms(shape_graph, shape.colors(), anon_opt);

        // Distribute the labels 1..n over vertices with capacities legs(v),
        // keeping one representative per automorphism orbit.
        std::vector<int> capacity(anon_legs);
        std::vector<int> assign(n, -1);
        std::function<void(int)> place = [&](int lab) {
            if (lab == n) {
                for (const auto& p : vauts) {
                    bool smaller = false, bigger = false;
                    for (int l = 0; l < n; ++l) {
                        int img = p[assign[l]];
                        if (img < assign[l]) {
                            smaller = true;
                            break;
                        }
                        if (img > assign[l]) {
                            bigger = true;
                            break;
                        }
                    }
                    (void)bigger;
                    if (smaller) return;  // not the lex-least in its orbit
                }
                std::vector<std::vector<int>> leg_labels(nv);
                for (int l = 0; l < n; ++l) leg_labels[assign[l]].push_back(l + 1);
                auto labeled = detail::graph_from_matrix(mult, anon_legs, leg_labels);
                DecoratedGraph d(labeled, genus, alpha, monoid);
                if (limits.paranoid_dedup) {
                    auto c = d.certificate();
                    if (!labeled_seen.insert(c).second)
                        throw std::logic_error("enumerate_stab: orbit bookkeeping emitted a duplicate");
                    keyed.emplace_back(std::move(c), std::move(d));
                } else {
                    out.push_back(std::move(d));
                }
                return;
            }
            for (int v = 0; v < nv; ++v) {
                if (capacity[v] == 0) continue;
                --capacity[v];
                assign[lab] = v;
                place(lab + 1);
                ++capacity[v];
            }
        };
        place(0);
    };

    for (int nv = 1; nv <= vmax; ++nv) {
        std::vector<Triple> chosen;
        int sum_g = 0, sum_legs = 0;
        ClassVector sum_a = monoid.zero();
        std::function<void(size_t)> pick = [&](size_t from) {
            const int v_done = static_cast<int>(chosen.size());
            if (v_done == nv) {
                if (sum_g > h || sum_legs != n || sum_a != beta) return;
                int edges = (h - sum_g) + nv - 1;
                if (edges < 0) return;
                std::vector<int> lb(nv), color_id(nv);
                int prev_color = -1;
                for (int v = 0; v < nv; ++v) {
                    lb[v] = std::max(
                        {0, min_valence(chosen[v]) - chosen[v].legs, nv >= 2 ? 1 : 0});
                    // runs of equal triples share a color id
                    if (v > 0 && std::tie(chosen[v].g, chosen[v].a, chosen[v].legs) ==
                                     std::tie(chosen[v - 1].g, chosen[v - 1].a,
                                              chosen[v - 1].legs))
                        color_id[v] = prev_color;
                    else
                        color_id[v] = prev_color = v;
                }
                detail::for_each_multigraph(
                    nv, edges, lb, color_id, budget,
                    [&](const std::vector<std::vector<int>>& mult) {
                        if (!detail::matrix_connected(mult)) return;
                        process_shape(nv, chosen, mult);
                    });
                return;
            }
            for (size_t t = from; t < triples.size(); ++t) {
                const Triple& tr = triples[t];
                if (sum_g + tr.g > h) continue;
                if (sum_legs + tr.legs > n) continue;
                bool fits = true;
                for (int i = 0; i < monoid.rank; ++i)
                    if (sum_a[i] + tr.a[i] > beta[i]) {
                        fits = false;
                        break;
                    }
                if (!fits) continue;
                chosen.push_back(tr);
                sum_g += tr.g;
                sum_legs += tr.legs;
                for (int i = 0; i < monoid.rank; ++i) sum_a[i] += tr.a[i];
                pick(t);
                for (int i = 0; i < monoid.rank; ++i) sum_a[i] -= tr.a[i];
                sum_legs -= tr.legs;
                sum_g -= tr.g;
                chosen.pop_back();
            }
        };
        pick(0);
    }

    if (limits.paranoid_dedup) {
        std::sort(keyed.begin(), keyed.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        out.reserve(keyed.size());
        for (auto& [c, d] : keyed) out.push_back(std::move(d));
    }
    return out;
}

/// Isomorphism classes of connected multigraphs (no legs, loops allowed)
/// with the given numbers of vertices and edges.
inline std::vector<HalfEdgeGraph> enumerate_connected_multigraphs(
    int nv, int edges, const EnumerationLimits& limits = {}) {
    if (nv < 1) return {};
    long long budget = limits.max_candidates;
    std::map<std::string, HalfEdgeGraph> seen;
    std::vector<int> lb(nv, nv >= 2 ? 1 : 0), color_id(nv, 0);
    detail::for_each_multigraph(nv, edges, lb, color_id, budget,
                                [&](const std::vector<std::vector<int>>& mult) {
                                    if (!detail::matrix_connected(mult)) return;
                                    auto g = detail::graph_from_matrix(
                                        mult, std::vector<int>(nv, 0));
                                    auto cert = canonical_form(g);
                                    seen.emplace(std::move(cert), std::move(g));
                                });
    std::vector<HalfEdgeGraph> out;
    out.reserve(seen.size());
    for (auto& [c, g] : seen) out.push_back(std::move(g));
    return out;
}

}  // namespace stabcomb
