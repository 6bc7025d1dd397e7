#pragma once

// Independent brute-force oracles used only by the test suites.  These stay
// deliberately naive: they re-derive answers along a different path than the
// library implementation they check.

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "stabcomb/decorated.hpp"
#include "stabcomb/halfedge_graph.hpp"
#include "stabcomb/monoid.hpp"

namespace stabcomb::oracle {

/// Decoration-preserving isomorphism by direct backtracking over half-edge
/// bijections (not via multiplicity matrices or canonical forms).
inline bool brute_force_isomorphic(const HalfEdgeGraph& g, const HalfEdgeGraph& h,
                                   const std::vector<std::string>& gcolors = {},
                                   const std::vector<std::string>& hcolors = {}) {
    const int m = g.num_half_edges();
    if (m != h.num_half_edges() || g.num_vertices() != h.num_vertices()) return false;
    auto color = [](const std::vector<std::string>& c, int v) {
        return v < static_cast<int>(c.size()) ? c[v] : std::string();
    };
    // Zero-valence vertices carry no half-edge constraints; compare their
    // color multisets separately.
    {
        std::vector<std::string> ge, he;
        std::vector<bool> gb(g.num_vertices(), true), hb(h.num_vertices(), true);
        for (int x = 0; x < m; ++x) {
            gb[g.vertex_of(x)] = false;
            hb[h.vertex_of(x)] = false;
        }
        for (int v = 0; v < g.num_vertices(); ++v)
            if (gb[v]) ge.push_back(color(gcolors, v));
        for (int v = 0; v < h.num_vertices(); ++v)
            if (hb[v]) he.push_back(color(hcolors, v));
        std::sort(ge.begin(), ge.end());
        std::sort(he.begin(), he.end());
        if (ge != he) return false;
    }

    std::vector<int> himg(m, -1);  // half-edge map g -> h
    std::vector<bool> used(m, false);
    std::vector<int> vimg(g.num_vertices(), -1);  // vertex map and its inverse
    std::vector<int> vpre(h.num_vertices(), -1);

    std::function<bool(int)> go = [&](int x) -> bool {
        if (x == m) return true;
        for (int y = 0; y < m; ++y) {
            if (used[y]) continue;
            if (g.is_external(x) != h.is_external(y)) continue;
            if (g.label_of(x) != h.label_of(y)) continue;
            int gv = g.vertex_of(x), hv = h.vertex_of(y);
            if (color(gcolors, gv) != color(hcolors, hv)) continue;
            if (vimg[gv] != -1 && vimg[gv] != hv) continue;
            if (vpre[hv] != -1 && vpre[hv] != gv) continue;
            // sigma-equivariance against the already-placed partner
            int xs = g.sigma(x);
            if (xs < x && himg[xs] != h.sigma(y)) continue;
            if (xs >= x && xs != x && used[h.sigma(y)]) continue;

            int old_vimg = vimg[gv], old_vpre = vpre[hv];
            himg[x] = y;
            used[y] = true;
            vimg[gv] = hv;
            vpre[hv] = gv;
            if (go(x + 1)) return true;
            himg[x] = -1;
            used[y] = false;
            vimg[gv] = old_vimg;
            vpre[hv] = old_vpre;
        }
        return false;
    };
    return go(0);
}

/// Relabel half-edges and vertices of a graph by explicit permutations, for
/// isomorphism-invariance tests.
inline HalfEdgeGraph permuted_copy(const HalfEdgeGraph& g, const std::vector<int>& hperm,
                                   const std::vector<int>& vperm) {
    const int m = g.num_half_edges();
    std::vector<int> sigma(m), vtx(m);
    std::map<int, int> labels;
    for (int x = 0; x < m; ++x) {
        sigma[hperm[x]] = hperm[g.sigma(x)];
        vtx[hperm[x]] = vperm[g.vertex_of(x)];
        if (auto lab = g.label_of(x)) labels[hperm[x]] = *lab;
    }
    return HalfEdgeGraph(g.num_vertices(), std::move(sigma), std::move(vtx), std::move(labels));
}

/// Naive labelled-structure generator for stable decorated graphs: loops over
/// per-vertex decorations, label-to-vertex maps and symmetric edge matrices
/// with no shape sorting and no orbit bookkeeping, then deduplicates by
/// certificate.  Branches that cannot reach a stable graph are cut early
/// (stability forces the valence lower bounds used for the cut).
inline long long naive_stab_count(int h, int n, const ClassVector& beta,
                                  const CurveClassMonoid& monoid = {}) {
    std::set<std::string> classes;
    const long long lb_beta = monoid.degree_of(beta);
    const int vmax = n + 5 * h + 3 * static_cast<int>(lb_beta) + 1;
    const auto alphas = monoid.classes_below(beta);

    for (int nv = 1; nv <= vmax; ++nv) {
        std::vector<int> genus(nv, 0);
        std::vector<ClassVector> alpha(nv, monoid.zero());
        std::vector<int> label_at(n, 0);  // label l+1 sits at vertex label_at[l]
        std::vector<int> minval(nv, 0), legs(nv, 0);
        std::vector<std::string> colors(nv);
        int edges = 0;

        auto edges_stage = [&]() {
            std::vector<int> lb(nv);
            int need = 0;
            for (int v = 0; v < nv; ++v) {
                lb[v] = std::max({0, minval[v] - legs[v], nv >= 2 ? 1 : 0});
                need += lb[v];
            }
            if (need > 2 * edges) return;

            // plain symmetric-matrix recursion, no shape sorting; branches
            // whose rows can no longer reach their stability minimum are cut
            std::vector<std::vector<int>> mult(nv, std::vector<int>(nv, 0));
            std::vector<int> deg(nv, 0);
            int assigned = 0, minfinal = need;
            auto bump = [&](int v, int add) {
                int before = std::max(lb[v], deg[v]);
                deg[v] += add;
                minfinal += std::max(lb[v], deg[v]) - before;
            };
            std::function<void(int, int)> cell = [&](int i, int j) {
                if (i == nv) {
                    if (assigned != 2 * edges) return;
                    // stability from valences, then connectivity, then dedup
                    for (int v = 0; v < nv; ++v)
                        if (deg[v] + legs[v] < minval[v]) return;
                    GraphBuilder b;
                    for (int v = 0; v < nv; ++v) b.add_vertex();
                    for (int p = 0; p < nv; ++p)
                        for (int q = p; q < nv; ++q)
                            for (int k = 0; k < mult[p][q]; ++k) b.add_edge(p, q);
                    for (int l = 0; l < n; ++l) b.add_leg(label_at[l], l + 1);
                    auto g = b.build();
                    if (!g.is_connected()) return;
                    classes.insert(canonical_form(g, colors));
                    return;
                }
                if (j == nv) {
                    if (deg[i] < lb[i]) return;
                    cell(i + 1, i + 1);
                    return;
                }
                int room = (2 * edges - assigned) / 2;
                for (int k = 0; k <= room; ++k) {
                    if (k > 0) {
                        bump(i, (i == j) ? 2 : 1);
                        if (i != j) bump(j, 1);
                        assigned += 2;
                        if (minfinal > 2 * edges) {
                            bump(i, (i == j) ? -2 : -1);
                            if (i != j) bump(j, -1);
                            assigned -= 2;
                            break;
                        }
                    }
                    mult[i][j] = mult[j][i] = k;
                    cell(i, j + 1);
                }
                int kf = mult[i][j];
                bump(i, (i == j) ? -2 * kf : -kf);
                if (i != j) bump(j, -kf);
                assigned -= 2 * kf;
                mult[i][j] = mult[j][i] = 0;
            };
            cell(0, 0);
        };

        // deficit = sum over vertices of the legs still required for
        // stability; each unassigned label can lower it by at most one
        std::function<void(int, int)> labels_stage = [&](int l, int deficit) {
            if (deficit - (n - l) > 2 * edges) return;
            if (l == n) {
                edges_stage();
                return;
            }
            for (int v = 0; v < nv; ++v) {
                label_at[l] = v;
                legs[v]++;
                int drop = legs[v] <= minval[v] ? 1 : 0;
                labels_stage(l + 1, deficit - drop);
                legs[v]--;
            }
        };

        auto decorations_done = [&](int sum_g) {
            edges = (h - sum_g) + nv - 1;
            if (edges < 0) return;
            int deficit = 0;
            for (int v = 0; v < nv; ++v) {
                minval[v] = 0;
                if (genus[v] == 0 && monoid.is_zero(alpha[v])) minval[v] = 3;
                if (genus[v] == 1 && monoid.is_zero(alpha[v])) minval[v] = 1;
                deficit += minval[v];
                colors[v] = "g=" + std::to_string(genus[v]) +
                            ";a=" + CurveClassMonoid::to_string(alpha[v]);
            }
            std::fill(legs.begin(), legs.end(), 0);
            labels_stage(0, deficit);
        };

        std::function<void(int, ClassVector, int)> alpha_stage =
            [&](int v, ClassVector sum, int sum_g) {
            if (v == nv) {
                if (sum == beta) decorations_done(sum_g);
                return;
            }
            for (const auto& a : alphas) {
                bool fits = true;
                for (int i = 0; i < monoid.rank; ++i)
                    if (sum[i] + a[i] > beta[i]) fits = false;
                if (!fits) continue;
                alpha[v] = a;
                alpha_stage(v + 1, monoid.add(sum, a), sum_g);
            }
            alpha[v] = monoid.zero();
        };

        std::function<void(int, int)> genus_stage = [&](int v, int sum) {
            if (v == nv) {
                alpha_stage(0, monoid.zero(), sum);
                return;
            }
            for (int g = 0; g + sum <= h; ++g) {
                genus[v] = g;
                genus_stage(v + 1, sum + g);
            }
            genus[v] = 0;
        };

        genus_stage(0, 0);
    }
    return static_cast<long long>(classes.size());
}

}  // namespace stabcomb::oracle
