#pragma once

#include <algorithm>
#include <charconv>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "stabcomb/bigint.hpp"
#include "stabcomb/halfedge_graph.hpp"

namespace stabcomb {

struct CanonicalOptions {
    /// Treat every leg as anonymous (used for orbit certificates).
    bool ignore_external_labels = false;
    /// Abort if the ordering search visits more than this many leaves.
    long long max_leaves = 2'000'000;
};

namespace detail {

/// Vertex-level view of a half-edge graph: multiplicity matrix, loop counts,
/// legs and decoration colors.  Isomorphism of half-edge graphs is decided at
/// this level: parallel edges, loop halves and same-vertex anonymous legs are
/// interchangeable, so the class of the half-edge structure is determined by
/// the colored multiplicity data together with the per-vertex label sets.
struct VertexView {
    int n = 0;
    std::vector<int> mult;       // n*n, off-diagonal multiplicities
    std::vector<int> loops;
    std::vector<std::vector<long long>> key;  // per-vertex invariant
    std::vector<std::string> color_table;     // sorted distinct color strings

    int m(int u, int v) const { return mult[u * n + v]; }

    VertexView(const HalfEdgeGraph& g, const std::vector<std::string>& colors,
               const CanonicalOptions& opt) {
        n = g.num_vertices();
        mult.assign(n * n, 0);
        loops.assign(n, 0);
        for (auto [a, b] : g.internal_edges()) {
            int u = g.vertex_of(a), v = g.vertex_of(b);
            if (u == v)
                loops[u]++;
            else {
                mult[u * n + v]++;
                mult[v * n + u]++;
            }
        }
        std::vector<int> anon(n, 0);
        std::vector<std::vector<int>> leg_labels(n);
        for (int h : g.external_half_edges()) {
            auto lab = g.label_of(h);
            if (lab && !opt.ignore_external_labels)
                leg_labels[g.vertex_of(h)].push_back(*lab);
            else
                anon[g.vertex_of(h)]++;
        }
        std::vector<std::string> cs(n);
        for (int v = 0; v < n; ++v)
            cs[v] = v < static_cast<int>(colors.size()) ? colors[v] : std::string();
        color_table = cs;
        std::sort(color_table.begin(), color_table.end());
        color_table.erase(std::unique(color_table.begin(), color_table.end()),
                          color_table.end());

        key.resize(n);
        for (int v = 0; v < n; ++v) {
            auto& k = key[v];
            k.push_back(static_cast<long long>(
                std::lower_bound(color_table.begin(), color_table.end(), cs[v]) -
                color_table.begin()));
            k.push_back(anon[v]);
            k.push_back(loops[v]);
            int deg = 0;
            for (int u = 0; u < n; ++u) deg += m(v, u);
            k.push_back(deg);
            std::sort(leg_labels[v].begin(), leg_labels[v].end());
            k.push_back(static_cast<long long>(leg_labels[v].size()));
            for (int x : leg_labels[v]) k.push_back(x);
        }
    }
};

/// Canonical ordering search: refine the ordered partition to a fixpoint,
/// individualize inside the first non-singleton cell, and keep the minimal
/// full encoding over all discrete orderings reached.  Exhaustive, intended
/// for the small graphs this library works with.
class CanonSearch {
public:
    CanonSearch(const VertexView& view, const CanonicalOptions& opt)
        : g_(view), opt_(opt) {}

    void run() {
        if (g_.n == 0) {
            best_ = {0};
            best_orders_ = {{}};
            return;
        }
        // cells as (start, length) over the order_ array
        order_.resize(g_.n);
        std::iota(order_.begin(), order_.end(), 0);
        std::sort(order_.begin(), order_.end(),
                  [&](int a, int b) { return g_.key[a] < g_.key[b]; });
        std::vector<std::pair<int, int>> cells;
        int start = 0;
        for (int i = 1; i <= g_.n; ++i) {
            if (i == g_.n || g_.key[order_[i]] != g_.key[order_[start]]) {
                cells.emplace_back(start, i - start);
                start = i;
            }
        }
        refine(cells);
        search(cells);
    }

    const std::vector<long long>& best_encoding() const { return best_; }
    const std::vector<std::vector<int>>& best_orderings() const { return best_orders_; }
    const VertexView& view() const { return g_; }

private:
    // Splits cells by multiplicity profile into current cells until stable.
    void refine(std::vector<std::pair<int, int>>& cells) {
        const int n = g_.n;
        std::vector<int> cell_of(n);
        std::vector<long long> sig(static_cast<size_t>(n) * n);
        bool changed = true;
        while (changed) {
            changed = false;
            const int nc = static_cast<int>(cells.size());
            for (int c = 0; c < nc; ++c)
                for (int i = 0; i < cells[c].second; ++i)
                    cell_of[order_[cells[c].first + i]] = c;
            std::vector<std::pair<int, int>> next;
            next.reserve(cells.size());
            for (auto [cstart, clen] : cells) {
                if (clen == 1) {
                    next.emplace_back(cstart, 1);
                    continue;
                }
                for (int i = 0; i < clen; ++i) {
                    int v = order_[cstart + i];
                    long long* s = &sig[static_cast<size_t>(v) * nc];
                    std::fill(s, s + nc, 0);
                    for (int u = 0; u < n; ++u) s[cell_of[u]] += g_.m(v, u);
                }
                std::stable_sort(order_.begin() + cstart, order_.begin() + cstart + clen,
                                 [&](int a, int b) {
                                     const long long* sa = &sig[static_cast<size_t>(a) * nc];
                                     const long long* sb = &sig[static_cast<size_t>(b) * nc];
                                     return std::lexicographical_compare(sa, sa + nc, sb,
                                                                         sb + nc);
                                 });
                int s0 = cstart;
                for (int i = 1; i <= clen; ++i) {
                    bool split = i == clen;
                    if (!split) {
                        const long long* sa =
                            &sig[static_cast<size_t>(order_[cstart + i - 1]) * nc];
                        const long long* sb =
                            &sig[static_cast<size_t>(order_[cstart + i]) * nc];
                        split = !std::equal(sa, sa + nc, sb);
                    }
                    if (split) {
                        next.emplace_back(s0, cstart + i - s0);
                        if (s0 != cstart || i != clen) changed = true;
                        s0 = cstart + i;
                    }
                }
            }
            cells = std::move(next);
        }
    }

    void search(std::vector<std::pair<int, int>> cells) {
        int target = -1;
        for (int c = 0; c < static_cast<int>(cells.size()); ++c)
            if (cells[c].second > 1) {
                target = c;
                break;
            }
        if (target < 0) {
            emit();
            return;
        }
        auto [tstart, tlen] = cells[target];
        std::vector<int> members(order_.begin() + tstart, order_.begin() + tstart + tlen);
        std::vector<int> saved_order = order_;
        for (int v : members) {
            if (leaves_ > opt_.max_leaves)
                throw std::runtime_error("canonical-form search exceeded leaf budget");
            order_ = saved_order;
            // move v to the front of its cell
            for (int i = 0; i < tlen; ++i)
                if (order_[tstart + i] == v) {
                    std::rotate(order_.begin() + tstart, order_.begin() + tstart + i,
                                order_.begin() + tstart + i + 1);
                    break;
                }
            std::vector<std::pair<int, int>> child;
            child.reserve(cells.size() + 1);
            for (int c = 0; c < static_cast<int>(cells.size()); ++c) {
                if (c != target) {
                    child.push_back(cells[c]);
                    continue;
                }
                child.emplace_back(tstart, 1);
                if (tlen > 1) child.emplace_back(tstart + 1, tlen - 1);
            }
            refine(child);
            search(std::move(child));
        }
        order_ = saved_order;
    }

    void emit() {
        ++leaves_;
        enc_.clear();
        enc_.push_back(g_.n);
        for (int v : order_) {
            const auto& k = g_.key[v];
            enc_.insert(enc_.end(), k.begin(), k.end());
        }
        for (int p = 0; p < g_.n; ++p)
            for (int q = 0; q < p; ++q) enc_.push_back(g_.m(order_[p], order_[q]));
        if (best_.empty() || enc_ < best_) {
            best_ = enc_;
            best_orders_.clear();
            best_orders_.push_back(order_);
        } else if (enc_ == best_) {
            best_orders_.push_back(order_);
        }
    }

    const VertexView& g_;
    CanonicalOptions opt_;
    std::vector<int> order_;
    std::vector<long long> best_, enc_;
    std::vector<std::vector<int>> best_orders_;
    long long leaves_ = 0;
};

inline void append_int(std::string& s, long long v) {
    char buf[24];
    auto [p, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    (void)ec;
    s.append(buf, p);
}

}  // namespace detail

/// Canonical certificate: equal for two graphs iff there is an isomorphism
/// preserving sigma, the vertex partition, external labels and the coloring.
/// Deterministic across runs.
inline std::string canonical_form(const HalfEdgeGraph& g,
                                  const std::vector<std::string>& colors = {},
                                  const CanonicalOptions& opt = {}) {
    detail::VertexView view(g, colors, opt);
    detail::CanonSearch s(view, opt);
    s.run();
    std::string out;
    out.reserve(16 + 8 * s.best_encoding().size());
    out += "CF1;";
    for (const auto& c : view.color_table) {
        out += '[';
        for (char ch : c) {
            if (ch == '\\' || ch == '[' || ch == ']') out += '\\';
            out += ch;
        }
        out += ']';
    }
    out += ';';
    bool first = true;
    for (long long t : s.best_encoding()) {
        if (!first) out += ',';
        detail::append_int(out, t);
        first = false;
    }
    return out;
}

/// All color/label preserving permutations of the vertices.
inline std::vector<std::vector<int>> vertex_automorphisms(
    const HalfEdgeGraph& g, const std::vector<std::string>& colors = {},
    const CanonicalOptions& opt = {}) {
    if (g.num_vertices() == 0) return {{}};
    detail::VertexView view(g, colors, opt);
    detail::CanonSearch s(view, opt);
    s.run();
    const auto& orders = s.best_orderings();
    std::vector<std::vector<int>> perms;
    const auto& base = orders.front();
    for (const auto& o : orders) {
        std::vector<int> p(g.num_vertices());
        for (int i = 0; i < g.num_vertices(); ++i) p[base[i]] = o[i];
        perms.push_back(p);
    }
    std::sort(perms.begin(), perms.end());
    perms.erase(std::unique(perms.begin(), perms.end()), perms.end());
    return perms;
}

/// Order of the full automorphism group acting on half-edges.  Each vertex
/// automorphism lifts independently over parallel-edge bundles (m! matchings
/// each), loops (l! matchings, 2 flips per loop) and same-vertex anonymous
/// legs (a! matchings).
inline BigInt automorphism_order(const HalfEdgeGraph& g,
                                 const std::vector<std::string>& colors = {},
                                 const CanonicalOptions& opt = {}) {
    auto vauts = vertex_automorphisms(g, colors, opt);
    detail::VertexView view(g, colors, opt);
    std::vector<int> anon(view.n, 0);
    for (int h : g.external_half_edges()) {
        auto lab = g.label_of(h);
        if (!lab || opt.ignore_external_labels) anon[g.vertex_of(h)]++;
    }
    BigInt lifts = 1;
    for (int v = 0; v < view.n; ++v) {
        lifts *= factorial(view.loops[v]) * int_pow(2, view.loops[v]);
        lifts *= factorial(anon[v]);
        for (int u = 0; u < v; ++u) lifts *= factorial(view.m(v, u));
    }
    return BigInt(vauts.size()) * lifts;
}

/// Explicit automorphisms as half-edge permutations.  Exponential in the
/// symmetry of the graph; guarded by max_list.
inline std::vector<std::vector<int>> automorphisms(
    const HalfEdgeGraph& g, const std::vector<std::string>& colors = {},
    const CanonicalOptions& opt = {}, long long max_list = 1'000'000) {
    BigInt order = automorphism_order(g, colors, opt);
    if (order > max_list)
        throw std::runtime_error("automorphism group too large to list");
    auto vauts = vertex_automorphisms(g, colors, opt);

    const int m = g.num_half_edges();
    const int n = g.num_vertices();
    // Slots per vertex: labeled legs, anonymous legs, loop pairs, bundles.
    std::vector<std::map<int, int>> labeled(n);  // label -> half-edge
    std::vector<std::vector<int>> anon(n);       // anonymous legs
    std::vector<std::vector<std::pair<int, int>>> loops(n);
    std::map<std::pair<int, int>, std::vector<std::pair<int, int>>> bundles;
    for (int h = 0; h < m; ++h) {
        if (g.is_external(h)) {
            auto lab = g.label_of(h);
            if (lab && !opt.ignore_external_labels)
                labeled[g.vertex_of(h)][*lab] = h;
            else
                anon[g.vertex_of(h)].push_back(h);
        }
    }
    for (auto [a, b] : g.internal_edges()) {
        int u = g.vertex_of(a), v = g.vertex_of(b);
        if (u == v)
            loops[u].emplace_back(a, b);
        else if (u < v)
            bundles[{u, v}].emplace_back(a, b);
        else
            bundles[{v, u}].emplace_back(b, a);
    }

    std::vector<std::vector<int>> result;
    for (const auto& vp : vauts) {
        std::vector<int> perm(m, -1);
        bool ok = true;
        for (int v = 0; v < n && ok; ++v)
            for (auto [lab, h] : labeled[v]) {
                auto it = labeled[vp[v]].find(lab);
                if (it == labeled[vp[v]].end()) {
                    ok = false;
                    break;
                }
                perm[h] = it->second;
            }
        if (!ok) continue;

        std::vector<std::vector<std::vector<int>>> choices;  // alternatives per slot
        auto push_bijections = [&](const std::vector<int>& from, const std::vector<int>& to) {
            std::vector<std::vector<int>> alts;
            std::vector<int> idx(to.size());
            std::iota(idx.begin(), idx.end(), 0);
            do {
                std::vector<int> assign;
                for (size_t i = 0; i < from.size(); ++i) {
                    assign.push_back(from[i]);
                    assign.push_back(to[idx[i]]);
                }
                alts.push_back(assign);
            } while (std::next_permutation(idx.begin(), idx.end()));
            choices.push_back(alts);
        };
        for (int v = 0; v < n; ++v)
            if (!anon[v].empty()) push_bijections(anon[v], anon[vp[v]]);
        for (int v = 0; v < n; ++v) {
            if (loops[v].empty()) continue;
            const auto& from = loops[v];
            const auto& to = loops[vp[v]];
            std::vector<std::vector<int>> alts;
            std::vector<int> idx(to.size());
            std::iota(idx.begin(), idx.end(), 0);
            do {
                for (int flips = 0; flips < (1 << from.size()); ++flips) {
                    std::vector<int> assign;
                    for (size_t i = 0; i < from.size(); ++i) {
                        auto [a, b] = from[i];
                        auto [c, d] = to[idx[i]];
                        if (flips >> i & 1) std::swap(c, d);
                        assign.push_back(a);
                        assign.push_back(c);
                        assign.push_back(b);
                        assign.push_back(d);
                    }
                    alts.push_back(assign);
                }
            } while (std::next_permutation(idx.begin(), idx.end()));
            choices.push_back(alts);
        }
        for (const auto& [uv, edges] : bundles) {
            auto [u, v] = uv;
            int iu = vp[u], iv = vp[v];
            bool swap_sides = iu > iv;
            auto bkey = swap_sides ? std::make_pair(iv, iu) : std::make_pair(iu, iv);
            const auto& to = bundles.at(bkey);
            std::vector<std::vector<int>> alts;
            std::vector<int> idx(to.size());
            std::iota(idx.begin(), idx.end(), 0);
            do {
                std::vector<int> assign;
                for (size_t i = 0; i < edges.size(); ++i) {
                    auto [a, b] = edges[i];
                    auto [c, d] = to[idx[i]];
                    if (swap_sides) std::swap(c, d);
                    assign.push_back(a);
                    assign.push_back(c);
                    assign.push_back(b);
                    assign.push_back(d);
                }
                alts.push_back(assign);
            } while (std::next_permutation(idx.begin(), idx.end()));
            choices.push_back(alts);
        }

        std::vector<int> pick(choices.size(), 0);
        while (true) {
            std::vector<int> full = perm;
            for (size_t s = 0; s < choices.size(); ++s) {
                const auto& assign = choices[s][pick[s]];
                for (size_t i = 0; i + 1 < assign.size(); i += 2) full[assign[i]] = assign[i + 1];
            }
            result.push_back(full);
            size_t s = 0;
            while (s < choices.size()) {
                if (++pick[s] < static_cast<int>(choices[s].size())) break;
                pick[s] = 0;
                ++s;
            }
            if (s == choices.size()) break;
        }
    }
    std::sort(result.begin(), result.end());
    result.erase(std::unique(result.begin(), result.end()), result.end());
    return result;
}

}  // namespace stabcomb
