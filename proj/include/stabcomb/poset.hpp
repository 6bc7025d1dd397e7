#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "stabcomb/decorated.hpp"
#include "stabcomb/enumerate.hpp"

namespace stabcomb {

/// Poset of isomorphism classes under edge contraction.  Elements are
/// canonical certificates; [G] <= [G'] when G' is obtained from G by
/// contracting edges.  The relation is stored as the reflexive-transitive
/// closure of the recorded covers.
struct ContractionPoset {
    std::vector<std::string> elements;                 // certificates, sorted
    std::vector<DecoratedGraph> representatives;       // parallel to elements
    std::vector<std::pair<int, int>> covers;           // (smaller, larger)
    std::vector<std::vector<bool>> leq;                // closure matrix

    int index_of(const std::string& cert) const {
        auto it = std::lower_bound(elements.begin(), elements.end(), cert);
        if (it == elements.end() || *it != cert)
            throw std::invalid_argument("certificate not in poset");
        return static_cast<int>(it - elements.begin());
    }

    bool less_equal(int a, int b) const { return leq[a][b]; }

    /// True when no two distinct elements are mutually comparable.
    bool is_antisymmetric() const {
        const int n = static_cast<int>(elements.size());
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b)
                if (leq[a][b] && leq[b][a]) return false;
        return true;
    }

    /// Covers of the closure: the transitive reduction of the relation.
    std::vector<std::pair<int, int>> hasse_edges() const {
        std::vector<std::pair<int, int>> out;
        const int n = static_cast<int>(elements.size());
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) {
                if (a == b || !leq[a][b]) continue;
                bool direct = true;
                for (int c = 0; c < n && direct; ++c)
                    if (c != a && c != b && leq[a][c] && leq[c][b]) direct = false;
                if (direct) out.emplace_back(a, b);
            }
        return out;
    }
};

namespace detail {

inline void reflexive_transitive_closure(std::vector<std::vector<bool>>& m) {
    const int n = static_cast<int>(m.size());
    for (int i = 0; i < n; ++i) m[i][i] = true;
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i) {
            if (!m[i][k]) continue;
            for (int j = 0; j < n; ++j)
                if (m[k][j]) m[i][j] = true;
        }
}

}  // namespace detail

/// All single-edge contractions of a stable decorated graph, as decorated
/// graphs.  Contracting any edge of a stable graph is stable again.
inline std::vector<DecoratedGraph> single_edge_contractions(const DecoratedGraph& d) {
    std::vector<DecoratedGraph> out;
    for (auto e : d.graph.internal_edges()) out.push_back(contract_decorated(d, {e}).first);
    return out;
}

/// Poset on all of the enumerated classes: covers are single-edge stable
/// contractions, the order is their reflexive-transitive closure.
inline ContractionPoset build_stab_poset(int h, int n, const ClassVector& beta,
                                         const CurveClassMonoid& monoid = {},
                                         const EnumerationLimits& limits = {}) {
    auto classes = enumerate_stab(h, n, beta, monoid, limits);
    ContractionPoset p;
    for (auto& d : classes) p.elements.push_back(d.certificate());
    p.representatives = std::move(classes);
    // enumerate_stab returns certificates sorted; keep that order
    const int nc = static_cast<int>(p.elements.size());
    std::vector<std::vector<bool>> rel(nc, std::vector<bool>(nc, false));
    std::set<std::pair<int, int>> cover_set;
    for (int i = 0; i < nc; ++i) {
        for (auto& q : single_edge_contractions(p.representatives[i])) {
            int j = p.index_of(q.certificate());
            rel[i][j] = true;
            cover_set.emplace(i, j);
        }
    }
    p.covers.assign(cover_set.begin(), cover_set.end());
    detail::reflexive_transitive_closure(rel);
    p.leq = std::move(rel);
    return p;
}

/// Poset on the saturated classes: the closure of the image of the full
/// contraction order under saturation.
inline ContractionPoset build_q_poset(int h, int n, const ClassVector& beta,
                                      const CurveClassMonoid& monoid = {},
                                      const EnumerationLimits& limits = {}) {
    auto stab = build_stab_poset(h, n, beta, monoid, limits);
    ContractionPoset q;
    std::map<std::string, DecoratedGraph> saturated;  // certificate -> rep
    std::vector<int> image(stab.elements.size());
    std::vector<std::string> image_cert(stab.elements.size());
    for (size_t i = 0; i < stab.representatives.size(); ++i) {
        auto s = saturate(stab.representatives[i]);
        auto cert = s.certificate();
        saturated.emplace(cert, std::move(s));
        image_cert[i] = std::move(cert);
    }
    for (auto& [cert, rep] : saturated) {
        q.elements.push_back(cert);
        q.representatives.push_back(rep);
    }
    for (size_t i = 0; i < image_cert.size(); ++i) image[i] = q.index_of(image_cert[i]);

    const int nq = static_cast<int>(q.elements.size());
    std::vector<std::vector<bool>> rel(nq, std::vector<bool>(nq, false));
    std::set<std::pair<int, int>> cover_set;
    for (auto [a, b] : stab.covers) {
        if (image[a] == image[b]) continue;
        rel[image[a]][image[b]] = true;
        cover_set.emplace(image[a], image[b]);
    }
    q.covers.assign(cover_set.begin(), cover_set.end());
    detail::reflexive_transitive_closure(rel);
    q.leq = std::move(rel);
    return q;
}

/// Checks that the invariant is weakly monotone along the full relation.
inline bool invariant_monotone(const ContractionPoset& p) {
    const int n = static_cast<int>(p.elements.size());
    std::vector<std::array<long long, 3>> inv(n);
    for (int i = 0; i < n; ++i) inv[i] = invariant_I(p.representatives[i]);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (a != b && p.leq[a][b] && !(inv[a] <= inv[b])) return false;
    return true;
}

}  // namespace stabcomb
