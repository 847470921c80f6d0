#pragma once

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "graphcode/graph.hpp"

namespace graphcode {

namespace detail {

/// Restriction of g to its non-isolated vertices, relabeled 0..k-1.
inline LabeledGraph support_restriction(const LabeledGraph& g) {
    const std::vector<int> sup = g.support();
    const int k = static_cast<int>(sup.size());
    LabeledGraph out(std::max(k, 1));
    for (int a = 0; a < k; ++a)
        for (int b = a + 1; b < k; ++b)
            if (g.has_edge(sup[a], sup[b])) out.set_edge(a, b);
    return out;
}

inline bool iso_backtrack(const LabeledGraph& a, const LabeledGraph& b,
                          std::vector<int>& map, std::vector<bool>& used, int next) {
    const int k = a.n;
    if (next == k) return true;
    for (int cand = 0; cand < k; ++cand) {
        if (used[cand]) continue;
        if (a.degree(next) != b.degree(cand)) continue;
        bool ok = true;
        for (int prev = 0; prev < next && ok; ++prev)
            if (a.has_edge(prev, next) != b.has_edge(map[prev], cand)) ok = false;
        if (!ok) continue;
        map[next] = cand;
        used[cand] = true;
        if (iso_backtrack(a, b, map, used, next + 1)) return true;
        used[cand] = false;
    }
    return false;
}

}  // namespace detail

/// Isomorphism of the non-isolated-vertex restrictions, by backtracking
/// with degree pruning.
inline bool isomorphic(const LabeledGraph& g1, const LabeledGraph& g2) {
    LabeledGraph a = detail::support_restriction(g1);
    LabeledGraph b = detail::support_restriction(g2);
    if (a.n != b.n || a.edge_count() != b.edge_count()) return false;
    std::vector<int> da, db;
    for (int v = 0; v < a.n; ++v) da.push_back(a.degree(v));
    for (int v = 0; v < b.n; ++v) db.push_back(b.degree(v));
    std::sort(da.begin(), da.end());
    std::sort(db.begin(), db.end());
    if (da != db) return false;
    std::vector<int> map(static_cast<std::size_t>(a.n), -1);
    std::vector<bool> used(static_cast<std::size_t>(a.n), false);
    return detail::iso_backtrack(a, b, map, used, 0);
}

/// Declarative description of the forbidden family H. The first five
/// variants are closed under isomorphism by construction; Explicit is a
/// literal list of labeled graphs.
struct ForbiddenFamily {
    enum class Kind { Star, Matching, AllCliques, CliquesUpTo, IsoCopiesOf, Explicit };

    Kind kind = Kind::AllCliques;
    int t = 0;  // edge count for Star/Matching, vertex cap for CliquesUpTo
    LabeledGraph pattern;
    std::vector<LabeledGraph> members;

    static ForbiddenFamily star(int t) {
        if (t < 1) throw std::domain_error("ForbiddenFamily: star needs t >= 1");
        ForbiddenFamily f;
        f.kind = Kind::Star;
        f.t = t;
        return f;
    }

    static ForbiddenFamily matching(int t) {
        if (t < 1) throw std::domain_error("ForbiddenFamily: matching needs t >= 1");
        ForbiddenFamily f;
        f.kind = Kind::Matching;
        f.t = t;
        return f;
    }

    static ForbiddenFamily all_cliques() {
        ForbiddenFamily f;
        f.kind = Kind::AllCliques;
        return f;
    }

    static ForbiddenFamily cliques_up_to(int r) {
        if (r < 2) throw std::domain_error("ForbiddenFamily: clique cap needs r >= 2");
        ForbiddenFamily f;
        f.kind = Kind::CliquesUpTo;
        f.t = r;
        return f;
    }

    static ForbiddenFamily iso_copies_of(LabeledGraph p) {
        if (p.is_empty())
            throw std::domain_error("ForbiddenFamily: pattern must have an edge");
        ForbiddenFamily f;
        f.kind = Kind::IsoCopiesOf;
        f.pattern = std::move(p);
        return f;
    }

    static ForbiddenFamily explicit_list(std::vector<LabeledGraph> list) {
        if (list.empty())
            throw std::domain_error("ForbiddenFamily: explicit list is empty");
        const int n = list.front().n;
        for (const LabeledGraph& g : list) {
            if (g.n != n)
                throw std::domain_error("ForbiddenFamily: explicit members on different n");
            if (g.is_empty())
                throw std::domain_error("ForbiddenFamily: explicit member has no edge");
        }
        ForbiddenFamily f;
        f.kind = Kind::Explicit;
        f.members = std::move(list);
        return f;
    }

    std::string describe() const {
        switch (kind) {
            case Kind::Star: return "star:" + std::to_string(t);
            case Kind::Matching: return "matching:" + std::to_string(t);
            case Kind::AllCliques: return "cliques";
            case Kind::CliquesUpTo: return "cliques<=" + std::to_string(t);
            case Kind::IsoCopiesOf: return "iso";
            case Kind::Explicit: return "explicit";
        }
        return "?";
    }
};

/// True iff g (ignoring isolated vertices) is a member of the family.
inline bool classify_membership(const LabeledGraph& g, const ForbiddenFamily& fam) {
    switch (fam.kind) {
        case ForbiddenFamily::Kind::Star: {
            const auto edges = g.edge_list();
            if (edges.size() != static_cast<std::size_t>(fam.t)) return false;
            if (fam.t == 1) return true;
            // all edges must share one vertex
            for (int c : {edges[0].first, edges[0].second}) {
                bool all = true;
                for (auto [i, j] : edges)
                    if (i != c && j != c) {
                        all = false;
                        break;
                    }
                if (all) return true;
            }
            return false;
        }
        case ForbiddenFamily::Kind::Matching: {
            if (g.edge_count() != static_cast<std::size_t>(fam.t)) return false;
            for (int v = 0; v < g.n; ++v)
                if (g.degree(v) > 1) return false;
            return true;
        }
        case ForbiddenFamily::Kind::AllCliques:
        case ForbiddenFamily::Kind::CliquesUpTo: {
            const std::vector<int> sup = g.support();
            const std::size_t k = sup.size();
            if (k < 2) return false;
            if (fam.kind == ForbiddenFamily::Kind::CliquesUpTo &&
                k > static_cast<std::size_t>(fam.t))
                return false;
            return g.edge_count() == k * (k - 1) / 2 &&
                   [&] {
                       for (std::size_t a = 0; a < k; ++a)
                           for (std::size_t b = a + 1; b < k; ++b)
                               if (!g.has_edge(sup[a], sup[b])) return false;
                       return true;
                   }();
        }
        case ForbiddenFamily::Kind::IsoCopiesOf:
            return isomorphic(g, fam.pattern);
        case ForbiddenFamily::Kind::Explicit: {
            const int fn = fam.members.front().n;
            if (g.n != fn)
                throw std::domain_error("classify_membership: explicit family on different n");
            for (const LabeledGraph& m : fam.members)
                if (g == m) return true;
            return false;
        }
    }
    return false;
}

namespace detail {

inline void emit_matchings(int n, int t, std::size_t first_edge, LabeledGraph& partial,
                           std::vector<bool>& used_vertex, int chosen,
                           std::vector<LabeledGraph>& out) {
    if (chosen == t) {
        out.push_back(partial);
        return;
    }
    const std::size_t total = edge_slots(n);
    for (std::size_t e = first_edge; e < total; ++e) {
        // decode e back to (i,j)
        int i = 0;
        std::size_t base = 0;
        while (base + static_cast<std::size_t>(n - 1 - i) <= e) {
            base += static_cast<std::size_t>(n - 1 - i);
            ++i;
        }
        const int j = i + 1 + static_cast<int>(e - base);
        if (used_vertex[static_cast<std::size_t>(i)] || used_vertex[static_cast<std::size_t>(j)])
            continue;
        used_vertex[static_cast<std::size_t>(i)] = used_vertex[static_cast<std::size_t>(j)] = true;
        partial.edges.set(e);
        emit_matchings(n, t, e + 1, partial, used_vertex, chosen + 1, out);
        partial.edges.set(e, false);
        used_vertex[static_cast<std::size_t>(i)] = used_vertex[static_cast<std::size_t>(j)] = false;
    }
}

inline void emit_subsets(int n, int size, int start, std::vector<int>& subset,
                         std::vector<LabeledGraph>& out) {
    if (static_cast<int>(subset.size()) == size) {
        LabeledGraph g(n);
        for (std::size_t a = 0; a < subset.size(); ++a)
            for (std::size_t b = a + 1; b < subset.size(); ++b)
                g.set_edge(subset[a], subset[b]);
        out.push_back(std::move(g));
        return;
    }
    for (int v = start; v < n; ++v) {
        subset.push_back(v);
        emit_subsets(n, size, v + 1, subset, out);
        subset.pop_back();
    }
}

inline void emit_injections(const LabeledGraph& pattern, int n, std::vector<int>& map,
                            std::vector<bool>& used, std::vector<LabeledGraph>& out) {
    const int k = pattern.n;
    const int next = static_cast<int>(map.size());
    if (next == k) {
        LabeledGraph g(n);
        for (int a = 0; a < k; ++a)
            for (int b = a + 1; b < k; ++b)
                if (pattern.has_edge(a, b)) g.set_edge(map[static_cast<std::size_t>(a)], map[static_cast<std::size_t>(b)]);
        out.push_back(std::move(g));
        return;
    }
    for (int v = 0; v < n; ++v) {
        if (used[static_cast<std::size_t>(v)]) continue;
        map.push_back(v);
        used[static_cast<std::size_t>(v)] = true;
        emit_injections(pattern, n, map, used, out);
        used[static_cast<std::size_t>(v)] = false;
        map.pop_back();
    }
}

inline void sort_dedupe(std::vector<LabeledGraph>& copies) {
    std::sort(copies.begin(), copies.end(),
              [](const LabeledGraph& a, const LabeledGraph& b) { return lex_less(a, b); });
    copies.erase(std::unique(copies.begin(), copies.end()), copies.end());
}

}  // namespace detail

/// All labeled copies of the family's members inside K_n, each exactly
/// once, in lexicographic order of the edge bit vectors.
inline std::vector<LabeledGraph> enumerate_copies(const ForbiddenFamily& fam, int n) {
    std::vector<LabeledGraph> copies;
    switch (fam.kind) {
        case ForbiddenFamily::Kind::Star: {
            if (fam.t == 1) {
                for (int i = 0; i < n; ++i)
                    for (int j = i + 1; j < n; ++j)
                        copies.push_back(graph_from_edges(n, {{i, j}}));
                break;
            }
            std::vector<int> leaves;
            for (int center = 0; center < n; ++center) {
                std::vector<int> others;
                for (int v = 0; v < n; ++v)
                    if (v != center) others.push_back(v);
                if (static_cast<int>(others.size()) < fam.t) continue;
                std::vector<int> idx(static_cast<std::size_t>(fam.t));
                std::iota(idx.begin(), idx.end(), 0);
                while (true) {
                    LabeledGraph g(n);
                    for (int k = 0; k < fam.t; ++k) {
                        const int leaf = others[static_cast<std::size_t>(idx[static_cast<std::size_t>(k)])];
                        g.set_edge(std::min(center, leaf), std::max(center, leaf));
                    }
                    copies.push_back(std::move(g));
                    // next combination
                    int k = fam.t - 1;
                    while (k >= 0 && idx[static_cast<std::size_t>(k)] ==
                                         static_cast<int>(others.size()) - fam.t + k)
                        --k;
                    if (k < 0) break;
                    ++idx[static_cast<std::size_t>(k)];
                    for (int m = k + 1; m < fam.t; ++m)
                        idx[static_cast<std::size_t>(m)] = idx[static_cast<std::size_t>(m - 1)] + 1;
                }
            }
            break;
        }
        case ForbiddenFamily::Kind::Matching: {
            LabeledGraph partial(n);
            std::vector<bool> used(static_cast<std::size_t>(n), false);
            detail::emit_matchings(n, fam.t, 0, partial, used, 0, copies);
            break;
        }
        case ForbiddenFamily::Kind::AllCliques:
        case ForbiddenFamily::Kind::CliquesUpTo: {
            const int limit = fam.kind == ForbiddenFamily::Kind::AllCliques
                                  ? n
                                  : std::min(fam.t, n);
            std::vector<int> subset;
            for (int size = 2; size <= limit; ++size)
                detail::emit_subsets(n, size, 0, subset, copies);
            break;
        }
        case ForbiddenFamily::Kind::IsoCopiesOf: {
            const LabeledGraph pat = detail::support_restriction(fam.pattern);
            if (pat.n > n)
                throw std::domain_error("enumerate_copies: pattern larger than n");
            std::vector<int> map;
            std::vector<bool> used(static_cast<std::size_t>(n), false);
            detail::emit_injections(pat, n, map, used, copies);
            break;
        }
        case ForbiddenFamily::Kind::Explicit: {
            if (fam.members.front().n != n)
                throw std::domain_error("enumerate_copies: explicit family has different n");
            copies = fam.members;
            break;
        }
    }
    detail::sort_dedupe(copies);
    return copies;
}

}  // namespace graphcode
