#pragma once

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "graphcode/bitvec.hpp"

namespace graphcode {

/// Position of edge {i,j} (i<j) in the lexicographic pair order of K_n.
inline std::size_t edge_index(int i, int j, int n) {
    if (i < 0 || i >= j || j >= n)
        throw std::domain_error("edge_index: requires 0 <= i < j < n");
    const std::size_t si = static_cast<std::size_t>(i);
    const std::size_t sj = static_cast<std::size_t>(j);
    const std::size_t sn = static_cast<std::size_t>(n);
    return si * (2 * sn - si - 1) / 2 + (sj - si - 1);
}

inline std::size_t edge_slots(int n) {
    if (n < 1) throw std::domain_error("edge_slots: n must be >= 1");
    return static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2;
}

/// Graph on {0..n-1} stored as an edge-indexed bit vector of length C(n,2).
struct LabeledGraph {
    int n = 1;
    BitVec edges;

    LabeledGraph() : edges(0) {}
    explicit LabeledGraph(int vertex_count) : n(vertex_count), edges(edge_slots(vertex_count)) {}
    LabeledGraph(int vertex_count, BitVec edge_bits) : n(vertex_count), edges(std::move(edge_bits)) {
        if (edges.size() != edge_slots(vertex_count))
            throw std::domain_error("LabeledGraph: edge vector length must be C(n,2)");
    }

    bool has_edge(int i, int j) const {
        if (i > j) std::swap(i, j);
        return edges.test(edge_index(i, j, n));
    }

    void set_edge(int i, int j, bool present = true) {
        if (i > j) std::swap(i, j);
        edges.set(edge_index(i, j, n), present);
    }

    std::size_t edge_count() const { return edges.count(); }
    bool is_empty() const { return edges.none(); }

    bool operator==(const LabeledGraph& other) const = default;

    std::vector<std::pair<int, int>> edge_list() const {
        std::vector<std::pair<int, int>> out;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (edges.test(edge_index(i, j, n))) out.emplace_back(i, j);
        return out;
    }

    int degree(int v) const {
        int d = 0;
        for (int u = 0; u < n; ++u)
            if (u != v && has_edge(std::min(u, v), std::max(u, v))) ++d;
        return d;
    }

    /// Non-isolated vertices, increasing.
    std::vector<int> support() const {
        std::vector<int> s;
        for (int v = 0; v < n; ++v)
            if (degree(v) > 0) s.push_back(v);
        return s;
    }
};

inline LabeledGraph symmetric_difference(const LabeledGraph& g1, const LabeledGraph& g2) {
    if (g1.n != g2.n)
        throw std::domain_error("symmetric_difference: vertex counts differ");
    return LabeledGraph(g1.n, g1.edges ^ g2.edges);
}

inline LabeledGraph complete_graph(int n) {
    LabeledGraph g(n);
    for (std::size_t e = 0; e < g.edges.size(); ++e) g.edges.set(e);
    return g;
}

inline LabeledGraph graph_from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    LabeledGraph g(n);
    for (auto [i, j] : edges) g.set_edge(i, j);
    return g;
}

inline bool lex_less(const LabeledGraph& a, const LabeledGraph& b) {
    if (a.n != b.n) return a.n < b.n;
    return a.edges.lex_less(b.edges);
}

}  // namespace graphcode
