#pragma once

#include <algorithm>
#include <vector>

#include "graphcode/bch.hpp"
#include "graphcode/codes.hpp"
#include "graphcode/family.hpp"
#include "graphcode/graph.hpp"

namespace graphcode {

namespace detail {

/// Smallest s in [2,16] with 2^s - 1 >= m.
inline int field_degree_for(int m) {
    for (int s = 2; s <= 16; ++s)
        if ((1 << s) - 1 >= m) return s;
    throw resource_error("field_degree_for: m exceeds 2^16 - 1");
}

/// Parity matrix whose column at edge e is columns[color(e)].
inline BitMatrix parity_from_coloring(int n, const std::vector<int>& edge_color,
                                      const std::vector<BitVec>& columns, int rows) {
    BitMatrix parity(static_cast<std::size_t>(rows), edge_slots(n));
    for (std::size_t e = 0; e < edge_color.size(); ++e) {
        const BitVec& col = columns[static_cast<std::size_t>(edge_color[e])];
        for (int r = 0; r < rows; ++r)
            if (col.test(static_cast<std::size_t>(r))) parity.rows[static_cast<std::size_t>(r)].set(e);
    }
    return parity;
}

inline std::vector<int> round_robin_coloring(int n, int m) {
    std::vector<int> color(edge_slots(n));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            color[edge_index(i, j, n)] = (i + j) % m;
    return color;
}

inline std::vector<int> min_endpoint_coloring(int n) {
    std::vector<int> color(edge_slots(n));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) color[edge_index(i, j, n)] = i;
    return color;
}

}  // namespace detail

/// Star-free code: proper round-robin edge coloring of K_n composed with
/// strength-k BCH columns; no two members differ by a copy of K_{1,2k}.
inline LinearGraphCode star_code(int n, int k) {
    if (k < 1) throw std::domain_error("star_code: k must be >= 1");
    if (n < 2 * k + 1) throw std::domain_error("star_code: requires n >= 2k+1");
    const int m = (n % 2 == 1) ? n : n + 1;
    const int s = detail::field_degree_for(m);
    const ColumnSet cs = build_columns(s, k, false);
    LinearGraphCode code;
    code.n = n;
    code.parity = detail::parity_from_coloring(n, detail::round_robin_coloring(n, m),
                                               cs.columns, cs.row_count());
    code.provenance = {"star", {{"n", n}, {"k", k}, {"s", s}, {"colors", m}}};
    return code;
}

/// Matching-free code: color classes are stars (color = min endpoint), so
/// a 2k-matching spreads over 2k distinct classes.
inline LinearGraphCode matching_code(int n, int k) {
    if (k < 1) throw std::domain_error("matching_code: k must be >= 1");
    if (n < 4 * k) throw std::domain_error("matching_code: requires n >= 4k");
    const int s = detail::field_degree_for(n - 1);
    const ColumnSet cs = build_columns(s, k, false);
    LinearGraphCode code;
    code.n = n;
    code.parity = detail::parity_from_coloring(n, detail::min_endpoint_coloring(n),
                                               cs.columns, cs.row_count());
    code.provenance = {"matching", {{"n", n}, {"k", k}, {"s", s}, {"colors", n - 1}}};
    return code;
}

/// Bounded-clique code: min-endpoint coloring with parity-augmented
/// strength-r columns; blocks all cliques on up to 4r+3 vertices.
inline LinearGraphCode small_clique_code(int n, int r) {
    if (r < 1) throw std::domain_error("small_clique_code: r must be >= 1");
    if (n < 2) throw std::domain_error("small_clique_code: requires n >= 2");
    const int s = detail::field_degree_for(std::max(n - 1, 1));
    const ColumnSet cs = build_columns(s, r, true);
    LinearGraphCode code;
    code.n = n;
    code.parity = detail::parity_from_coloring(n, detail::min_endpoint_coloring(n),
                                               cs.columns, cs.row_count());
    code.provenance = {"small-clique", {{"n", n}, {"r", r}, {"s", s}}};
    return code;
}

/// Block-triangle clique code with co-dimension exactly floor(n/2). Row i
/// holds all edges of the triangles on B_i ∪ {j} for B_i = {2i, 2i+1} and
/// 2i+1 < j < n; every clique on >= 2 vertices meets some row oddly. Even
/// n is handled by building for n+1 and dropping the last vertex.
inline LinearGraphCode clique_linear_code(int n) {
    if (n < 2) throw std::domain_error("clique_linear_code: requires n >= 2");
    const int n_odd = (n % 2 == 1) ? n : n + 1;
    const int row_total = (n_odd - 1) / 2;
    const std::size_t ncols = edge_slots(n);
    LinearGraphCode code;
    code.n = n;
    code.parity = BitMatrix(static_cast<std::size_t>(row_total), ncols);
    for (int i = 0; i < row_total; ++i) {
        BitVec row(ncols);
        const int a = 2 * i, b = 2 * i + 1;
        auto put = [&](int u, int v) {
            if (u < n && v < n) row.set(edge_index(u, v, n));
        };
        put(a, b);
        for (int j = b + 1; j < n_odd; ++j) {
            put(a, j);
            put(b, j);
        }
        code.parity.rows[static_cast<std::size_t>(i)] = std::move(row);
    }
    code.provenance = {"clique-linear", {{"n", n}}};
    return code;
}

/// Single all-ones parity row: the graphs with an even number of edges.
/// An H-code whenever every forbidden graph has an odd edge count.
inline LinearGraphCode even_parity_code(int n) {
    if (n < 1) throw std::domain_error("even_parity_code: requires n >= 1");
    LinearGraphCode code;
    code.n = n;
    code.parity = BitMatrix(1, edge_slots(n));
    for (std::size_t e = 0; e < edge_slots(n); ++e) code.parity.rows[0].set(e);
    code.provenance = {"even-parity", {{"n", n}}};
    return code;
}

/// Upper-bound certificate: m copies of H' sharing an independent set,
/// pairwise differences all copies of H (H' doubled across the set),
/// forming a clique of size m in the Cayley graph.
struct CliqueCertificate {
    LabeledGraph hprime;
    std::vector<int> indep;
    int n = 0;
    int m = 0;
    std::vector<LabeledGraph> copies;
    LabeledGraph doubled;  // H
};

/// H' doubled across its independent set: two private copies of the other
/// vertices, shared independent vertices at the top.
inline LabeledGraph doubled_pattern(const LabeledGraph& hprime, const std::vector<int>& indep) {
    const int b = static_cast<int>(indep.size());
    const int a = hprime.n - b;
    std::vector<int> map_first(static_cast<std::size_t>(hprime.n), -1);
    std::vector<int> map_second(static_cast<std::size_t>(hprime.n), -1);
    std::vector<bool> is_indep(static_cast<std::size_t>(hprime.n), false);
    for (int v : indep) is_indep[static_cast<std::size_t>(v)] = true;
    int next = 0;
    for (int v = 0; v < hprime.n; ++v)
        if (!is_indep[static_cast<std::size_t>(v)]) {
            map_first[static_cast<std::size_t>(v)] = next;
            map_second[static_cast<std::size_t>(v)] = a + next;
            ++next;
        }
    int shared = 2 * a;
    for (int v : indep) {
        map_first[static_cast<std::size_t>(v)] = shared;
        map_second[static_cast<std::size_t>(v)] = shared;
        ++shared;
    }
    LabeledGraph h(2 * a + b);
    for (auto [u, v] : hprime.edge_list()) {
        h.set_edge(std::min(map_first[static_cast<std::size_t>(u)], map_first[static_cast<std::size_t>(v)]),
                   std::max(map_first[static_cast<std::size_t>(u)], map_first[static_cast<std::size_t>(v)]));
        h.set_edge(std::min(map_second[static_cast<std::size_t>(u)], map_second[static_cast<std::size_t>(v)]),
                   std::max(map_second[static_cast<std::size_t>(u)], map_second[static_cast<std::size_t>(v)]));
    }
    return h;
}

/// Builds the certificate with the shared independent set on the top b
/// vertices and copy i on private vertices {i*a .. (i+1)*a - 1}, then
/// self-checks every pairwise difference against H by isomorphism.
inline CliqueCertificate doubled_clique_certificate(const LabeledGraph& hprime,
                                                    const std::vector<int>& indep, int n) {
    for (std::size_t x = 0; x < indep.size(); ++x) {
        if (indep[x] < 0 || indep[x] >= hprime.n)
            throw std::domain_error("doubled_clique_certificate: indep vertex out of range");
        for (std::size_t y = x + 1; y < indep.size(); ++y)
            if (hprime.has_edge(std::min(indep[x], indep[y]), std::max(indep[x], indep[y])))
                throw std::domain_error("doubled_clique_certificate: set is not independent");
    }
    const int b = static_cast<int>(indep.size());
    const int a = hprime.n - b;
    if (a < 1) throw std::domain_error("doubled_clique_certificate: H' has no private vertex");
    if (n < hprime.n) throw std::domain_error("doubled_clique_certificate: n below |V(H')|");

    CliqueCertificate cert;
    cert.hprime = hprime;
    cert.indep = indep;
    cert.n = n;
    cert.m = (n - b) / a;
    cert.doubled = doubled_pattern(hprime, indep);

    std::vector<bool> is_indep(static_cast<std::size_t>(hprime.n), false);
    for (int v : indep) is_indep[static_cast<std::size_t>(v)] = true;
    std::vector<int> shared_slot(static_cast<std::size_t>(hprime.n), -1);
    {
        int next = n - b;
        for (int v : indep) shared_slot[static_cast<std::size_t>(v)] = next++;
    }
    for (int i = 0; i < cert.m; ++i) {
        std::vector<int> map(static_cast<std::size_t>(hprime.n), -1);
        int priv = i * a;
        for (int v = 0; v < hprime.n; ++v)
            map[static_cast<std::size_t>(v)] =
                is_indep[static_cast<std::size_t>(v)] ? shared_slot[static_cast<std::size_t>(v)] : priv++;
        LabeledGraph copy(n);
        for (auto [u, v] : hprime.edge_list())
            copy.set_edge(std::min(map[static_cast<std::size_t>(u)], map[static_cast<std::size_t>(v)]),
                          std::max(map[static_cast<std::size_t>(u)], map[static_cast<std::size_t>(v)]));
        cert.copies.push_back(std::move(copy));
    }
    for (std::size_t i = 0; i < cert.copies.size(); ++i)
        for (std::size_t j = i + 1; j < cert.copies.size(); ++j)
            if (!isomorphic(symmetric_difference(cert.copies[i], cert.copies[j]), cert.doubled))
                throw integrity_error("doubled_clique_certificate: pairwise difference is not a copy of H");
    return cert;
}

}  // namespace graphcode
