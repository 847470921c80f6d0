#pragma once

#include <algorithm>
#include <bit>
#include <chrono>
#include <cstdint>
#include <vector>

#include "graphcode/codes.hpp"
#include "graphcode/family.hpp"
#include "graphcode/subspaces.hpp"

namespace graphcode {

enum class SearchStatus { Proven, TimeLimitedLowerBound, NotFound };

struct SearchStats {
    std::uint64_t nodes = 0;
    double elapsed_seconds = 0;
};

struct MaxCodeResult {
    std::int64_t value = 0;
    ExplicitGraphCode witness;
    SearchStats stats;
    SearchStatus status = SearchStatus::Proven;
};

struct MinCodimResult {
    int codim = 0;
    LinearGraphCode witness;
    SearchStats stats;
    SearchStatus status = SearchStatus::Proven;
};

struct CliqueWitness {
    bool found = false;
    std::vector<int> subset;    // vertex set A
    std::vector<int> parities;  // |E(clique on A) ∩ E(G_s)| mod 2, per input graph
};

namespace detail {

struct MaxisSearch {
    const std::vector<bool>& conn;  // conn[v^w] == adjacency
    const std::vector<int>& clique_class;
    std::vector<int> stamp;
    int generation = 0;
    std::uint64_t nodes = 0;
    std::int64_t best = 0;
    std::vector<std::uint32_t> best_set;
    std::vector<std::uint32_t> chosen;
    std::chrono::steady_clock::time_point deadline;
    bool timed_out = false;

    MaxisSearch(const std::vector<bool>& c, const std::vector<int>& cc)
        : conn(c), clique_class(cc), stamp(cc.size(), -1) {}

    int cover_bound(const std::vector<std::uint32_t>& cands) {
        ++generation;
        int distinct = 0;
        for (std::uint32_t v : cands) {
            const int cls = clique_class[v];
            if (stamp[static_cast<std::size_t>(cls)] != generation) {
                stamp[static_cast<std::size_t>(cls)] = generation;
                ++distinct;
            }
        }
        return distinct;
    }

    void run(const std::vector<std::uint32_t>& cands) {
        ++nodes;
        if ((nodes & 0x3FF) == 0 && std::chrono::steady_clock::now() > deadline) {
            timed_out = true;
            return;
        }
        if (timed_out) return;
        if (cands.empty()) {
            if (static_cast<std::int64_t>(chosen.size()) > best) {
                best = static_cast<std::int64_t>(chosen.size());
                best_set = chosen;
            }
            return;
        }
        if (static_cast<std::int64_t>(chosen.size()) + cover_bound(cands) <= best) return;
        const std::uint32_t v = cands[0];
        // include v (lexicographically-first branch)
        std::vector<std::uint32_t> rest;
        rest.reserve(cands.size() - 1);
        for (std::size_t i = 1; i < cands.size(); ++i)
            if (!conn[cands[i] ^ v]) rest.push_back(cands[i]);
        chosen.push_back(v);
        run(rest);
        chosen.pop_back();
        if (timed_out) return;
        // exclude v
        rest.assign(cands.begin() + 1, cands.end());
        run(rest);
    }
};

inline std::vector<bool> connection_bitset(int n, const ForbiddenFamily& fam, std::size_t& nbits) {
    nbits = edge_slots(n);
    if (nbits > 15)
        throw resource_error("max_code_exact: C(n,2) cap is 15 (n <= 6)");
    std::vector<bool> conn(std::size_t{1} << nbits, false);
    for (const LabeledGraph& c : enumerate_copies(fam, n))
        conn[c.edges.to_uint()] = true;
    return conn;
}

}  // namespace detail

/// Maximum H-code size = independence number of the Cayley graph over
/// Z_2^C(n,2) with the family's copies as connection set. Translation
/// normalization fixes the empty graph inside the solution; branch and
/// bound with a greedy clique cover computed once at the root.
inline MaxCodeResult max_code_exact(
    int n, const ForbiddenFamily& fam,
    std::chrono::duration<double> time_limit = std::chrono::seconds(60)) {
    const auto start = std::chrono::steady_clock::now();
    std::size_t nbits = 0;
    const std::vector<bool> conn = detail::connection_bitset(n, fam, nbits);
    const std::uint32_t total = std::uint32_t{1} << nbits;

    // candidates: non-neighbors of the fixed vertex 0, increasing order
    std::vector<std::uint32_t> cands;
    for (std::uint32_t v = 1; v < total; ++v)
        if (!conn[v]) cands.push_back(v);

    // greedy sequential clique cover over the candidates
    std::vector<int> clique_class(total, 0);
    std::vector<std::vector<std::uint32_t>> classes;
    for (std::uint32_t v : cands) {
        bool placed = false;
        for (std::size_t c = 0; c < classes.size() && !placed; ++c) {
            bool all_adjacent = true;
            for (std::uint32_t w : classes[c])
                if (!conn[v ^ w]) {
                    all_adjacent = false;
                    break;
                }
            if (all_adjacent) {
                classes[c].push_back(v);
                clique_class[v] = static_cast<int>(c);
                placed = true;
            }
        }
        if (!placed) {
            clique_class[v] = static_cast<int>(classes.size());
            classes.push_back({v});
        }
    }

    detail::MaxisSearch search(conn, clique_class);
    search.deadline = start + std::chrono::duration_cast<std::chrono::steady_clock::duration>(time_limit);
    search.run(cands);

    MaxCodeResult result;
    result.value = search.best + 1;  // plus the fixed empty graph
    result.status = search.timed_out ? SearchStatus::TimeLimitedLowerBound : SearchStatus::Proven;
    result.witness.n = n;
    std::vector<std::uint32_t> members = search.best_set;
    members.push_back(0);
    std::sort(members.begin(), members.end());
    for (std::uint32_t v : members)
        result.witness.members.emplace_back(n, BitVec::from_uint(v, nbits));
    result.stats.nodes = search.nodes;
    result.stats.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return result;
}

/// Smallest co-dimension r such that some subspace of GF(2)^C(n,2) of
/// dimension C(n,2)-r contains no copy of the family among its nonzero
/// vectors. Ascending scan over RREF-canonical subspaces, so the first
/// avoider is minimal.
inline MinCodimResult min_codim_exact(int n, const ForbiddenFamily& fam) {
    const auto start = std::chrono::steady_clock::now();
    const std::size_t nbits = edge_slots(n);
    if (nbits > 12)
        throw resource_error("min_codim_exact: C(n,2) cap is 12 (n <= 5)");
    const int nb = static_cast<int>(nbits);
    std::vector<std::uint64_t> copy_masks;
    for (const LabeledGraph& c : enumerate_copies(fam, n))
        copy_masks.push_back(c.edges.to_uint());

    MinCodimResult result;
    std::uint64_t nodes = 0;
    for (int r = 0; r <= nb; ++r) {
        bool found = false;
        BitMatrix found_basis;
        enumerate_subspaces(nb, nb - r, [&](const BitMatrix& basis) {
            ++nodes;
            std::vector<std::uint64_t> rows_u;
            for (const BitVec& row : basis.rows) rows_u.push_back(row.to_uint());
            for (std::uint64_t mask : copy_masks) {
                std::uint64_t v = mask;
                for (std::uint64_t row : rows_u)
                    if ((v >> std::countr_zero(row)) & 1u) v ^= row;
                if (v == 0) return true;  // copy inside: next subspace
            }
            found = true;
            found_basis = basis;
            return false;  // stop the stream
        });
        if (found) {
            result.codim = r;
            result.witness.n = n;
            result.witness.parity.cols = nbits;
            result.witness.parity.rows = kernel_basis(found_basis);
            result.witness.provenance = {"min-codim-exact", {{"n", n}, {"codim", r}}};
            break;
        }
    }
    result.stats.nodes = nodes;
    result.stats.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return result;
}

/// First (by increasing indicator integer, bit i = vertex i) nonempty
/// even-size vertex set whose clique has an even number of edges inside
/// every input graph. Guaranteed to exist when the number of graphs is
/// at most n/2 - 1 (more variables than total degree).
inline CliqueWitness even_clique_witness(const std::vector<LabeledGraph>& graphs, int n) {
    if (n % 2 != 0) throw std::domain_error("even_clique_witness: n must be even");
    if (n > 30) throw resource_error("even_clique_witness: n cap is 30");
    std::vector<std::vector<std::pair<int, int>>> edge_lists;
    for (const LabeledGraph& g : graphs) {
        if (g.n != n) throw std::domain_error("even_clique_witness: graph on different n");
        edge_lists.push_back(g.edge_list());
    }
    for (std::uint32_t x = 1; x < (std::uint32_t{1} << n); ++x) {
        if (std::popcount(x) % 2 != 0) continue;
        bool ok = true;
        for (const auto& edges : edge_lists) {
            unsigned par = 0;
            for (auto [i, j] : edges) par ^= (x >> i) & (x >> j) & 1u;
            if (par) {
                ok = false;
                break;
            }
        }
        if (ok) {
            CliqueWitness w;
            w.found = true;
            for (int v = 0; v < n; ++v)
                if ((x >> v) & 1u) w.subset.push_back(v);
            w.parities.assign(edge_lists.size(), 0);
            return w;
        }
    }
    return {};
}

}  // namespace graphcode
