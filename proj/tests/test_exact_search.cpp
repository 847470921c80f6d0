#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "graphcode/constructions.hpp"
#include "graphcode/exact.hpp"
#include "graphcode/verify.hpp"

using namespace graphcode;

namespace {

std::vector<bool> connection_set(int n, const ForbiddenFamily& fam) {
    const std::size_t nbits = edge_slots(n);
    std::vector<bool> conn(std::size_t{1} << nbits, false);
    for (const LabeledGraph& c : enumerate_copies(fam, n)) conn[c.edges.to_uint()] = true;
    return conn;
}

/// Oracle A: scan every subset of the Cayley vertices (n <= 3 only).
std::int64_t naive_max_by_subsets(int n, const ForbiddenFamily& fam) {
    const std::size_t nbits = edge_slots(n);
    REQUIRE(nbits <= 3);
    const std::vector<bool> conn = connection_set(n, fam);
    const std::uint32_t vertices = std::uint32_t{1} << nbits;
    std::int64_t best = 0;
    for (std::uint32_t subset = 0; subset < (std::uint32_t{1} << vertices); ++subset) {
        bool independent = true;
        for (std::uint32_t v = 0; v < vertices && independent; ++v) {
            if (!(subset & (std::uint32_t{1} << v))) continue;
            for (std::uint32_t w = v + 1; w < vertices; ++w)
                if ((subset & (std::uint32_t{1} << w)) && conn[v ^ w]) {
                    independent = false;
                    break;
                }
        }
        if (independent) best = std::max<std::int64_t>(best, std::popcount(subset));
    }
    return best;
}

void dfs_max(const std::vector<bool>& conn, const std::vector<std::uint32_t>& cands,
             std::int64_t chosen, std::int64_t& best) {
    if (cands.empty()) {
        best = std::max(best, chosen);
        return;
    }
    if (chosen + static_cast<std::int64_t>(cands.size()) <= best) return;
    const std::uint32_t v = cands[0];
    std::vector<std::uint32_t> rest;
    for (std::size_t i = 1; i < cands.size(); ++i)
        if (!conn[cands[i] ^ v]) rest.push_back(cands[i]);
    dfs_max(conn, rest, chosen + 1, best);
    rest.assign(cands.begin() + 1, cands.end());
    dfs_max(conn, rest, chosen, best);
}

/// Oracle B: plain include/exclude DFS over all Cayley vertices, no
/// clique-cover bound and no translation normalization.
std::int64_t naive_max_by_dfs(int n, const ForbiddenFamily& fam) {
    const std::vector<bool> conn = connection_set(n, fam);
    std::vector<std::uint32_t> cands;
    for (std::uint32_t v = 0; v < conn.size(); ++v) cands.push_back(v);
    std::int64_t best = 0;
    dfs_max(conn, cands, 0, best);
    return best;
}

int edges_inside(const LabeledGraph& g, const std::vector<int>& subset) {
    int count = 0;
    for (std::size_t a = 0; a < subset.size(); ++a)
        for (std::size_t b = a + 1; b < subset.size(); ++b)
            if (g.has_edge(subset[a], subset[b])) ++count;
    return count;
}

LabeledGraph random_graph(int n, std::mt19937_64& rng) {
    LabeledGraph g(n);
    for (std::size_t e = 0; e < g.edges.size(); ++e)
        if (rng() & 1) g.edges.set(e);
    return g;
}

}  // namespace

TEST_CASE("max code size matches the full-subset oracle at n <= 3") {
    struct Case {
        ForbiddenFamily fam;
        std::int64_t expected;
    };
    const std::vector<Case> cases = {
        {ForbiddenFamily::star(2), 2},
        {ForbiddenFamily::all_cliques(), 4},
    };
    for (const Case& c : cases) {
        CHECK(naive_max_by_subsets(3, c.fam) == c.expected);
        const MaxCodeResult res = max_code_exact(3, c.fam);
        CHECK(res.status == SearchStatus::Proven);
        CHECK(res.value == c.expected);
        CHECK(verify_code(res.witness, c.fam).passed);
        CHECK(res.witness.members.size() == static_cast<std::size_t>(res.value));
    }
}

TEST_CASE("n=2 all-cliques maximum is 1") {
    const MaxCodeResult res = max_code_exact(2, ForbiddenFamily::all_cliques());
    CHECK(res.value == 1);  // 2^(N - floor(n/2)) at n = 2
    CHECK(naive_max_by_subsets(2, ForbiddenFamily::all_cliques()) == 1);
}

TEST_CASE("max code size matches the DFS oracle at n = 4") {
    for (const ForbiddenFamily& fam :
         {ForbiddenFamily::star(2), ForbiddenFamily::matching(2), ForbiddenFamily::all_cliques()}) {
        const MaxCodeResult res = max_code_exact(4, fam);
        CHECK(res.status == SearchStatus::Proven);
        CHECK(res.value == naive_max_by_dfs(4, fam));
        CHECK(verify_code(res.witness, fam).passed);
    }
}

TEST_CASE("maximum is invariant under translating the witness") {
    const ForbiddenFamily fam = ForbiddenFamily::all_cliques();
    const MaxCodeResult res = max_code_exact(4, fam);
    const LabeledGraph shift = graph_from_edges(4, {{0, 2}, {1, 3}});
    ExplicitGraphCode shifted;
    shifted.n = 4;
    for (const LabeledGraph& m : res.witness.members)
        shifted.members.push_back(symmetric_difference(m, shift));
    CHECK(verify_code(shifted, fam).passed);
    CHECK(shifted.members.size() == res.witness.members.size());
}

TEST_CASE("exact maximum dominates every construction") {
    for (int n = 2; n <= 4; ++n) {
        const MaxCodeResult res = max_code_exact(n, ForbiddenFamily::all_cliques());
        const std::size_t slots = edge_slots(n);
        const std::int64_t constructed =
            std::int64_t{1} << (slots - clique_linear_code(n).codim());
        CHECK(res.value >= constructed);
    }
}

TEST_CASE("max_code_exact enforces the size cap") {
    CHECK_THROWS_AS(max_code_exact(7, ForbiddenFamily::all_cliques()), resource_error);
}

TEST_CASE("minimum co-dimension for cliques matches floor(n/2)") {
    for (int n : {2, 3, 4}) {
        const MinCodimResult res = min_codim_exact(n, ForbiddenFamily::all_cliques());
        CHECK(res.codim == n / 2);
        CHECK(res.witness.parity.rows.size() == static_cast<std::size_t>(n / 2));
        CHECK(kernel_basis(res.witness.parity).size() ==
              edge_slots(n) - static_cast<std::size_t>(n / 2));
        CHECK(verify_code(res.witness, ForbiddenFamily::all_cliques()).passed);
    }
}

TEST_CASE("minimum co-dimension matches a full subspace scan at n = 3") {
    const ForbiddenFamily fam = ForbiddenFamily::star(2);
    // oracle: all XOR-closed subsets of GF(2)^3 containing 0
    std::vector<std::uint64_t> copy_masks;
    for (const LabeledGraph& c : enumerate_copies(fam, 3))
        copy_masks.push_back(c.edges.to_uint());
    int best_dim = -1;
    for (std::uint32_t subset = 1; subset < 256; subset += 2) {  // bit 0 = vector 0
        std::vector<int> vecs;
        for (int v = 0; v < 8; ++v)
            if (subset & (1u << v)) vecs.push_back(v);
        bool closed = true;
        for (std::size_t a = 0; a < vecs.size() && closed; ++a)
            for (std::size_t b = 0; b < vecs.size(); ++b)
                if (!(subset & (1u << (vecs[a] ^ vecs[b])))) {
                    closed = false;
                    break;
                }
        if (!closed) continue;
        bool avoids = true;
        for (std::uint64_t m : copy_masks)
            if (subset & (1u << m)) {
                avoids = false;
                break;
            }
        if (!avoids) continue;
        const int dim = std::countr_zero(static_cast<unsigned>(vecs.size()));
        best_dim = std::max(best_dim, dim);
    }
    REQUIRE(best_dim >= 0);
    const MinCodimResult res = min_codim_exact(3, fam);
    CHECK(res.codim == 3 - best_dim);
    CHECK(verify_code(res.witness, fam).passed);
}

TEST_CASE("linear optimum never exceeds the unrestricted maximum") {
    for (int n : {3, 4}) {
        const MinCodimResult lin = min_codim_exact(n, ForbiddenFamily::all_cliques());
        const MaxCodeResult any = max_code_exact(n, ForbiddenFamily::all_cliques());
        CHECK((std::int64_t{1} << (edge_slots(n) - static_cast<std::size_t>(lin.codim))) <=
              any.value);
    }
}

TEST_CASE("even clique witness on K_4 and on the empty graph") {
    const CliqueWitness full = even_clique_witness({complete_graph(4)}, 4);
    REQUIRE(full.found);
    CHECK(full.subset == std::vector<int>{0, 1, 2, 3});

    const CliqueWitness first = even_clique_witness({LabeledGraph(4)}, 4);
    REQUIRE(first.found);
    CHECK(first.subset == std::vector<int>{0, 1});

    CHECK_THROWS_AS(even_clique_witness({LabeledGraph(5)}, 5), std::domain_error);
    CHECK_THROWS_AS(even_clique_witness({}, 32), resource_error);
}

TEST_CASE("witnesses exist for families below the Chevalley-Warning bound") {
    std::mt19937_64 rng(123);
    const int n = 10;
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<LabeledGraph> graphs;
        for (int s = 0; s < 4; ++s) graphs.push_back(random_graph(n, rng));
        const CliqueWitness w = even_clique_witness(graphs, n);
        REQUIRE(w.found);
        CHECK(!w.subset.empty());
        CHECK(w.subset.size() % 2 == 0);
        for (const LabeledGraph& g : graphs) CHECK(edges_inside(g, w.subset) % 2 == 0);
    }
}
