#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "graphcode/bitvec.hpp"
#include "graphcode/graph.hpp"

namespace graphcode {

/// Construction tag plus its integer parameters; kept with each code so
/// verification reports are self-describing.
struct Provenance {
    std::string kind;
    std::vector<std::pair<std::string, std::int64_t>> params;
};

/// Linear graph code: kernel of a parity-check matrix over the C(n,2)
/// edge coordinates. Membership test is syndrome == 0.
struct LinearGraphCode {
    int n = 1;
    BitMatrix parity;
    Provenance provenance;

    std::size_t codim() const { return rank(parity); }

    BitVec syndrome(const LabeledGraph& g) const {
        if (g.n != n) throw std::domain_error("syndrome: vertex count mismatch");
        return parity.multiply(g.edges);
    }

    bool contains(const LabeledGraph& g) const { return syndrome(g).none(); }
};

/// Enumerated member list, for nonlinear codes and exact-search witnesses.
struct ExplicitGraphCode {
    int n = 1;
    std::vector<LabeledGraph> members;
};

inline BitVec syndrome(const LabeledGraph& g, const LinearGraphCode& code) {
    return code.syndrome(g);
}

}  // namespace graphcode
