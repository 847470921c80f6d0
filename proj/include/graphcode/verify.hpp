#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "graphcode/codes.hpp"
#include "graphcode/family.hpp"

namespace graphcode {

struct VerifyMode {
    enum class Kind { Exhaustive, Sampled };
    Kind kind = Kind::Exhaustive;
    std::uint64_t seed = 0;
    std::uint64_t count = 100'000;

    static VerifyMode exhaustive() { return {}; }
    static VerifyMode sampled(std::uint64_t seed = 0, std::uint64_t count = 100'000) {
        return {Kind::Sampled, seed, count};
    }
};

struct Violation {
    LabeledGraph copy;  // forbidden copy realized as a difference / codeword
    std::optional<std::pair<LabeledGraph, LabeledGraph>> pair;  // offending members (explicit codes)
};

/// Stores at most 100 violations; violation_count carries the full tally.
struct VerificationReport {
    std::string family;
    VerifyMode mode;
    std::uint64_t copies_checked = 0;
    std::uint64_t violation_count = 0;
    std::vector<Violation> violations;
    bool passed = false;

    static constexpr std::size_t kStoredCap = 100;

    void record(Violation v) {
        ++violation_count;
        if (violations.size() < kStoredCap) violations.push_back(std::move(v));
    }
};

namespace detail {

inline std::vector<std::size_t> sampled_indices(std::size_t total, const VerifyMode& mode) {
    std::vector<std::size_t> idx;
    std::mt19937_64 rng(mode.seed);
    std::uniform_int_distribution<std::size_t> dist(0, total - 1);
    idx.reserve(mode.count);
    for (std::uint64_t i = 0; i < mode.count; ++i) idx.push_back(dist(rng));
    return idx;
}

template <class CheckCopy>
inline void scan_copies(const std::vector<LabeledGraph>& copies, const VerifyMode& mode,
                        VerificationReport& rep, CheckCopy&& check) {
    if (mode.kind == VerifyMode::Kind::Exhaustive || copies.empty()) {
        for (const LabeledGraph& s : copies) {
            ++rep.copies_checked;
            check(s);
        }
    } else {
        for (std::size_t i : sampled_indices(copies.size(), mode)) {
            ++rep.copies_checked;
            check(copies[i]);
        }
    }
}

}  // namespace detail

/// A linear code is an H-code iff no copy of the family is a codeword
/// (differences of codewords are codewords).
inline VerificationReport verify_code(const LinearGraphCode& code, const ForbiddenFamily& fam,
                                      VerifyMode mode = VerifyMode::exhaustive()) {
    VerificationReport rep;
    rep.family = fam.describe();
    rep.mode = mode;
    const std::vector<LabeledGraph> copies = enumerate_copies(fam, code.n);
    detail::scan_copies(copies, mode, rep, [&](const LabeledGraph& s) {
        if (code.syndrome(s).none()) rep.record({s, std::nullopt});
    });
    rep.passed = rep.violation_count == 0;
    return rep;
}

/// Copy-major scan: for each member g and copy S, a violation is a pair
/// {g, g XOR S} with both in the code. Each unordered pair reported once.
inline VerificationReport verify_code(const ExplicitGraphCode& code, const ForbiddenFamily& fam,
                                      VerifyMode mode = VerifyMode::exhaustive()) {
    VerificationReport rep;
    rep.family = fam.describe();
    rep.mode = mode;
    const std::vector<LabeledGraph> copies = enumerate_copies(fam, code.n);
    std::map<std::vector<std::uint64_t>, std::size_t> index;
    for (std::size_t i = 0; i < code.members.size(); ++i) {
        if (code.members[i].n != code.n)
            throw std::domain_error("verify_code: member vertex count mismatch");
        index.emplace(code.members[i].edges.words(), i);
    }
    detail::scan_copies(copies, mode, rep, [&](const LabeledGraph& s) {
        for (std::size_t i = 0; i < code.members.size(); ++i) {
            const LabeledGraph other = symmetric_difference(code.members[i], s);
            auto it = index.find(other.edges.words());
            if (it != index.end() && it->second > i)
                rep.record({s, std::make_pair(code.members[i], other)});
        }
    });
    rep.passed = rep.violation_count == 0;
    return rep;
}

/// Odd-cover check: every copy of the family must meet some color class
/// in an odd number of edges.
inline VerificationReport verify_odd_cover(const std::vector<int>& coloring,
                                           const ForbiddenFamily& fam, int n,
                                           VerifyMode mode = VerifyMode::exhaustive()) {
    if (coloring.size() != edge_slots(n))
        throw std::domain_error("verify_odd_cover: coloring must be total on E(K_n)");
    VerificationReport rep;
    rep.family = fam.describe();
    rep.mode = mode;
    const std::vector<LabeledGraph> copies = enumerate_copies(fam, n);
    detail::scan_copies(copies, mode, rep, [&](const LabeledGraph& s) {
        std::map<int, int> parity;
        for (std::size_t e = 0; e < coloring.size(); ++e)
            if (s.edges.test(e)) parity[coloring[e]] ^= 1;
        bool odd = false;
        for (auto [color, p] : parity)
            if (p) {
                odd = true;
                break;
            }
        if (!odd) rep.record({s, std::nullopt});
    });
    rep.passed = rep.violation_count == 0;
    return rep;
}

}  // namespace graphcode
