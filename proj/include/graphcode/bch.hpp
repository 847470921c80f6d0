#pragma once

#include <cstdint>
#include <random>
#include <sstream>
#include <vector>

#include "graphcode/bitvec.hpp"
#include "graphcode/gf2m.hpp"

namespace graphcode {

/// BCH-style parity-check columns over GF(2^s): no XOR of up to 2t of
/// them vanishes (2t+1 with the parity row).
struct ColumnSet {
    int s = 0;
    int t = 0;
    bool parity_augmented = false;
    std::uint32_t modulus = 0;
    std::vector<BitVec> columns;

    int row_count() const { return t * s + (parity_augmented ? 1 : 0); }
    int max_zero_free_subset() const { return 2 * t + (parity_augmented ? 1 : 0); }
};

/// Column j stacks alpha^j, alpha^{3j}, ..., alpha^{(2t-1)j} over GF(2^s)
/// (alpha = x), flattened s bits per element, plus a constant-1 bit when
/// parity_augmented. Designed distance 2t+1, or 2t+2 augmented.
inline ColumnSet build_columns(int s, int t, bool parity_augmented) {
    if (t < 1) throw std::domain_error("build_columns: t must be >= 1");
    const FieldSpec f = default_field(s);  // validates s in [2,16]
    if (2 * t - 1 >= static_cast<int>(f.order()))
        throw std::domain_error("build_columns: 2t-1 must be below 2^s-1");
    ColumnSet cs;
    cs.s = s;
    cs.t = t;
    cs.parity_augmented = parity_augmented;
    cs.modulus = f.modulus();
    const std::uint32_t ord = f.order();
    const int rows = cs.row_count();
    for (std::uint32_t j = 0; j < ord; ++j) {
        BitVec col(static_cast<std::size_t>(rows));
        for (int b = 0; b < t; ++b) {
            const std::uint64_t e = static_cast<std::uint64_t>(2 * b + 1) * j % ord;
            const std::uint32_t elem = f.pow(2, e);
            for (int i = 0; i < s; ++i)
                if (elem & (1u << i)) col.set(static_cast<std::size_t>(b * s + i));
        }
        if (parity_augmented) col.set(static_cast<std::size_t>(t * s));
        cs.columns.push_back(std::move(col));
    }
    return cs;
}

struct StrengthReport {
    bool exhaustive = false;
    std::uint64_t subsets_checked = 0;
    std::uint64_t seed = 0;
    bool passed = false;
};

namespace detail {

inline std::string subset_to_string(const std::vector<int>& subset) {
    std::ostringstream os;
    os << "{";
    for (std::size_t i = 0; i < subset.size(); ++i) os << (i ? "," : "") << subset[i];
    os << "}";
    return os.str();
}

inline void check_subsets(const std::vector<std::uint64_t>& cols, int max_size,
                          std::size_t start, std::uint64_t acc, std::vector<int>& subset,
                          std::uint64_t& checked) {
    for (std::size_t i = start; i < cols.size(); ++i) {
        const std::uint64_t x = acc ^ cols[i];
        subset.push_back(static_cast<int>(i));
        ++checked;
        if (x == 0)
            throw integrity_error("certify_strength: zero XOR over columns " +
                                  subset_to_string(subset));
        if (static_cast<int>(subset.size()) < max_size)
            check_subsets(cols, max_size, i + 1, x, subset, checked);
        subset.pop_back();
    }
}

}  // namespace detail

/// Certifies that no XOR of up to max_zero_free_subset() distinct columns
/// vanishes. Exhaustive when the subset count fits under the cap, else
/// seeded uniform sampling. Throws integrity_error naming the subset on a
/// violation (a bad modulus or builder bug).
inline StrengthReport certify_strength(const ColumnSet& cs,
                                       std::uint64_t exhaustive_cap = 10'000'000,
                                       std::uint64_t sample_count = 1'000'000,
                                       std::uint64_t seed = 0) {
    if (cs.row_count() > 64)
        throw resource_error("certify_strength: row count cap is 64");
    std::vector<std::uint64_t> cols;
    for (const BitVec& c : cs.columns) cols.push_back(c.to_uint());
    const int dmax = cs.max_zero_free_subset();
    // total number of subsets of size 1..dmax (saturating)
    long double total = 0;
    {
        long double binom = 1;
        for (int d = 1; d <= dmax; ++d) {
            binom = binom * static_cast<long double>(cols.size() - static_cast<std::size_t>(d) + 1) / d;
            total += binom;
        }
    }
    StrengthReport rep;
    rep.seed = seed;
    if (total <= static_cast<long double>(exhaustive_cap)) {
        rep.exhaustive = true;
        std::vector<int> subset;
        detail::check_subsets(cols, dmax, 0, 0, subset, rep.subsets_checked);
    } else {
        rep.exhaustive = false;
        std::mt19937_64 rng(seed);
        std::uniform_int_distribution<int> size_dist(1, dmax);
        std::vector<int> idx(cols.size());
        for (std::size_t i = 0; i < cols.size(); ++i) idx[i] = static_cast<int>(i);
        for (std::uint64_t trial = 0; trial < sample_count; ++trial) {
            const int d = size_dist(rng);
            std::uint64_t acc = 0;
            std::vector<int> subset;
            for (int pick = 0; pick < d; ++pick) {
                std::uniform_int_distribution<std::size_t> pos(static_cast<std::size_t>(pick),
                                                               cols.size() - 1);
                std::swap(idx[static_cast<std::size_t>(pick)], idx[pos(rng)]);
                const int c = idx[static_cast<std::size_t>(pick)];
                subset.push_back(c);
                acc ^= cols[static_cast<std::size_t>(c)];
            }
            ++rep.subsets_checked;
            if (acc == 0)
                throw integrity_error("certify_strength: zero XOR over columns " +
                                      detail::subset_to_string(subset));
        }
    }
    rep.passed = true;
    return rep;
}

}  // namespace graphcode
