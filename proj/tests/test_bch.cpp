#include <catch2/catch_amalgamated.hpp>

#include <set>
#include <vector>

#include "graphcode/bch.hpp"

using namespace graphcode;

namespace {

/// Independent oracle: smallest d in [1,max_size] with some d-subset of
/// columns XORing to zero, or 0 if none exists.
int smallest_zero_subset(const std::vector<std::uint64_t>& cols, int max_size) {
    const std::size_t m = cols.size();
    for (int d = 1; d <= max_size; ++d) {
        std::vector<std::size_t> idx(static_cast<std::size_t>(d));
        for (int i = 0; i < d; ++i) idx[static_cast<std::size_t>(i)] = static_cast<std::size_t>(i);
        while (true) {
            std::uint64_t acc = 0;
            for (std::size_t i : idx) acc ^= cols[i];
            if (acc == 0) return d;
            int k = d - 1;
            while (k >= 0 && idx[static_cast<std::size_t>(k)] == m - static_cast<std::size_t>(d - k)) --k;
            if (k < 0) break;
            ++idx[static_cast<std::size_t>(k)];
            for (int j = k + 1; j < d; ++j)
                idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
        }
    }
    return 0;
}

std::vector<std::uint64_t> as_uints(const ColumnSet& cs) {
    std::vector<std::uint64_t> out;
    for (const BitVec& c : cs.columns) out.push_back(c.to_uint());
    return out;
}

}  // namespace

TEST_CASE("s=3 t=1 gives the 7 distinct nonzero 3-bit columns") {
    const ColumnSet cs = build_columns(3, 1, false);
    CHECK(cs.columns.size() == 7);
    CHECK(cs.row_count() == 3);
    std::set<std::uint64_t> values;
    for (std::uint64_t v : as_uints(cs)) {
        CHECK(v != 0);
        CHECK(v < 8);
        values.insert(v);
    }
    CHECK(values.size() == 7);
}

TEST_CASE("s=4 t=2 has no vanishing XOR of up to 4 columns") {
    const ColumnSet cs = build_columns(4, 2, false);
    CHECK(cs.columns.size() == 15);
    CHECK(cs.row_count() == 8);
    CHECK(smallest_zero_subset(as_uints(cs), 4) == 0);
}

TEST_CASE("augmented s=3 t=1 has no vanishing XOR of up to 3 columns") {
    const ColumnSet cs = build_columns(3, 1, true);
    CHECK(cs.columns.size() == 7);
    CHECK(cs.row_count() == 4);
    CHECK(cs.max_zero_free_subset() == 3);
    CHECK(smallest_zero_subset(as_uints(cs), 3) == 0);
}

TEST_CASE("t=1 strength is exactly pairwise distinctness plus nonzeroness") {
    for (int s : {3, 4, 5}) {
        const ColumnSet cs = build_columns(s, 1, false);
        const auto cols = as_uints(cs);
        std::set<std::uint64_t> distinct(cols.begin(), cols.end());
        const bool distinct_nonzero = distinct.size() == cols.size() && !distinct.count(0);
        CHECK(distinct_nonzero == (smallest_zero_subset(cols, 2) == 0));
        CHECK(distinct_nonzero);
    }
}

TEST_CASE("certify_strength exhaustive mode agrees with the oracle") {
    for (bool aug : {false, true}) {
        const ColumnSet cs = build_columns(4, 2, aug);
        const StrengthReport rep = certify_strength(cs);
        CHECK(rep.exhaustive);
        CHECK(rep.passed);
        CHECK(rep.subsets_checked > 0);
        CHECK(smallest_zero_subset(as_uints(cs), cs.max_zero_free_subset()) == 0);
    }
}

TEST_CASE("certify_strength falls back to seeded sampling above the cap") {
    const ColumnSet cs = build_columns(8, 2, false);  // 255 columns, huge subset space
    const StrengthReport a = certify_strength(cs, 1000, 20'000, 0);
    CHECK_FALSE(a.exhaustive);
    CHECK(a.passed);
    CHECK(a.subsets_checked == 20'000);
    const StrengthReport b = certify_strength(cs, 1000, 20'000, 0);
    CHECK(b.subsets_checked == a.subsets_checked);
    CHECK(b.seed == a.seed);
}

TEST_CASE("certify_strength reports the violating subset") {
    ColumnSet bad = build_columns(3, 1, false);
    bad.columns[3] = bad.columns[5];  // duplicate: pair XOR vanishes
    CHECK_THROWS_AS(certify_strength(bad), integrity_error);
    try {
        certify_strength(bad);
    } catch (const integrity_error& e) {
        CHECK(std::string(e.what()).find("{3,5}") != std::string::npos);
    }
}

TEST_CASE("degenerate parameters are rejected") {
    CHECK_THROWS_AS(build_columns(3, 0, false), std::domain_error);
    CHECK_THROWS_AS(build_columns(2, 2, false), std::domain_error);  // 2t-1 >= 2^s-1
    CHECK_THROWS_AS(build_columns(17, 1, false), std::domain_error);
}
