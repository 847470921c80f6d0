#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "graphcode/bitvec.hpp"
#include "graphcode/gf2m.hpp"

namespace graphcode {

/// Number of k-dimensional subspaces of GF(2)^n (Gaussian binomial [n,k]_2).
inline std::uint64_t gaussian_binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    unsigned __int128 num = 1, den = 1;
    for (int i = 0; i < k; ++i) {
        num *= (static_cast<unsigned __int128>(1) << (n - i)) - 1;
        den *= (static_cast<unsigned __int128>(1) << (k - i)) - 1;
    }
    const unsigned __int128 q = num / den;
    if (q > UINT64_MAX) throw resource_error("gaussian_binomial: overflow");
    return static_cast<std::uint64_t>(q);
}

/// Streams every dim_sub-dimensional subspace of GF(2)^dim_ambient exactly
/// once, as a reduced-row-echelon basis matrix, in lexicographic order of
/// pivot-column profiles (free entries in row-major increasing order within
/// each profile). The visitor returns false to stop early.
inline void enumerate_subspaces(int dim_ambient, int dim_sub,
                                const std::function<bool(const BitMatrix&)>& visit) {
    if (dim_sub < 0 || dim_sub > dim_ambient)
        throw std::domain_error("enumerate_subspaces: need 0 <= dim_sub <= dim_ambient");
    if (dim_ambient > 12)
        throw resource_error("enumerate_subspaces: ambient dimension cap is 12");
    if (dim_sub == 0) {
        visit(BitMatrix(0, static_cast<std::size_t>(dim_ambient)));
        return;
    }
    // pivot profile = increasing pivot columns p_0 < ... < p_{k-1}
    const int k = dim_sub;
    std::vector<int> pivots(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) pivots[static_cast<std::size_t>(i)] = i;
    while (true) {
        // free positions: (row i, col j) with j > p_i and j not a pivot
        std::vector<std::pair<int, int>> free_pos;
        {
            std::vector<bool> is_pivot(static_cast<std::size_t>(dim_ambient), false);
            for (int p : pivots) is_pivot[static_cast<std::size_t>(p)] = true;
            for (int i = 0; i < k; ++i)
                for (int j = pivots[static_cast<std::size_t>(i)] + 1; j < dim_ambient; ++j)
                    if (!is_pivot[static_cast<std::size_t>(j)]) free_pos.emplace_back(i, j);
        }
        const std::uint64_t assignments = std::uint64_t{1} << free_pos.size();
        for (std::uint64_t a = 0; a < assignments; ++a) {
            BitMatrix m(static_cast<std::size_t>(k), static_cast<std::size_t>(dim_ambient));
            for (int i = 0; i < k; ++i)
                m.rows[static_cast<std::size_t>(i)].set(
                    static_cast<std::size_t>(pivots[static_cast<std::size_t>(i)]));
            for (std::size_t f = 0; f < free_pos.size(); ++f)
                if (a & (std::uint64_t{1} << f))
                    m.rows[static_cast<std::size_t>(free_pos[f].first)].set(
                        static_cast<std::size_t>(free_pos[f].second));
            if (!visit(m)) return;
        }
        // next pivot profile in lexicographic order
        int i = k - 1;
        while (i >= 0 && pivots[static_cast<std::size_t>(i)] == dim_ambient - k + i) --i;
        if (i < 0) break;
        ++pivots[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j)
            pivots[static_cast<std::size_t>(j)] = pivots[static_cast<std::size_t>(j - 1)] + 1;
    }
}

}  // namespace graphcode
