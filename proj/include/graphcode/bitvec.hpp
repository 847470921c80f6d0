#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace graphcode {

/// Packed bit vector over GF(2). Unused tail bits of the last word are
/// kept zero so that equality and popcount work word-wise.
class BitVec {
public:
    BitVec() = default;

    explicit BitVec(std::size_t length)
        : len_(length), words_((length + 63) / 64, 0) {}

    std::size_t size() const { return len_; }
    bool empty() const { return len_ == 0; }

    bool test(std::size_t i) const {
        check_index(i);
        return (words_[i >> 6] >> (i & 63)) & 1u;
    }

    void set(std::size_t i, bool value = true) {
        check_index(i);
        const std::uint64_t mask = std::uint64_t{1} << (i & 63);
        if (value)
            words_[i >> 6] |= mask;
        else
            words_[i >> 6] &= ~mask;
    }

    void flip(std::size_t i) {
        check_index(i);
        words_[i >> 6] ^= std::uint64_t{1} << (i & 63);
    }

    BitVec& operator^=(const BitVec& other) {
        if (len_ != other.len_)
            throw std::domain_error("BitVec: length mismatch in XOR");
        for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= other.words_[w];
        return *this;
    }

    friend BitVec operator^(BitVec a, const BitVec& b) {
        a ^= b;
        return a;
    }

    bool operator==(const BitVec& other) const = default;

    bool none() const {
        for (std::uint64_t w : words_)
            if (w) return false;
        return true;
    }

    bool any() const { return !none(); }

    std::size_t count() const {
        std::size_t c = 0;
        for (std::uint64_t w : words_) c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }

    /// Parity of |this AND other| (GF(2) inner product of indicator vectors).
    bool parity_and(const BitVec& other) const {
        if (len_ != other.len_)
            throw std::domain_error("BitVec: length mismatch in parity_and");
        std::uint64_t acc = 0;
        for (std::size_t w = 0; w < words_.size(); ++w) acc ^= words_[w] & other.words_[w];
        return std::popcount(acc) & 1u;
    }

    /// Index of the lowest set bit, or size() if none.
    std::size_t lowest_set() const {
        for (std::size_t w = 0; w < words_.size(); ++w)
            if (words_[w]) return w * 64 + static_cast<std::size_t>(std::countr_zero(words_[w]));
        return len_;
    }

    /// Lexicographic order on the bit sequence b0, b1, ..., with 0 < 1.
    bool lex_less(const BitVec& other) const {
        if (len_ != other.len_)
            throw std::domain_error("BitVec: length mismatch in lex_less");
        for (std::size_t w = 0; w < words_.size(); ++w) {
            const std::uint64_t d = words_[w] ^ other.words_[w];
            if (d) {
                const std::uint64_t low = d & (~d + 1);
                return (words_[w] & low) == 0;
            }
        }
        return false;
    }

    /// Value of the vector as an unsigned integer; requires size() <= 64.
    std::uint64_t to_uint() const {
        if (len_ > 64) throw std::domain_error("BitVec: to_uint requires size <= 64");
        return words_.empty() ? 0 : words_[0];
    }

    static BitVec from_uint(std::uint64_t value, std::size_t length) {
        if (length > 64) throw std::domain_error("BitVec: from_uint requires length <= 64");
        BitVec v(length);
        if (length > 0) {
            if (length < 64) value &= (std::uint64_t{1} << length) - 1;
            v.words_[0] = value;
        }
        return v;
    }

    /// Lowercase hex, LSB-first: bit k of the vector is bit (k mod 4) of
    /// hex digit k/4.
    std::string to_hex() const {
        const std::size_t digits = (len_ + 3) / 4;
        std::string out(digits, '0');
        static const char* kDigits = "0123456789abcdef";
        for (std::size_t q = 0; q < digits; ++q) {
            unsigned d = 0;
            for (unsigned b = 0; b < 4; ++b) {
                const std::size_t k = q * 4 + b;
                if (k < len_ && test(k)) d |= 1u << b;
            }
            out[q] = kDigits[d];
        }
        return out;
    }

    static BitVec from_hex(std::string_view hex, std::size_t length) {
        const std::size_t digits = (length + 3) / 4;
        if (hex.size() != digits)
            throw std::domain_error("BitVec: hex string has wrong digit count");
        BitVec v(length);
        for (std::size_t q = 0; q < digits; ++q) {
            const char c = hex[q];
            unsigned d;
            if (c >= '0' && c <= '9')
                d = static_cast<unsigned>(c - '0');
            else if (c >= 'a' && c <= 'f')
                d = static_cast<unsigned>(c - 'a') + 10;
            else
                throw std::domain_error("BitVec: invalid hex digit");
            for (unsigned b = 0; b < 4; ++b) {
                const std::size_t k = q * 4 + b;
                if (d & (1u << b)) {
                    if (k >= length)
                        throw std::domain_error("BitVec: hex sets bits past length");
                    v.set(k);
                }
            }
        }
        return v;
    }

    const std::vector<std::uint64_t>& words() const { return words_; }

private:
    void check_index(std::size_t i) const {
        if (i >= len_) throw std::out_of_range("BitVec: index out of range");
    }

    std::size_t len_ = 0;
    std::vector<std::uint64_t> words_;
};

/// Row-major bit matrix over GF(2).
struct BitMatrix {
    std::size_t cols = 0;
    std::vector<BitVec> rows;

    BitMatrix() = default;
    BitMatrix(std::size_t nrows, std::size_t ncols)
        : cols(ncols), rows(nrows, BitVec(ncols)) {}

    std::size_t row_count() const { return rows.size(); }

    bool operator==(const BitMatrix& other) const = default;

    /// parity-check style product: bit r of the result is <row_r, v>.
    BitVec multiply(const BitVec& v) const {
        if (v.size() != cols) throw std::domain_error("BitMatrix: vector length mismatch");
        BitVec out(rows.size());
        for (std::size_t r = 0; r < rows.size(); ++r)
            if (rows[r].parity_and(v)) out.set(r);
        return out;
    }
};

namespace detail {

/// Row-reduce a copy of m; returns the reduced rows together with their
/// pivot columns (rows without pivot dropped).
inline std::pair<std::vector<BitVec>, std::vector<std::size_t>> row_reduce(const BitMatrix& m) {
    std::vector<BitVec> rows = m.rows;
    std::vector<BitVec> reduced;
    std::vector<std::size_t> pivots;
    for (std::size_t col = 0; col < m.cols; ++col) {
        std::size_t pick = rows.size();
        for (std::size_t r = 0; r < rows.size(); ++r)
            if (rows[r].test(col)) {
                pick = r;
                break;
            }
        if (pick == rows.size()) continue;
        BitVec pivot_row = rows[pick];
        rows.erase(rows.begin() + static_cast<std::ptrdiff_t>(pick));
        for (BitVec& r : rows)
            if (r.test(col)) r ^= pivot_row;
        for (BitVec& r : reduced)
            if (r.test(col)) r ^= pivot_row;
        reduced.push_back(std::move(pivot_row));
        pivots.push_back(col);
    }
    return {std::move(reduced), std::move(pivots)};
}

}  // namespace detail

inline std::size_t rank(const BitMatrix& m) { return detail::row_reduce(m).second.size(); }

/// Basis of {v : m * v = 0}; size is cols - rank(m).
inline std::vector<BitVec> kernel_basis(const BitMatrix& m) {
    auto [rows, pivots] = detail::row_reduce(m);
    std::vector<bool> is_pivot(m.cols, false);
    for (std::size_t p : pivots) is_pivot[p] = true;
    std::vector<BitVec> basis;
    for (std::size_t free_col = 0; free_col < m.cols; ++free_col) {
        if (is_pivot[free_col]) continue;
        BitVec v(m.cols);
        v.set(free_col);
        for (std::size_t r = 0; r < rows.size(); ++r)
            if (rows[r].test(free_col)) v.set(pivots[r]);
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace graphcode
