#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace graphcode {

/// Thrown when a constructed object fails its own consistency check.
struct integrity_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Thrown when a request exceeds the desk-scale caps.
struct resource_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// GF(2^s) with a fixed primitive modulus. Elements are integers with
/// bit i = coefficient of x^i.
class FieldSpec {
public:
    FieldSpec(int degree, std::uint32_t modulus) : s_(degree), modulus_(modulus) {
        if (degree < 2 || degree > 16)
            throw std::domain_error("FieldSpec: degree must be in [2,16]");
        if ((modulus >> degree) != 1u)
            throw std::domain_error("FieldSpec: modulus must have degree exactly s");
        validate_primitive();
    }

    int degree() const { return s_; }
    std::uint32_t modulus() const { return modulus_; }
    std::uint32_t order() const { return (std::uint32_t{1} << s_) - 1; }

    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
        std::uint32_t r = 0;
        const std::uint32_t high = std::uint32_t{1} << s_;
        while (b) {
            if (b & 1u) r ^= a;
            b >>= 1;
            a <<= 1;
            if (a & high) a ^= modulus_;
        }
        return r;
    }

    std::uint32_t pow(std::uint32_t a, std::uint64_t e) const {
        std::uint32_t r = 1;
        while (e) {
            if (e & 1u) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }

    std::uint32_t inv(std::uint32_t a) const {
        if (a == 0) throw std::domain_error("FieldSpec: zero has no inverse");
        return pow(a, order() - 1);
    }

private:
    void validate_primitive() const {
        // x must generate the full multiplicative group of order 2^s - 1.
        const std::uint32_t ord = order();
        if (pow(2, ord) != 1)
            throw integrity_error("FieldSpec: modulus is not irreducible");
        std::uint32_t m = ord;
        std::vector<std::uint32_t> prime_factors;
        for (std::uint32_t p = 2; p * p <= m; ++p) {
            if (m % p == 0) {
                prime_factors.push_back(p);
                while (m % p == 0) m /= p;
            }
        }
        if (m > 1) prime_factors.push_back(m);
        for (std::uint32_t p : prime_factors)
            if (pow(2, ord / p) == 1)
                throw integrity_error("FieldSpec: modulus is not primitive");
    }

    int s_;
    std::uint32_t modulus_;
};

/// Fixed primitive polynomial per degree, so columns are reproducible
/// across runs. Each entry is re-validated by FieldSpec's primitivity check.
inline std::uint32_t primitive_modulus(int degree) {
    switch (degree) {
        case 2: return 0x7;      // x^2+x+1
        case 3: return 0xB;      // x^3+x+1
        case 4: return 0x13;     // x^4+x+1
        case 5: return 0x25;     // x^5+x^2+1
        case 6: return 0x43;     // x^6+x+1
        case 7: return 0x89;     // x^7+x^3+1
        case 8: return 0x11D;    // x^8+x^4+x^3+x^2+1
        case 9: return 0x211;    // x^9+x^4+1
        case 10: return 0x409;   // x^10+x^3+1
        case 11: return 0x805;   // x^11+x^2+1
        case 12: return 0x1053;  // x^12+x^6+x^4+x+1
        case 13: return 0x201B;  // x^13+x^4+x^3+x+1
        case 14: return 0x4443;  // x^14+x^10+x^6+x+1
        case 15: return 0x8003;  // x^15+x+1
        case 16: return 0x1100B; // x^16+x^12+x^3+x+1
        default:
            throw std::domain_error("primitive_modulus: degree must be in [2,16]");
    }
}

inline FieldSpec default_field(int degree) {
    return FieldSpec(degree, primitive_modulus(degree));
}

}  // namespace graphcode
