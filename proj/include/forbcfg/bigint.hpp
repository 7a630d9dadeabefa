#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace forbcfg {

/// Unsigned arbitrary-precision integer, base 2^32 limbs.
/// Supports exactly what exact counting needs: +, *, small division,
/// comparison and decimal formatting.
class BigUint {
public:
    BigUint() = default;
    BigUint(std::uint64_t v);

    BigUint& operator+=(const BigUint& rhs);
    BigUint& operator*=(const BigUint& rhs);
    friend BigUint operator+(BigUint lhs, const BigUint& rhs) { return lhs += rhs; }
    friend BigUint operator*(BigUint lhs, const BigUint& rhs) { return lhs *= rhs; }

    // Exact division by a small divisor; throws if a remainder is left.
    BigUint div_exact(std::uint32_t d) const;

    bool operator==(const BigUint& rhs) const = default;
    std::strong_ordering operator<=>(const BigUint& rhs) const;

    bool is_zero() const { return limbs_.empty(); }
    bool fits_u64() const { return limbs_.size() <= 2; }
    std::uint64_t to_u64() const;

    std::string str() const;

private:
    // Little-endian limbs, most significant last, no trailing zeros.
    std::vector<std::uint32_t> limbs_;
    void trim();
};

}  // namespace forbcfg
