#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "forbcfg/bigint.hpp"

namespace forbcfg {

/// C(n, k) as an exact integer; zero when k > n.
BigUint binomial(std::uint64_t n, std::uint64_t k);

/// Multinomial coefficient (sum parts)! / prod(parts!).
BigUint multinomial(std::span<const std::uint64_t> parts);

BigUint bigpow(const BigUint& base, std::uint64_t exp);

std::uint64_t factorial_u64(std::uint64_t n);

/// Number of length-m columns over r symbols in which each of the r-1
/// restricted symbols appears at most n-1 times:
///   sum_{k=0}^{(n-1)(r-1)} C(m,k) * sum_{k_1,...,k_{r-1} < n, sum = k}
///       multinomial(k; k_1..k_{r-1}).
BigUint bounded_symbol_column_count(std::uint64_t m, std::uint32_t r, std::uint32_t n);

}  // namespace forbcfg
