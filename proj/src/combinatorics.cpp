#include "forbcfg/combinatorics.hpp"

namespace forbcfg {

BigUint binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return BigUint(0);
    if (k > n - k) k = n - k;
    BigUint acc(1);
    for (std::uint64_t i = 0; i < k; ++i) {
        acc *= BigUint(n - i);
        acc = acc.div_exact(static_cast<std::uint32_t>(i + 1));
    }
    return acc;
}

BigUint multinomial(std::span<const std::uint64_t> parts) {
    BigUint acc(1);
    std::uint64_t total = 0;
    for (std::uint64_t p : parts) {
        total += p;
        acc *= binomial(total, p);
    }
    return acc;
}

BigUint bigpow(const BigUint& base, std::uint64_t exp) {
    BigUint acc(1);
    for (std::uint64_t i = 0; i < exp; ++i) acc *= base;
    return acc;
}

std::uint64_t factorial_u64(std::uint64_t n) {
    std::uint64_t acc = 1;
    for (std::uint64_t i = 2; i <= n; ++i) acc *= i;
    return acc;
}

namespace {

// sum over compositions k_1..k_t with each part < n and sum = k of
// multinomial(k; k_1..k_t)
BigUint composition_sum(std::uint64_t k, std::uint32_t t, std::uint32_t n) {
    if (t == 0) return BigUint(k == 0 ? 1 : 0);
    BigUint acc(0);
    const std::uint64_t cap = std::min<std::uint64_t>(k, n - 1);
    for (std::uint64_t j = 0; j <= cap; ++j) {
        acc += binomial(k, j) * composition_sum(k - j, t - 1, n);
    }
    return acc;
}

}  // namespace

BigUint bounded_symbol_column_count(std::uint64_t m, std::uint32_t r, std::uint32_t n) {
    if (r < 2 || n < 1) return BigUint(0);
    BigUint acc(0);
    const std::uint64_t kmax = static_cast<std::uint64_t>(n - 1) * (r - 1);
    for (std::uint64_t k = 0; k <= kmax && k <= m; ++k) {
        acc += binomial(m, k) * composition_sum(k, r - 1, n);
    }
    return acc;
}

}  // namespace forbcfg
