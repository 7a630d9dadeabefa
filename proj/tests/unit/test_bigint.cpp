#include <doctest.h>

#include "forbcfg/bigint.hpp"
#include "forbcfg/combinatorics.hpp"

using namespace forbcfg;

TEST_CASE("BigUint arithmetic basics") {
    CHECK(BigUint(0).str() == "0");
    CHECK(BigUint(12345).str() == "12345");
    CHECK((BigUint(1) + BigUint(2)).str() == "3");
    CHECK((BigUint(0xffffffffull) + BigUint(1)).str() == "4294967296");
    CHECK((BigUint(1000000007) * BigUint(1000000009)).str() == "1000000016000000063");
    CHECK(BigUint(7) < BigUint(8));
    CHECK(BigUint(1ull << 40) > BigUint(12));
    CHECK(BigUint(42).to_u64() == 42);
    CHECK(BigUint(300).div_exact(4).to_u64() == 75);
    CHECK_THROWS(BigUint(301).div_exact(4));
}

TEST_CASE("BigUint handles values past 64 bits") {
    BigUint big = bigpow(BigUint(2), 100);
    CHECK(big.str() == "1267650600228229401496703205376");
    CHECK_FALSE(big.fits_u64());
    CHECK_THROWS(big.to_u64());
    CHECK(big.div_exact(2).str() == "633825300114114700748351602688");
}

TEST_CASE("binomial against the Pascal recurrence") {
    for (std::uint64_t n = 1; n <= 30; ++n)
        for (std::uint64_t k = 1; k <= n; ++k)
            CHECK(binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k));
    CHECK(binomial(5, 7).is_zero());
    CHECK(binomial(52, 26).str() == "495918532948104");
}

TEST_CASE("multinomial sums to powers") {
    // sum over all ordered splits of k into t parts of multinomial = t^k
    const std::uint64_t t = 3, k = 5;
    BigUint total(0);
    for (std::uint64_t a = 0; a <= k; ++a)
        for (std::uint64_t b = 0; a + b <= k; ++b) {
            std::uint64_t parts[3] = {a, b, k - a - b};
            total += multinomial(parts);
        }
    CHECK(total == bigpow(BigUint(t), k));
}

namespace {

// oracle: enumerate all r^m columns and count the ones with every
// constrained symbol below n occurrences
std::uint64_t brute_count(std::size_t m, int r, std::size_t n) {
    std::uint64_t total = 0;
    std::vector<int> col(m, 0);
    while (true) {
        std::vector<int> cnt(r, 0);
        for (int s : col) ++cnt[s];
        bool ok = true;
        for (int s = 1; s < r; ++s) ok &= cnt[s] <= static_cast<int>(n) - 1;
        total += ok;
        std::size_t i = m;
        bool done = true;
        while (i > 0) {
            --i;
            if (col[i] + 1 < r) {
                ++col[i];
                std::fill(col.begin() + i + 1, col.end(), 0);
                done = false;
                break;
            }
            if (i == 0) break;
        }
        if (done) break;
    }
    return total;
}

}  // namespace

TEST_CASE("bounded symbol column count matches enumeration") {
    CHECK(bounded_symbol_column_count(3, 2, 2).to_u64() == 4);   // at most one 1
    CHECK(bounded_symbol_column_count(3, 3, 2).to_u64() == 13);  // enumerated oracle value
    for (std::size_t m = 1; m <= 6; ++m)
        for (int r = 2; r <= 4; ++r)
            for (std::size_t n = 2; n <= 3; ++n)
                CHECK(bounded_symbol_column_count(m, r, n).to_u64() == brute_count(m, r, n));
}

TEST_CASE("bounded symbol count is strictly increasing in m") {
    for (int r = 2; r <= 4; ++r)
        for (std::size_t n = 2; n <= 3; ++n)
            for (std::size_t m = 1; m <= 7; ++m)
                CHECK(bounded_symbol_column_count(m, r, n) <
                      bounded_symbol_column_count(m + 1, r, n));
}
