#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "forbcfg/bigint.hpp"
#include "forbcfg/family.hpp"
#include "forbcfg/matrix.hpp"

namespace forbcfg {

class ForbCache;

struct SolveOptions {
    std::uint64_t node_budget = 200'000'000;
    std::uint64_t column_budget = 1u << 20;  // cap on r^m
    int threads = 1;
    ForbCache* cache = nullptr;
};

struct SolveResult {
    std::uint64_t value = 0;
    RMatrix witness;
    std::string status;  // "exact" or "lower-bound-only"
    std::uint64_t nodes = 0;
    double seconds = 0.0;
    bool from_cache = false;
};

/// Maximum number of columns of a simple m-row r-matrix containing no member
/// of fam, by depth-first branch and bound over the lexicographic column
/// universe. Exceeding the node budget downgrades the status to
/// lower-bound-only with the best witness found.
SolveResult exact_forb(std::size_t m, int r, const ConfigFamily& fam,
                       const SolveOptions& opts = {});

/// sum_{i=0}^{k-1} C(m, i).
BigUint sauer_formula(std::uint64_t m, std::uint64_t k);

/// True iff the solver value for the column-sum-s slice of K_k matches the
/// full K_k bound.
bool ks_equality_check(std::size_t m, std::size_t k, std::size_t s,
                       const SolveOptions& opts = {});

/// forb_supp + C(m,k) C(r,2) (mu-1) k! s, with k = rows(F),
/// mu = max multiplicity, s = |support(F)|.
BigUint support_bound(std::uint64_t m, int r, const RMatrix& f, const BigUint& forb_supp);

/// Exact count for Sym of a constant p x q block:
/// bounded-symbol columns plus (q-1)(r-1) C(m,p).
BigUint block_formula(std::uint64_t m, int r, std::uint64_t p, std::uint64_t q);

struct SBlockValue {
    std::uint64_t value = 0;
    std::string note;  // non-empty flags a caveat (e.g. q = 1)
};

/// r(q-1), valid above the stated row threshold m >= r^{r(q-1)} (p-1) + 1.
/// Below the threshold the call is refused.
SBlockValue s_block_value(std::uint64_t m, int r, std::uint64_t p, std::uint64_t q);

struct InductionCheck {
    std::uint64_t lhs = 0;       // forb(m, F)
    std::uint64_t rhs_ch = 0;    // forb(m-1, ch(F))
    std::uint64_t rhs_same = 0;  // forb(m-1, F)
    bool holds = false;
};

/// Checks forb(m,F) <= forb(m-1,ch(F)) + forb(m-1,F) with exact values
/// (2-symbol matrices).
InductionCheck induction_inequality_check(std::size_t m, const RMatrix& f,
                                          const SolveOptions& opts = {});

}  // namespace forbcfg
