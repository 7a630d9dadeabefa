#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "forbcfg/bigint.hpp"
#include "forbcfg/family.hpp"
#include "forbcfg/matrix.hpp"

namespace forbcfg {

inline constexpr std::uint64_t kDefaultColumnBudget = 1'000'000;

/// Direct product of relabel(a2, i, j) over all pairs i < j below r.
/// a2 must be simple; the result has C(r,2)*rows(a2) rows and
/// |a2|^C(r,2) columns.
RMatrix product_construction(const RMatrix& a2, int r,
                             std::uint64_t column_budget = kDefaultColumnBudget);

/// All length-m columns over r symbols in which every nonzero symbol occurs
/// at most n-1 times. When constrain_low is true the constrained symbols are
/// 0..r-2 instead (the mirror image), leaving the top symbol free.
RMatrix multinomial_construction(std::size_t m, int r, std::size_t n,
                                 bool constrain_low = false,
                                 std::uint64_t column_budget = kDefaultColumnBudget);

/// Witness meeting the exact bound for Sym of a constant p x q block:
/// columns with at most p-1 of each low symbol, plus for every p-row subset
/// and low symbol, q-1 block columns made distinct deterministically.
RMatrix block_exact_construction(std::size_t m, int r, std::size_t p, std::size_t q,
                                 std::uint64_t column_budget = kDefaultColumnBudget);

/// r(q-1) near-constant columns (m-1 equal entries, one marker entry).
RMatrix s_block_construction(std::size_t m, int r, std::size_t q);

/// All 0/1 columns of sum exactly p-1 on m rows.
RMatrix ks_chain_construction(std::size_t m, std::size_t p);

struct ConstructionDescriptor {
    std::string kind;  // product | multinomial | block-exact | s-block | ks-chain
    std::map<std::string, std::int64_t> params;
    std::optional<RMatrix> base;  // product only
    ConfigFamily claimed_family;
    BigUint claimed_count;
};

struct VerificationReport {
    std::string kind;
    std::size_t rows = 0;
    std::uint64_t cols = 0;
    std::string claimed_cols;
    bool simple = false;
    bool count_ok = false;
    bool avoid_ok = false;
    bool pass = false;
    std::string note;
    double seconds = 0.0;
};

/// Regenerates the construction and machine-checks simplicity, the claimed
/// column count, and avoidance of the claimed family.
VerificationReport verify_construction(const ConstructionDescriptor& d);

/// Descriptor helpers with the claimed family/count filled in.
ConstructionDescriptor describe_multinomial(std::size_t m, int r, std::size_t n,
                                            const RMatrix& avoided_2symbol,
                                            bool constrain_low = false);
ConstructionDescriptor describe_block_exact(std::size_t m, int r, std::size_t p, std::size_t q);
ConstructionDescriptor describe_s_block(std::size_t m, int r, std::size_t p, std::size_t q);
ConstructionDescriptor describe_ks_chain(std::size_t m, std::size_t p);
ConstructionDescriptor describe_product(const RMatrix& a2, int r, const RMatrix& avoided_2symbol);

}  // namespace forbcfg
