#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "forbcfg/family.hpp"
#include "forbcfg/matrix.hpp"
#include "forbcfg/multigraph.hpp"

namespace forbcfg {

/// Minimal configurations G with G ≺ F ≺ G x [0 1]. Members of a nonempty
/// result have exactly rows(F)-1 rows. 2-symbol matrices only.
std::vector<RMatrix> ch(const RMatrix& f);

/// n-fold application of ch, with configuration-level deduplication at each
/// level. The empty set is a fixed point.
std::vector<RMatrix> ch_n(const RMatrix& f, std::size_t n);

/// rows(F) + ceil(log2(max column multiplicity)): inducting this many times
/// on one symbol pair always empties the repeated-column matrix.
int edge_multiplicity_cap(const RMatrix& f);

/// Certifies that forbidding all symbol-pair relabelings of the given
/// 2-symbol members bounds the column count by a constant: every one of
/// I_l, T_l and their complements (l up to max_l) must contain some member.
bool constant_bound_certified(const std::vector<RMatrix>& members, std::size_t max_l = 4);

struct HRuleEntry {
    std::string rule;    // which derivation rule fired
    std::string detail;  // parameters, e.g. the induction depth
    std::vector<std::string> graphs;
};

struct HFamilyResult {
    GraphFamily family;
    std::vector<HRuleEntry> log;
};

/// Forbidden-subgraph family for the induction multigraph of F at alphabet r,
/// derived from the rule base (multiplicity cap, pair rules once some chain
/// level drops into [0 1], complete-graph certification) plus curated entries
/// for specific matrices.
HFamilyResult h_family(const RMatrix& f, int r);

struct DerivationStep {
    std::string rule;
    std::string detail;
    int exponent;
};

struct ExponentSide {
    int exponent = 0;
    std::vector<DerivationStep> chain;  // every applicable rule; first is the winner
};

struct ExponentBound {
    int lower = 0;
    int upper = 0;
    bool tight = false;
    std::optional<std::uint64_t> exact_value;  // constant in m when set
    std::vector<DerivationStep> lower_chain;
    std::vector<DerivationStep> upper_chain;
};

/// Best known construction exponent: forb(m, r, Sym(F)) = Omega(m^e).
ExponentSide lower_exponent(const RMatrix& f, int r);

/// Best derived upper exponent: forb(m, r, Sym(F)) = O(m^e). Requires r >= 3.
ExponentSide upper_exponent(const RMatrix& f, int r);

/// Combined classification; exact_value is set for cases constant in m.
ExponentBound classify(const RMatrix& f, int r);

// Known 2-symbol growth exponents used by the product-construction rule.
struct KnownExponent {
    int exponent;
    std::string citation;
};
std::optional<KnownExponent> known_two_symbol_exponent(const RMatrix& g);

/// The three-row matrix whose sub-configurations all have linear growth.
RMatrix linear_three_row_envelope();

/// [1 ... 1] over K_{k-1}; k rows.
RMatrix ones_over_complete(std::size_t k);

bool af10_predicate(const RMatrix& f);  // all three excluded-pair kinds exist

}  // namespace forbcfg
