#pragma once

#include <cstdint>
#include <optional>

#include "forbcfg/multigraph.hpp"

namespace forbcfg {

struct TuranResult {
    int value = 0;             // maximum edge count
    Multigraph witness{1};     // one extremal graph
    std::uint64_t states = 0;  // canonical forms visited
};

struct TuranOptions {
    std::uint64_t state_budget = 5'000'000;
};

/// Maximum total edge multiplicity of a multigraph on n labeled vertices with
/// multiplicity at most q containing no family member as a submultigraph.
/// Level-by-level growth with canonical-form deduplication; supergraphs of
/// violators are never expanded.
TuranResult ex_q(std::size_t n, int q, const GraphFamily& fam,
                 const TuranOptions& opts = {});

}  // namespace forbcfg
