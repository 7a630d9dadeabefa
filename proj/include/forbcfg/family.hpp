#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "forbcfg/matrix.hpp"

namespace forbcfg {

/// Finite set of forbidden configurations over a common alphabet.
/// Members are deduplicated up to configuration equivalence and kept sorted
/// for deterministic digests.
class ConfigFamily {
public:
    ConfigFamily() : alphabet_(2) {}
    ConfigFamily(int alphabet, std::vector<RMatrix> members);

    int alphabet() const { return alphabet_; }
    const std::vector<RMatrix>& members() const { return members_; }
    std::size_t size() const { return members_.size(); }
    bool normalized() const { return normalized_; }

    /// Drops members that contain another member as a configuration (those
    /// are implied). Sets the normalized flag.
    ConfigFamily normalize() const;

    /// Stable digest of the canonical member list, for caching.
    std::string digest() const;

    std::string to_text() const;
    static ConfigFamily parse(const std::string& text);

private:
    int alphabet_;
    std::vector<RMatrix> members_;
    bool normalized_ = false;
};

/// { F(i,j) : 0 <= i < j <= r-1 }, deduplicated.
ConfigFamily sym_family(const RMatrix& f, int r);

/// { F(i,j) : 0 <= i != j <= r-1 }; equals Sym(F) union Sym(complement(F)).
ConfigFamily s_family(const RMatrix& f, int r);

ConfigFamily family_union(const ConfigFamily& a, const ConfigFamily& b);

ConfigFamily single(const RMatrix& f);

/// True iff no member of fam is a configuration of a.
bool family_avoided(const RMatrix& a, const ConfigFamily& fam);

}  // namespace forbcfg
