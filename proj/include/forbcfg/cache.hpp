#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>

namespace forbcfg {

/// Persisted map from (m, r, family digest) to a computed value. Exact
/// entries are never overwritten by formula entries. File format: one JSON
/// object per line; corrupt lines are skipped with a warning.
class ForbCache {
public:
    struct Entry {
        std::uint64_t value = 0;
        std::string method;  // "exact" or "formula"
        std::string timestamp;
    };

    static ForbCache load(const std::string& path);
    void save(const std::string& path) const;

    /// True if the entry was inserted or upgraded.
    bool store(std::size_t m, int r, const std::string& digest, std::uint64_t value,
               const std::string& method);

    std::optional<std::uint64_t> lookup_exact(std::size_t m, int r,
                                              const std::string& digest) const;
    std::optional<Entry> lookup(std::size_t m, int r, const std::string& digest) const;

    void merge(const ForbCache& other);
    std::size_t size() const { return entries_.size(); }
    const std::map<std::string, Entry>& entries() const { return entries_; }

    int skipped_lines = 0;  // corrupt lines seen by the last load

    static std::string key(std::size_t m, int r, const std::string& digest);

private:
    std::map<std::string, Entry> entries_;
};

}  // namespace forbcfg
