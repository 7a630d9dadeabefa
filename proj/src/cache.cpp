#include "forbcfg/cache.hpp"

#include <chrono>
#include <fstream>
#include <iostream>

#include <json.hpp>

namespace forbcfg {

using nlohmann::json;

std::string ForbCache::key(std::size_t m, int r, const std::string& digest) {
    return "m=" + std::to_string(m) + ";r=" + std::to_string(r) + ";fam=" + digest;
}

ForbCache ForbCache::load(const std::string& path) {
    ForbCache cache;
    std::ifstream in(path);
    if (!in) return cache;  // absent file = empty cache
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        try {
            json j = json::parse(line);
            Entry e;
            e.value = j.at("value").get<std::uint64_t>();
            e.method = j.at("method").get<std::string>();
            e.timestamp = j.value("timestamp", "");
            std::string k = key(j.at("m").get<std::size_t>(), j.at("r").get<int>(),
                                j.at("digest").get<std::string>());
            auto it = cache.entries_.find(k);
            if (it == cache.entries_.end() ||
                (it->second.method != "exact" && e.method == "exact")) {
                cache.entries_[k] = e;
            }
        } catch (const std::exception&) {
            ++cache.skipped_lines;
            std::cerr << "cache: skipping corrupt line " << line_no << " of " << path << "\n";
        }
    }
    return cache;
}

void ForbCache::save(const std::string& path) const {
    std::ofstream out(path, std::ios::trunc);
    if (!out) throw std::runtime_error("cache: cannot write " + path);
    for (const auto& [k, e] : entries_) {
        // key format m=..;r=..;fam=..
        std::size_t mpos = k.find("m=");
        std::size_t rpos = k.find(";r=");
        std::size_t fpos = k.find(";fam=");
        json j;
        j["m"] = std::stoull(k.substr(mpos + 2, rpos - (mpos + 2)));
        j["r"] = std::stoi(k.substr(rpos + 3, fpos - (rpos + 3)));
        j["digest"] = k.substr(fpos + 5);
        j["value"] = e.value;
        j["method"] = e.method;
        if (!e.timestamp.empty()) j["timestamp"] = e.timestamp;
        out << j.dump() << "\n";
    }
}

bool ForbCache::store(std::size_t m, int r, const std::string& digest, std::uint64_t value,
                      const std::string& method) {
    const std::string k = key(m, r, digest);
    auto it = entries_.find(k);
    if (it != entries_.end()) {
        if (it->second.method == "exact" && method != "exact") return false;
        if (it->second.method == "exact" && method == "exact") return false;
    }
    Entry e;
    e.value = value;
    e.method = method;
    const auto now = std::chrono::system_clock::now();
    e.timestamp = std::to_string(
        std::chrono::duration_cast<std::chrono::seconds>(now.time_since_epoch()).count());
    entries_[k] = e;
    return true;
}

std::optional<std::uint64_t> ForbCache::lookup_exact(std::size_t m, int r,
                                                     const std::string& digest) const {
    auto it = entries_.find(key(m, r, digest));
    if (it == entries_.end() || it->second.method != "exact") return std::nullopt;
    return it->second.value;
}

std::optional<ForbCache::Entry> ForbCache::lookup(std::size_t m, int r,
                                                  const std::string& digest) const {
    auto it = entries_.find(key(m, r, digest));
    if (it == entries_.end()) return std::nullopt;
    return it->second;
}

void ForbCache::merge(const ForbCache& other) {
    for (const auto& [k, e] : other.entries_) {
        auto it = entries_.find(k);
        if (it == entries_.end() ||
            (it->second.method != "exact" && e.method == "exact")) {
            entries_[k] = e;
        }
    }
}

}  // namespace forbcfg
