#include "forbcfg/family.hpp"

#include <algorithm>
#include <cstdio>
#include <set>
#include <sstream>

namespace forbcfg {

namespace {

std::vector<RMatrix> dedup_members(std::vector<RMatrix> in) {
    std::sort(in.begin(), in.end());
    in.erase(std::unique(in.begin(), in.end()), in.end());
    // drop configuration-equivalent duplicates (rare, small lists)
    std::vector<RMatrix> out;
    for (const RMatrix& m : in) {
        bool dup = false;
        for (const RMatrix& kept : out)
            if (config_equal(kept, m)) { dup = true; break; }
        if (!dup) out.push_back(m);
    }
    return out;
}

// 64-bit FNV-1a
std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

}  // namespace

ConfigFamily::ConfigFamily(int alphabet, std::vector<RMatrix> members)
    : alphabet_(alphabet) {
    for (const RMatrix& m : members) {
        if (m.alphabet() > alphabet_)
            throw std::invalid_argument("ConfigFamily: member alphabet exceeds family alphabet");
    }
    members_ = dedup_members(std::move(members));
}

ConfigFamily ConfigFamily::normalize() const {
    std::vector<RMatrix> kept;
    for (std::size_t i = 0; i < members_.size(); ++i) {
        bool implied = false;
        for (std::size_t j = 0; j < members_.size(); ++j) {
            if (i == j) continue;
            if (config_equal(members_[i], members_[j])) continue;
            if (contains_config(members_[j], members_[i])) { implied = true; break; }
        }
        if (!implied) kept.push_back(members_[i]);
    }
    ConfigFamily out(alphabet_, std::move(kept));
    out.normalized_ = true;
    return out;
}

std::string ConfigFamily::digest() const {
    std::vector<std::string> keys;
    keys.reserve(members_.size());
    for (const RMatrix& m : members_) keys.push_back(config_key(m));
    std::sort(keys.begin(), keys.end());
    std::string blob = "r=" + std::to_string(alphabet_) + ";";
    for (const std::string& k : keys) blob += k + "|";
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx",
                  static_cast<unsigned long long>(fnv1a(blob)));
    return std::string(buf);
}

std::string ConfigFamily::to_text() const {
    std::ostringstream out;
    for (std::size_t i = 0; i < members_.size(); ++i) {
        if (i) out << '\n';
        out << members_[i].to_text();
    }
    return out.str();
}

ConfigFamily ConfigFamily::parse(const std::string& text) {
    std::istringstream in(text);
    std::vector<RMatrix> members;
    int line_no = 0;
    auto has_content = [&]() {
        std::streampos pos = in.tellg();
        std::string line;
        bool found = false;
        while (std::getline(in, line)) {
            if (line.find_first_not_of(" \t\r") != std::string::npos) { found = true; break; }
        }
        in.clear();
        in.seekg(pos);
        return found;
    };
    while (has_content()) {
        members.push_back(RMatrix::parse_stream(in, &line_no));
    }
    int r = 2;
    for (const RMatrix& m : members) r = std::max(r, m.alphabet());
    return ConfigFamily(r, std::move(members));
}

ConfigFamily sym_family(const RMatrix& f, int r) {
    if (r < 2) throw std::invalid_argument("sym_family: alphabet must be >= 2");
    std::vector<RMatrix> members;
    for (Symbol i = 0; i + 1 < r; ++i)
        for (Symbol j = i + 1; j < r; ++j) members.push_back(relabel(f, i, j, r));
    return ConfigFamily(r, std::move(members));
}

ConfigFamily s_family(const RMatrix& f, int r) {
    if (r < 2) throw std::invalid_argument("s_family: alphabet must be >= 2");
    std::vector<RMatrix> members;
    for (Symbol i = 0; i < r; ++i)
        for (Symbol j = 0; j < r; ++j) {
            if (i == j) continue;
            members.push_back(relabel(f, i, j, r));
        }
    return ConfigFamily(r, std::move(members));
}

ConfigFamily family_union(const ConfigFamily& a, const ConfigFamily& b) {
    std::vector<RMatrix> members = a.members();
    members.insert(members.end(), b.members().begin(), b.members().end());
    return ConfigFamily(std::max(a.alphabet(), b.alphabet()), std::move(members));
}

ConfigFamily single(const RMatrix& f) {
    return ConfigFamily(f.alphabet(), {f});
}

bool family_avoided(const RMatrix& a, const ConfigFamily& fam) {
    for (const RMatrix& f : fam.members())
        if (contains_config(f, a)) return false;
    return true;
}

}  // namespace forbcfg
