#include "forbcfg/turan.hpp"

#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace forbcfg {

namespace {

bool violates(const Multigraph& g, const GraphFamily& fam) {
    for (const NamedGraph& f : fam.members())
        if (contains_submultigraph(f.graph, g)) return true;
    return false;
}

}  // namespace

TuranResult ex_q(std::size_t n, int q, const GraphFamily& fam, const TuranOptions& opts) {
    if (n < 1 || n > 8) throw std::invalid_argument("ex_q: vertex count out of range");
    if (q < 0) throw std::invalid_argument("ex_q: negative multiplicity cap");

    TuranResult res;
    Multigraph zero(n);
    if (violates(zero, fam)) {
        // only possible with an edgeless family member; nothing is feasible
        res.value = 0;
        res.witness = zero;
        return res;
    }
    res.witness = zero;

    std::vector<Multigraph> level{zero};
    std::unordered_set<std::string> seen{zero.canonical_key()};
    res.states = 1;

    const std::size_t slots = n * (n - 1) / 2;
    int edges = 0;
    while (!level.empty()) {
        std::vector<Multigraph> next;
        std::unordered_set<std::string> next_seen;
        for (const Multigraph& g : level) {
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = i + 1; j < n; ++j) {
                    if (g.mult(i, j) >= q) continue;
                    Multigraph h = g;
                    h.add_edge(i, j, 1);
                    std::string key = h.canonical_key();
                    if (next_seen.count(key)) continue;
                    if (violates(h, fam)) continue;
                    next_seen.insert(key);
                    if (++res.states > opts.state_budget)
                        throw std::runtime_error("ex_q: state budget exceeded");
                    next.push_back(std::move(h));
                }
        }
        if (next.empty()) break;
        ++edges;
        res.witness = next.front();
        level = std::move(next);
        if (static_cast<std::size_t>(edges) >= slots * static_cast<std::size_t>(q)) break;
    }
    res.value = edges;
    return res;
}

}  // namespace forbcfg
