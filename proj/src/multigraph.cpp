#include "forbcfg/multigraph.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace forbcfg {

Multigraph::Multigraph(std::size_t n, std::vector<int> mult) : n_(n), mult_(std::move(mult)) {
    if (mult_.size() != n * (n - 1) / 2)
        throw std::invalid_argument("Multigraph: slot vector has wrong length");
    for (int m : mult_)
        if (m < 0) throw std::invalid_argument("Multigraph: negative multiplicity");
}

std::size_t Multigraph::slot(std::size_t i, std::size_t j) const {
    if (i > j) std::swap(i, j);
    if (i == j || j >= n_) throw std::invalid_argument("Multigraph: bad edge");
    // row-major upper triangle
    return i * n_ - i * (i + 1) / 2 + (j - i - 1);
}

int Multigraph::mult(std::size_t i, std::size_t j) const { return mult_[slot(i, j)]; }

void Multigraph::set_mult(std::size_t i, std::size_t j, int m) {
    if (m < 0) throw std::invalid_argument("Multigraph: negative multiplicity");
    mult_[slot(i, j)] = m;
}

void Multigraph::add_edge(std::size_t i, std::size_t j, int m) { mult_[slot(i, j)] += m; }

int Multigraph::edge_count() const {
    return std::accumulate(mult_.begin(), mult_.end(), 0);
}

int Multigraph::max_mult() const {
    return mult_.empty() ? 0 : *std::max_element(mult_.begin(), mult_.end());
}

int Multigraph::degree(std::size_t v) const {
    int d = 0;
    for (std::size_t u = 0; u < n_; ++u)
        if (u != v) d += mult(u, v);
    return d;
}

std::string Multigraph::canonical_key() const {
    std::vector<std::size_t> perm(n_);
    std::iota(perm.begin(), perm.end(), 0);
    std::string best;
    do {
        std::string key;
        key.reserve(mult_.size() + 4);
        key += static_cast<char>('0' + n_);
        key += ':';
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = i + 1; j < n_; ++j)
                key += static_cast<char>('0' + mult(perm[i], perm[j]));
        if (best.empty() || key < best) best = key;
    } while (std::next_permutation(perm.begin(), perm.end()));
    if (best.empty()) best = static_cast<char>('0' + n_) + std::string(":");
    return best;
}

std::string Multigraph::to_text() const {
    std::ostringstream out;
    out << n_ << '\n';
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = i + 1; j < n_; ++j)
            if (mult(i, j) > 0) out << i << ' ' << j << ' ' << mult(i, j) << '\n';
    return out.str();
}

Multigraph Multigraph::parse(const std::string& text) {
    std::istringstream in(text);
    std::size_t n;
    if (!(in >> n) || n == 0) throw std::runtime_error("multigraph parse: bad vertex count");
    Multigraph g(n);
    std::size_t i, j;
    int m;
    while (in >> i >> j >> m) g.set_mult(i, j, m);
    return g;
}

namespace {

bool sub_dfs(const Multigraph& h, const Multigraph& g, std::vector<int>& map,
             std::vector<bool>& used, std::size_t v) {
    if (v == h.vertices()) return true;
    for (std::size_t t = 0; t < g.vertices(); ++t) {
        if (used[t]) continue;
        if (h.degree(v) > g.degree(t)) continue;
        bool ok = true;
        for (std::size_t u = 0; u < v; ++u) {
            if (h.mult(u, v) > g.mult(map[u], t)) { ok = false; break; }
        }
        if (!ok) continue;
        map[v] = static_cast<int>(t);
        used[t] = true;
        if (sub_dfs(h, g, map, used, v + 1)) { used[t] = false; return true; }
        used[t] = false;
    }
    return false;
}

}  // namespace

bool contains_submultigraph(const Multigraph& h, const Multigraph& g) {
    if (h.vertices() > g.vertices()) return false;
    if (h.edge_count() > g.edge_count()) return false;
    if (h.max_mult() > g.max_mult()) return false;
    std::vector<int> map(h.vertices(), -1);
    std::vector<bool> used(g.vertices(), false);
    return sub_dfs(h, g, map, used, 0);
}

void GraphFamily::add(const std::string& name, const Multigraph& g) {
    const std::string key = g.canonical_key();
    for (const NamedGraph& m : members_)
        if (m.graph.vertices() == g.vertices() && m.graph.canonical_key() == key) return;
    members_.push_back({name, g});
}

Multigraph make_complete(std::size_t r, int mult) {
    Multigraph g(r);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = i + 1; j < r; ++j) g.set_mult(i, j, mult);
    return g;
}

Multigraph make_cycle(std::size_t k, int mult) {
    if (k < 3) throw std::invalid_argument("make_cycle: need at least 3 vertices");
    Multigraph g(k);
    for (std::size_t i = 0; i < k; ++i) g.add_edge(i, (i + 1) % k, mult);
    return g;
}

Multigraph make_star(std::size_t leaves, int mult) {
    Multigraph g(leaves + 1);
    for (std::size_t i = 1; i <= leaves; ++i) g.set_mult(0, i, mult);
    return g;
}

Multigraph make_path(std::size_t vertices, int mult) {
    if (vertices < 2) throw std::invalid_argument("make_path: need at least 2 vertices");
    Multigraph g(vertices);
    for (std::size_t i = 0; i + 1 < vertices; ++i) g.set_mult(i, i + 1, mult);
    return g;
}

Multigraph make_single_edge(int mult) {
    Multigraph g(2);
    g.set_mult(0, 1, mult);
    return g;
}

Multigraph make_frak_c(int n) {
    Multigraph g(4);
    g.set_mult(1, 2, n);
    g.set_mult(0, 1, 1);
    g.set_mult(2, 3, 1);
    return g;
}

Multigraph make_frak_d(int n) {
    Multigraph g(3);
    g.set_mult(1, 2, n);
    g.set_mult(0, 1, 1);
    g.set_mult(0, 2, 1);
    return g;
}

Multigraph make_gamma(int n) {
    Multigraph g(3);
    g.set_mult(0, 1, n);
    g.set_mult(0, 2, 1);
    return g;
}

Multigraph parse_graph_name(const std::string& raw) {
    std::string name = raw;
    int mult = 1;
    if (auto x = name.find('x'); x != std::string::npos && x > 0 &&
                                 name.find_first_not_of("0123456789", 0) >= x) {
        mult = std::stoi(name.substr(0, x));
        name = name.substr(x + 1);
    }
    auto num = [&](std::size_t from) { return std::stoul(name.substr(from)); };
    if (name == "e") return make_single_edge(mult);
    if (name.rfind("frak_c", 0) == 0) return make_frak_c(static_cast<int>(num(6)) * mult);
    if (name.rfind("frak_d", 0) == 0) return make_frak_d(static_cast<int>(num(6)) * mult);
    if (name.rfind("gamma", 0) == 0) return make_gamma(static_cast<int>(num(5)) * mult);
    if (name.size() >= 2) {
        char c = name[0];
        if (c == 'K') return make_complete(num(1), mult);
        if (c == 'C') return make_cycle(num(1), mult);
        if (c == 'S') return make_star(num(1), mult);
        if (c == 'P') return make_path(num(1), mult);
    }
    throw std::invalid_argument("unknown graph name: " + raw);
}

}  // namespace forbcfg
