#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace forbcfg {

/// Undirected loop-free multigraph on labeled vertices, stored as the
/// upper-triangular multiplicity vector in row-major order.
class Multigraph {
public:
    explicit Multigraph(std::size_t n) : n_(n), mult_(n * (n - 1) / 2, 0) {}
    Multigraph(std::size_t n, std::vector<int> mult);

    std::size_t vertices() const { return n_; }
    int mult(std::size_t i, std::size_t j) const;
    void set_mult(std::size_t i, std::size_t j, int m);
    void add_edge(std::size_t i, std::size_t j, int m = 1);

    int edge_count() const;  // total multiplicity
    int max_mult() const;
    int degree(std::size_t v) const;  // sum of incident multiplicities

    const std::vector<int>& slots() const { return mult_; }

    /// Lexicographically least multiplicity vector over all vertex
    /// permutations.
    std::string canonical_key() const;

    bool operator==(const Multigraph& rhs) const = default;

    std::string to_text() const;  // "n" then "i j mult" lines
    static Multigraph parse(const std::string& text);

private:
    std::size_t n_;
    std::vector<int> mult_;
    std::size_t slot(std::size_t i, std::size_t j) const;
};

/// True iff some vertex injection maps every edge of h onto at least its
/// multiplicity in g.
bool contains_submultigraph(const Multigraph& h, const Multigraph& g);

struct NamedGraph {
    std::string name;
    Multigraph graph;
};

/// Family of forbidden multigraph patterns, deduplicated by canonical key.
class GraphFamily {
public:
    GraphFamily() = default;
    void add(const std::string& name, const Multigraph& g);
    const std::vector<NamedGraph>& members() const { return members_; }
    bool empty() const { return members_.empty(); }

private:
    std::vector<NamedGraph> members_;
};

// Named generators.
Multigraph make_complete(std::size_t r, int mult = 1);     // mult * K_r
Multigraph make_cycle(std::size_t k, int mult = 1);        // mult * C_k
Multigraph make_star(std::size_t leaves, int mult = 1);    // mult * S_k, center 0
Multigraph make_path(std::size_t vertices, int mult = 1);  // mult * P_k
Multigraph make_single_edge(int mult);
/// Multiplicity-n edge with a pendant edge at each endpoint, to two distinct
/// extra vertices (4 vertices).
Multigraph make_frak_c(int n);
/// Multiplicity-n edge with both endpoints joined to one extra vertex
/// (3 vertices).
Multigraph make_frak_d(int n);
/// Multiplicity-n edge with one pendant edge (3 vertices).
Multigraph make_gamma(int n);

/// Parses names like "P4", "K3", "C4", "S2", "2xS3", "frak_c2", "frak_d1",
/// "gamma3", "3xe" (multi-edge).
Multigraph parse_graph_name(const std::string& name);

}  // namespace forbcfg
