#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ramsey/errors.hpp"

namespace ramsey {

// hard cap of the bitmask representation
inline constexpr int kMaxVertices = 64;
// hard cap of the exact path/cycle queries
inline constexpr int kMaxExactQuery = 20;

// Undirected simple graph on n <= 64 vertices.
// Adjacency is stored as one 64-bit neighbour mask per vertex.
class SimpleGraph {
public:
    explicit SimpleGraph(int n);

    int vertex_count() const { return n_; }
    void add_edge(int u, int v);
    void remove_edge(int u, int v);
    bool has_edge(int u, int v) const;
    std::uint64_t neighbors(int v) const;
    int degree(int v) const;
    std::int64_t edge_count() const;

    // vertex masks of the connected components, ordered by smallest member
    std::vector<std::uint64_t> components() const;

    // subgraph induced by the set bits of mask; second element maps the
    // compacted labels back to the original ones
    std::pair<SimpleGraph, std::vector<int>> induced(std::uint64_t mask) const;

    const std::uint64_t* adjacency() const { return adj_.data(); }

    bool operator==(const SimpleGraph&) const = default;

private:
    void check_vertex(int v) const;
    int n_;
    std::vector<std::uint64_t> adj_;
};

enum class PatternKind { Path, Cycle };

// a forbidden pattern: the path P_k or the cycle C_k, measured in vertices
struct Target {
    PatternKind kind;
    int order;

    static Target path(int k);
    static Target cycle(int k);
    bool operator==(const Target&) const = default;
};

// order (vertex count) of a longest path; >= 1 for every non-empty graph
int longest_path_order(const SimpleGraph& g);

// does g contain a path on at least k vertices?
bool has_path(const SimpleGraph& g, int k);

// vertex sequence of some path on exactly k vertices, if one exists
std::optional<std::vector<int>> find_path(const SimpleGraph& g, int k);

// order of a longest cycle; 0 when g is a forest
int circumference(const SimpleGraph& g);

// does g contain a cycle on exactly k vertices?
bool has_cycle_exact(const SimpleGraph& g, int k);

// vertex sequence of some cycle on exactly k vertices, if one exists
std::optional<std::vector<int>> find_cycle_exact(const SimpleGraph& g, int k);

namespace detail {

// raw-mask kernels used by the search and the Turan oracles; adj points at
// n neighbour masks, the edge {u,v} is assumed present in adj
bool has_path_through_edge(const std::uint64_t* adj, int n, int k, int u, int v);
bool has_cycle_exact_through_edge(const std::uint64_t* adj, int n, int k, int u, int v);

// closure of the seed set inside allowed; seeds outside allowed are dropped
std::uint64_t closure(const std::uint64_t* adj, std::uint64_t allowed, std::uint64_t seeds);

// two-colouring test; fills side with one part when bipartite
bool is_bipartite(const std::uint64_t* adj, std::uint64_t comp, std::uint64_t* side);

} // namespace detail

} // namespace ramsey
