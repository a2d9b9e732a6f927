#pragma once

// Slow, independent reference implementations used only by the tests.
// Deliberately written with different algorithms than the library: subset
// dynamic programming for paths/cycles, odometer enumeration for colorings.

#include <cstdint>
#include <vector>

#include "ramsey/coloring.hpp"
#include "ramsey/graph.hpp"

namespace oracle {

// longest path order by DP over vertex subsets; 0 for the empty graph
int longest_path(const ramsey::SimpleGraph& g);

// longest cycle order by rooted subset DP; 0 for forests
int circumference(const ramsey::SimpleGraph& g);

// does some path on >= k vertices use the edge {u,v}?
bool path_through_edge(const ramsey::SimpleGraph& g, int k, int u, int v);

// does some cycle on exactly k vertices use the edge {u,v}?
bool cycle_through_edge(const ramsey::SimpleGraph& g, int k, int u, int v);

// all totally colored K_n colorings checked one by one; empty when none is
// good, otherwise some good coloring
std::vector<ramsey::EdgeColoring> good_colorings(int n,
                                                 const std::vector<ramsey::Target>& targets,
                                                 bool first_only = true);

// deterministic random graph on n vertices with edge probability num/den
ramsey::SimpleGraph random_graph(int n, std::uint32_t seed, int num = 1, int den = 2);

} // namespace oracle
