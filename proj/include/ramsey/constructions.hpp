#pragma once

#include <array>
#include <utility>
#include <vector>

#include "ramsey/coloring.hpp"
#include "ramsey/graph.hpp"

namespace ramsey {

// layout of the four-part blow-up witness for order n: part sizes and, per
// color, the two part pairs whose cross edges get that color
struct BlowupSpec {
    int n = 0;
    std::array<int, 4> part_sizes{};
    std::array<std::array<std::pair<int, int>, 2>, 3> schedule{};
    int total() const { return part_sizes[0] + part_sizes[1] + part_sizes[2] + part_sizes[3]; }
    static BlowupSpec make(int n);
};

// total 3-coloring of the complete graph on conjectured_r3_path(n)-1
// vertices in which no color contains a path on n vertices
EdgeColoring blowup_witness(int n);

// disjoint union of t copies of K_k and one K_r (r < k); P_{k+1}-free
SimpleGraph turan_extremal_union(int t, int k, int r);

// clique on (k-1)/2 vertices joined to `tail` independent vertices, odd k;
// P_{k+1}-free whenever tail >= (k+1)/2
SimpleGraph turan_extremal_join(int k, int tail);

// K_{a,b} minus the edges of a K_{ap,bp} anchored on the low-index vertices
// of each side
SimpleGraph biclique_minus_biclique(int a, int b, int ap, int bp);

// disjoint union of complete bipartite graphs
SimpleGraph biclique_union(const std::vector<std::pair<int, int>>& parts);

} // namespace ramsey
