#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ramsey/graph.hpp"

namespace ramsey {

// Edge colouring of the complete graph K_n.  Colours are 1..color_count();
// 0 marks a still-uncoloured edge.
class EdgeColoring {
public:
    EdgeColoring(int n, int colors = 3);

    int vertex_count() const { return n_; }
    int color_count() const { return colors_; }
    std::int64_t edge_slots() const { return static_cast<std::int64_t>(slots_.size()); }

    int color(int u, int v) const;
    void set_color(int u, int v, int c);
    bool total() const;
    std::int64_t colored_count() const;
    std::int64_t class_size(int c) const;

    // row-major index of the unordered pair {u,v} in the upper triangle
    static std::int64_t slot_index(int n, int u, int v);

    bool operator==(const EdgeColoring&) const = default;

private:
    void check_pair(int u, int v) const;
    int n_;
    int colors_;
    std::vector<std::uint8_t> slots_;
};

// the spanning subgraph of K_n formed by the edges of colour c (1-based)
SimpleGraph color_class(const EdgeColoring& col, int c);

// per-colour facts gathered by verify_coloring
struct ColorClassStats {
    std::int64_t edges = 0;
    int longest_path = 0;
    int circumference = 0;
    // a forbidden pattern found in this class, as a vertex sequence of
    // exactly the target order (cyclic for cycle targets)
    std::optional<std::vector<int>> violation;
};

struct ColorReport {
    std::vector<ColorClassStats> per_color;
    bool good = false;
};

// check a total colouring against one forbidden pattern per colour
ColorReport verify_coloring(const EdgeColoring& col, const std::vector<Target>& targets);

} // namespace ramsey
