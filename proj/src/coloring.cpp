#include "ramsey/coloring.hpp"

#include <algorithm>
#include <bit>
#include <string>

namespace ramsey {

namespace {
inline int pop(std::uint64_t x) { return std::popcount(x); }
}

EdgeColoring::EdgeColoring(int n, int colors) : n_(n), colors_(colors) {
    if (n < 1 || n > kMaxVertices)
        throw DomainError("vertex count must be in [1,64], got " + std::to_string(n));
    if (colors < 1 || colors > 9)
        throw DomainError("colour count must be in [1,9], got " + std::to_string(colors));
    slots_.assign(static_cast<std::size_t>(n) * (n - 1) / 2, 0);
}

void EdgeColoring::check_pair(int u, int v) const {
    if (u < 0 || u >= n_ || v < 0 || v >= n_ || u == v)
        throw DomainError("invalid vertex pair {" + std::to_string(u) + "," +
                          std::to_string(v) + "} in K_" + std::to_string(n_));
}

std::int64_t EdgeColoring::slot_index(int n, int u, int v) {
    if (u > v) std::swap(u, v);
    return static_cast<std::int64_t>(u) * (2 * n - u - 1) / 2 + (v - u - 1);
}

int EdgeColoring::color(int u, int v) const {
    check_pair(u, v);
    return slots_[slot_index(n_, u, v)];
}

void EdgeColoring::set_color(int u, int v, int c) {
    check_pair(u, v);
    if (c < 0 || c > colors_)
        throw DomainError("colour " + std::to_string(c) + " outside [0," +
                          std::to_string(colors_) + "]");
    slots_[slot_index(n_, u, v)] = static_cast<std::uint8_t>(c);
}

bool EdgeColoring::total() const {
    return std::ranges::all_of(slots_, [](std::uint8_t c) { return c != 0; });
}

std::int64_t EdgeColoring::colored_count() const {
    return std::ranges::count_if(slots_, [](std::uint8_t c) { return c != 0; });
}

std::int64_t EdgeColoring::class_size(int c) const {
    if (c < 1 || c > colors_)
        throw DomainError("colour " + std::to_string(c) + " outside [1," +
                          std::to_string(colors_) + "]");
    return std::ranges::count(slots_, static_cast<std::uint8_t>(c));
}

SimpleGraph color_class(const EdgeColoring& col, int c) {
    if (c < 1 || c > col.color_count())
        throw DomainError("colour " + std::to_string(c) + " outside [1," +
                          std::to_string(col.color_count()) + "]");
    SimpleGraph g(col.vertex_count());
    for (int u = 0; u < col.vertex_count(); ++u)
        for (int v = u + 1; v < col.vertex_count(); ++v)
            if (col.color(u, v) == c) g.add_edge(u, v);
    return g;
}

ColorReport verify_coloring(const EdgeColoring& col, const std::vector<Target>& targets) {
    if (static_cast<int>(targets.size()) != col.color_count())
        throw DomainError("expected " + std::to_string(col.color_count()) +
                          " targets, got " + std::to_string(targets.size()));
    if (!col.total())
        throw DomainError("verify_coloring requires a total colouring");

    ColorReport rep;
    rep.per_color.resize(targets.size());
    rep.good = true;
    for (int c = 1; c <= col.color_count(); ++c) {
        const Target& t = targets[c - 1];
        ColorClassStats& st = rep.per_color[c - 1];
        SimpleGraph cls = color_class(col, c);
        st.edges = cls.edge_count();
        for (std::uint64_t comp : cls.components()) {
            if (pop(comp) > kMaxExactQuery)
                throw CapacityError("colour " + std::to_string(c) + " has a component on " +
                                    std::to_string(pop(comp)) + " vertices; exact queries stop at " +
                                    std::to_string(kMaxExactQuery));
            auto [sub, map] = cls.induced(comp);
            st.longest_path = std::max(st.longest_path, longest_path_order(sub));
            st.circumference = std::max(st.circumference, circumference(sub));
            if (st.violation) continue;
            std::optional<std::vector<int>> hit;
            if (t.kind == PatternKind::Path) {
                if (sub.vertex_count() >= t.order) hit = find_path(sub, t.order);
            } else {
                if (sub.vertex_count() >= t.order) hit = find_cycle_exact(sub, t.order);
            }
            if (hit) {
                for (int& v : *hit) v = map[v];
                st.violation = std::move(hit);
                rep.good = false;
            }
        }
    }
    return rep;
}

} // namespace ramsey
