#include "doctest.h"
#include "oracle.hpp"
#include "ramsey/graph.hpp"

#include <algorithm>
#include <cstdint>
#include <vector>

using namespace ramsey;

namespace {

// every graph on m <= 5 vertices, as edge-subset odometer
std::vector<SimpleGraph> all_small_graphs(int m) {
    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < m; ++u)
        for (int v = u + 1; v < m; ++v) pairs.emplace_back(u, v);
    std::vector<SimpleGraph> out;
    for (std::uint32_t bits = 0; bits < (std::uint32_t{1} << pairs.size()); ++bits) {
        SimpleGraph g(m);
        for (std::size_t i = 0; i < pairs.size(); ++i)
            if ((bits >> i) & 1) g.add_edge(pairs[i].first, pairs[i].second);
        out.push_back(std::move(g));
    }
    return out;
}

bool valid_path(const SimpleGraph& g, const std::vector<int>& seq, int k) {
    if (static_cast<int>(seq.size()) != k) return false;
    std::vector<int> sorted = seq;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
    for (std::size_t i = 0; i + 1 < seq.size(); ++i)
        if (!g.has_edge(seq[i], seq[i + 1])) return false;
    return true;
}

bool valid_cycle(const SimpleGraph& g, const std::vector<int>& seq, int k) {
    return valid_path(g, seq, k) && g.has_edge(seq.back(), seq.front());
}

} // namespace

TEST_CASE("basic adjacency bookkeeping") {
    SimpleGraph g(5);
    CHECK(g.vertex_count() == 5);
    CHECK(g.edge_count() == 0);
    g.add_edge(0, 3);
    g.add_edge(3, 4);
    CHECK(g.has_edge(0, 3));
    CHECK(g.has_edge(3, 0));
    CHECK(!g.has_edge(0, 4));
    CHECK(g.degree(3) == 2);
    CHECK(g.edge_count() == 2);
    CHECK(g.neighbors(3) == ((1u << 0) | (1u << 4)));
    g.remove_edge(3, 0);
    CHECK(!g.has_edge(0, 3));
    CHECK(g.edge_count() == 1);
    g.remove_edge(0, 3); // removing a non-edge is a no-op
    CHECK(g.edge_count() == 1);
}

TEST_CASE("constructor and accessor domain errors") {
    CHECK_THROWS_AS(SimpleGraph(-1), DomainError);
    CHECK_THROWS_AS(SimpleGraph(65), DomainError);
    CHECK_NOTHROW(SimpleGraph(0));
    CHECK_NOTHROW(SimpleGraph(64));
    SimpleGraph g(3);
    CHECK_THROWS_AS(g.add_edge(0, 0), DomainError);
    CHECK_THROWS_AS(g.add_edge(0, 3), DomainError);
    CHECK_THROWS_AS(g.add_edge(-1, 2), DomainError);
    CHECK_THROWS_AS(g.has_edge(3, 0), DomainError);
    CHECK_THROWS_AS(g.neighbors(5), DomainError);
}

TEST_CASE("components ordered by smallest member") {
    SimpleGraph g(7);
    g.add_edge(2, 5);
    g.add_edge(0, 6);
    auto comps = g.components();
    REQUIRE(comps.size() == 5);
    CHECK(comps[0] == ((1u << 0) | (1u << 6)));
    CHECK(comps[1] == (1u << 1));
    CHECK(comps[2] == ((1u << 2) | (1u << 5)));
    CHECK(comps[3] == (1u << 3));
    CHECK(comps[4] == (1u << 4));
}

TEST_CASE("induced subgraph keeps edges and maps labels back") {
    SimpleGraph g(6);
    g.add_edge(1, 4);
    g.add_edge(4, 5);
    g.add_edge(1, 5);
    g.add_edge(0, 1);
    auto [h, map] = g.induced((1u << 1) | (1u << 4) | (1u << 5));
    CHECK(h.vertex_count() == 3);
    CHECK(h.edge_count() == 3);
    CHECK(map == std::vector<int>{1, 4, 5});
    CHECK_THROWS_AS(g.induced(0), DomainError);
    CHECK_THROWS_AS(g.induced(1u << 6), DomainError);
}

TEST_CASE("target factories") {
    CHECK(Target::path(5) == Target{PatternKind::Path, 5});
    CHECK(Target::cycle(7) == Target{PatternKind::Cycle, 7});
    CHECK_THROWS_AS(Target::path(0), DomainError);
    CHECK_THROWS_AS(Target::cycle(2), DomainError);
}

TEST_CASE("longest path and circumference match the subset DP on every graph up to 5 vertices") {
    for (int m = 0; m <= 5; ++m) {
        for (const SimpleGraph& g : all_small_graphs(m)) {
            CHECK(longest_path_order(g) == oracle::longest_path(g));
            CHECK(circumference(g) == oracle::circumference(g));
        }
    }
}

TEST_CASE("longest path and circumference match the subset DP on random graphs") {
    for (std::uint32_t seed = 0; seed < 500; ++seed) {
        int n = 3 + static_cast<int>(seed % 8); // 3..10
        int num = 1 + static_cast<int>(seed % 3);
        SimpleGraph g = oracle::random_graph(n, seed, num, 4);
        int lp = oracle::longest_path(g);
        int cf = oracle::circumference(g);
        CHECK(longest_path_order(g) == lp);
        CHECK(circumference(g) == cf);
        for (int k = 1; k <= n + 1; ++k)
            CHECK(has_path(g, k) == (lp >= k));
    }
}

TEST_CASE("find_path returns a valid path exactly when one exists") {
    for (std::uint32_t seed = 1000; seed < 1060; ++seed) {
        SimpleGraph g = oracle::random_graph(8, seed);
        int lp = oracle::longest_path(g);
        for (int k = 1; k <= 9; ++k) {
            auto p = find_path(g, k);
            CHECK(p.has_value() == (lp >= k));
            if (p) CHECK(valid_path(g, *p, k));
        }
    }
}

TEST_CASE("exact cycle queries agree with brute enumeration") {
    for (std::uint32_t seed = 2000; seed < 2080; ++seed) {
        SimpleGraph g = oracle::random_graph(7, seed, 2, 3);
        for (int k = 3; k <= 7; ++k) {
            bool brute = false;
            for (int u = 0; u < 7 && !brute; ++u)
                for (int v = u + 1; v < 7 && !brute; ++v)
                    if (g.has_edge(u, v) && oracle::cycle_through_edge(g, k, u, v))
                        brute = true;
            CHECK(has_cycle_exact(g, k) == brute);
            auto w = find_cycle_exact(g, k);
            CHECK(w.has_value() == brute);
            if (w) CHECK(valid_cycle(g, *w, k));
        }
    }
}

TEST_CASE("path kernel through a fixed edge matches brute enumeration") {
    for (std::uint32_t seed = 3000; seed < 3040; ++seed) {
        int n = 4 + static_cast<int>(seed % 4); // 4..7
        SimpleGraph g = oracle::random_graph(n, seed, 3, 5);
        for (int u = 0; u < n; ++u) {
            for (int v = u + 1; v < n; ++v) {
                if (!g.has_edge(u, v)) continue;
                for (int k = 2; k <= n + 1; ++k) {
                    bool got = detail::has_path_through_edge(g.adjacency(), n, k, u, v);
                    bool want = k <= n && oracle::path_through_edge(g, k, u, v);
                    CHECK(got == want);
                }
            }
        }
    }
}

TEST_CASE("cycle kernel through a fixed edge matches brute enumeration") {
    for (std::uint32_t seed = 4000; seed < 4040; ++seed) {
        int n = 4 + static_cast<int>(seed % 4);
        SimpleGraph g = oracle::random_graph(n, seed, 3, 5);
        for (int u = 0; u < n; ++u) {
            for (int v = u + 1; v < n; ++v) {
                if (!g.has_edge(u, v)) continue;
                for (int k = 3; k <= n; ++k) {
                    bool got = detail::has_cycle_exact_through_edge(g.adjacency(), n, k, u, v);
                    CHECK(got == oracle::cycle_through_edge(g, k, u, v));
                }
            }
        }
    }
}

TEST_CASE("query edge cases") {
    SimpleGraph k1(1);
    CHECK(longest_path_order(k1) == 1);
    CHECK(circumference(k1) == 0);
    CHECK(has_path(k1, 1));
    CHECK(!has_path(k1, 2));

    SimpleGraph g(4);
    CHECK_THROWS_AS(has_path(g, 0), DomainError);
    CHECK_THROWS_AS(has_cycle_exact(g, 2), DomainError);
    CHECK(!has_path(g, 5));           // order above the graph
    CHECK(!find_cycle_exact(g, 4));   // forest

    SimpleGraph big(kMaxExactQuery + 1);
    CHECK_THROWS_AS(longest_path_order(big), CapacityError);
    CHECK_THROWS_AS(circumference(big), CapacityError);
    CHECK_THROWS_AS(has_path(big, 3), CapacityError);
    CHECK_THROWS_AS(find_cycle_exact(big, 3), CapacityError);
}

TEST_CASE("closure and bipartition kernels") {
    SimpleGraph g(6);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.add_edge(3, 4);
    std::uint64_t all = (1u << 6) - 1;
    CHECK(detail::closure(g.adjacency(), all, 1u << 0) == 0b000111);
    CHECK(detail::closure(g.adjacency(), all & ~(1ull << 1), 1u << 0) == 0b000001);
    CHECK(detail::closure(g.adjacency(), all, 1u << 5) == 0b100000);

    std::uint64_t side = 0;
    CHECK(detail::is_bipartite(g.adjacency(), 0b000111, &side));
    CHECK((side == 0b101 || side == 0b010));
    g.add_edge(0, 2);
    CHECK(!detail::is_bipartite(g.adjacency(), 0b000111, &side));
}
