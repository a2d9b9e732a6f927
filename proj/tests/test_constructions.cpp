#include "doctest.h"
#include "oracle.hpp"
#include "ramsey/constructions.hpp"
#include "ramsey/formulas.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>

using namespace ramsey;

TEST_CASE("blow-up layout") {
    BlowupSpec s = BlowupSpec::make(9); // odd: four equal parts
    CHECK(s.part_sizes == std::array<int, 4>{4, 4, 4, 4});
    CHECK(s.total() == 16);
    s = BlowupSpec::make(8); // even: one part grows by one
    std::array<int, 4> sizes = s.part_sizes;
    std::sort(sizes.begin(), sizes.end());
    CHECK(sizes == std::array<int, 4>{3, 3, 3, 4});
    CHECK(s.total() == 13);

    // the schedule must decompose the six part pairs, two per color
    bool seen[4][4] = {};
    for (const auto& pairs : s.schedule)
        for (const auto& [x, y] : pairs) {
            CHECK(x != y);
            CHECK(!seen[x][y]);
            seen[x][y] = seen[y][x] = true;
        }
    for (int x = 0; x < 4; ++x)
        for (int y = x + 1; y < 4; ++y) CHECK(seen[x][y]);

    CHECK_THROWS_AS(BlowupSpec::make(1), DomainError);
}

TEST_CASE("blow-up witness is good at every order from 2 to 15") {
    for (int n = 2; n <= 15; ++n) {
        EdgeColoring col = blowup_witness(n);
        CHECK(col.vertex_count() == conjectured_r3_path(n) - 1);
        CHECK(col.color_count() == 3);
        CHECK(col.total());
        std::vector<Target> t(3, Target::path(n));
        ColorReport rep = verify_coloring(col, t);
        CHECK(rep.good);
        for (const ColorClassStats& st : rep.per_color)
            CHECK(st.longest_path < n);
    }
    CHECK_THROWS_AS(blowup_witness(1), DomainError);
}

TEST_CASE("blow-up color classes have the expected shape") {
    // order 16 for n = 9: every class is two complete bipartite components
    // K_{4,4} plus the clique edges inside the parts in color 1
    EdgeColoring col = blowup_witness(9);
    SimpleGraph c1 = color_class(col, 1);
    SimpleGraph c2 = color_class(col, 2);
    SimpleGraph c3 = color_class(col, 3);
    CHECK(c1.edge_count() == 4 * choose2(4) + 2 * 16); // intra cliques + two K_{4,4}
    CHECK(c2.edge_count() == 2 * 16);
    CHECK(c3.edge_count() == 2 * 16);
    CHECK(c1.edge_count() + c2.edge_count() + c3.edge_count() == choose2(16));
    CHECK(c2.components().size() == 2);
    for (std::uint64_t comp : c2.components())
        CHECK(std::popcount(comp) == 8);
}

TEST_CASE("turan union construction achieves the closed form") {
    for (int k = 1; k <= 8; ++k) {
        for (int t = 0; t * k <= 20; ++t) {
            for (int r = 0; r < k && t * k + r <= 20; ++r) {
                int n = t * k + r;
                SimpleGraph g = turan_extremal_union(t, k, r);
                CHECK(g.vertex_count() == n);
                CHECK(g.edge_count() == turan_path_max_edges(n, k + 1));
                if (n > 0) {
                    CHECK(!has_path(g, k + 1));
                    CHECK(longest_path_order(g) == std::min(n, k));
                }
            }
        }
    }
    CHECK_THROWS_AS(turan_extremal_union(-1, 3, 0), DomainError);
    CHECK_THROWS_AS(turan_extremal_union(2, 3, 3), DomainError);
}

TEST_CASE("turan join construction: free always, tight exactly at the split residues") {
    for (int k = 3; k <= 9; k += 2) {
        int h = (k - 1) / 2;
        for (int tail = (k + 1) / 2; h + tail <= 20; ++tail) {
            SimpleGraph g = turan_extremal_join(k, tail);
            int n = h + tail;
            CHECK(g.vertex_count() == n);
            CHECK(g.edge_count() == choose2(h) + static_cast<std::int64_t>(h) * tail);
            CHECK(!has_path(g, k + 1));
            int r = n % k;
            bool admissible = (r == h || r == h + 1);
            CHECK((g.edge_count() == turan_path_max_edges(n, k + 1)) == admissible);
        }
    }
    CHECK_THROWS_AS(turan_extremal_join(4, 5), DomainError);  // even k
    CHECK_THROWS_AS(turan_extremal_join(7, 3), DomainError);  // tail below (k+1)/2
}

TEST_CASE("biclique minus biclique fixtures") {
    SimpleGraph g14 = biclique_minus_biclique(7, 8, 4, 7);
    CHECK(g14.vertex_count() == 15);
    CHECK(g14.edge_count() == 28);
    CHECK(longest_path_order(g14) == 8);
    CHECK(oracle::longest_path(g14) == 8);

    SimpleGraph g14b = biclique_minus_biclique(7, 7, 4, 6);
    CHECK(g14b.edge_count() == 25);
    CHECK(longest_path_order(g14b) == 8);

    SimpleGraph full = biclique_minus_biclique(3, 4, 0, 0);
    CHECK(full.edge_count() == 12);
    CHECK(longest_path_order(full) == 7);

    SimpleGraph empty = biclique_minus_biclique(2, 3, 2, 3);
    CHECK(empty.edge_count() == 0);

    // removed block anchors on the low indices of both sides
    CHECK(!g14.has_edge(0, 7));       // a_0 to b_0 was removed
    CHECK(g14.has_edge(0, 14));       // a_0 to b_7 stays
    CHECK(g14.has_edge(4, 7));        // a_4 is outside the removed block
    CHECK_THROWS_AS(biclique_minus_biclique(3, 3, 4, 1), DomainError);
    CHECK_THROWS_AS(biclique_minus_biclique(0, 3, 0, 0), DomainError);
}

TEST_CASE("biclique unions") {
    SimpleGraph g15 = biclique_union({{4, 4}, {3, 4}});
    CHECK(g15.vertex_count() == 15);
    CHECK(g15.edge_count() == 28);
    CHECK(longest_path_order(g15) == 8);
    CHECK(oracle::longest_path(g15) == 8);
    CHECK(g15.components().size() == 2);

    SimpleGraph g15b = biclique_union({{4, 4}, {3, 3}});
    CHECK(g15b.edge_count() == 25);
    CHECK(longest_path_order(g15b) == 8);

    for (int k = 6; k <= 8; ++k) {
        for (int l = 1; l < k; ++l) {
            SimpleGraph g = biclique_union({{3, l}, {3, k - l}});
            CHECK(g.edge_count() == 3 * k);
            CHECK(!has_path(g, 8));
        }
    }

    SimpleGraph one = biclique_union({{2, 5}});
    CHECK(one.edge_count() == 10);
    CHECK(longest_path_order(one) == 5);
    CHECK_THROWS_AS(biclique_union({}), DomainError);
    CHECK_THROWS_AS(biclique_union({{2, 0}}), DomainError);
}
