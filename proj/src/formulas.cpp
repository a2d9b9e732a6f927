#include "ramsey/formulas.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <utility>
#include <vector>

#include "ramsey/graph.hpp"

namespace ramsey {

namespace {

constexpr std::uint64_t bit(int i) { return std::uint64_t{1} << i; }

} // namespace

TuranParams TuranParams::make(std::int64_t n, std::int64_t L) {
    if (L < 2)
        throw DomainError("turan path bound: path order must be at least 2");
    if (n < 0)
        throw DomainError("turan path bound: vertex count must be nonnegative");
    const std::int64_t k = L - 1;
    return TuranParams{n, L, k, n / k, n % k};
}

std::int64_t turan_path_max_edges(std::int64_t n, std::int64_t L) {
    const TuranParams p = TuranParams::make(n, L);
    return p.t * choose2(p.k) + choose2(p.r);
}

namespace {

// exhaustive maximizer over P_L-free graphs on n <= 9 vertices; edge slots are
// decided in row-major order, vertices that are indistinguishable so far keep
// a monotone row (canonical-form restriction), and a branch dies as soon as
// the new edge closes a forbidden path or the open slots cannot beat the best
struct TuranBnb {
    int n = 0;
    int goal = 0; // forbidden path order
    int slots = 0;
    std::vector<std::pair<int, int>> edge_of;
    std::array<std::uint64_t, 9> adj{};
    std::array<std::array<std::uint8_t, 9>, 9> cls{};
    std::int64_t best = 0;

    explicit TuranBnb(int n_, int goal_) : n(n_), goal(goal_) {
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                edge_of.emplace_back(u, v);
        slots = static_cast<int>(edge_of.size());
    }

    bool has_edge(int u, int v) const { return (adj[u] >> v) & 1; }

    void refine_row(int u) {
        std::array<std::int8_t, 20> seen{};
        seen.fill(-1);
        std::uint8_t next = 0;
        for (int v = u + 1; v < n; ++v) {
            const int key = cls[u - 1][v] * 2 + (has_edge(u - 1, v) ? 1 : 0);
            if (seen[key] < 0)
                seen[key] = static_cast<std::int8_t>(next++);
            cls[u][v] = static_cast<std::uint8_t>(seen[key]);
        }
    }

    void dfs(int idx, std::int64_t e) {
        if (idx == slots) {
            best = std::max(best, e);
            return;
        }
        if (e + (slots - idx) <= best)
            return;
        const auto [u, v] = edge_of[idx];
        if (v == u + 1 && u >= 1)
            refine_row(u);
        // taking the edge first reaches dense candidates quickly
        if (!detail::has_path_through_edge(adj.data(), n, goal, u, v)) {
            adj[u] |= bit(v);
            adj[v] |= bit(u);
            dfs(idx + 1, e + 1);
            adj[u] &= ~bit(v);
            adj[v] &= ~bit(u);
        }
        // equal-so-far vertices: a 0 after a 1 in the same row is non-canonical
        if (v >= u + 2 && cls[u][v] == cls[u][v - 1] && has_edge(u, v - 1))
            return;
        dfs(idx + 1, e);
    }
};

} // namespace

std::int64_t turan_path_oracle(int n, int L) {
    TuranParams::make(n, L); // validate
    if (n > 9)
        throw CapacityError("turan path oracle supports n <= 9");
    if (n <= 1)
        return 0;
    if (L > n)
        return choose2(n); // no P_L fits at all
    TuranBnb bnb(n, L);
    // seed with the closed-form construction when it is genuinely P_L-free
    {
        const TuranParams p = TuranParams::make(n, L);
        SimpleGraph g(n);
        int base = 0;
        auto clique = [&](int size) {
            for (int i = 0; i < size; ++i)
                for (int j = i + 1; j < size; ++j)
                    g.add_edge(base + i, base + j);
            base += size;
        };
        for (std::int64_t i = 0; i < p.t; ++i)
            clique(static_cast<int>(p.k));
        clique(static_cast<int>(p.r));
        if (!has_path(g, L))
            bnb.best = g.edge_count() - 1; // keep >= comparisons finding it again
    }
    bnb.dfs(0, 0);
    return bnb.best;
}

WoodallParams WoodallParams::make(std::int64_t n, std::int64_t k) {
    if (k < 3)
        throw DomainError("woodall bound: cycle bound must be at least 3");
    if (n < k)
        throw DomainError("woodall bound: need n >= k");
    return WoodallParams{n, k, (n - 1) % (k - 1)};
}

WoodallValue woodall_bound_value(std::int64_t n, std::int64_t k) {
    const WoodallParams p = WoodallParams::make(n, k);
    const std::int64_t num = (n - 1) * k - p.r * (k - p.r - 1);
    return WoodallValue{num / 2, num % 2 == 0};
}

std::int64_t woodall_bound(std::int64_t n, std::int64_t k) {
    return woodall_bound_value(n, k).value;
}

std::optional<std::int64_t> cited_bipartite_bound(std::int64_t a, std::int64_t b,
                                                  std::int64_t L) {
    if (a < 1 || a > b)
        throw DomainError("cited bipartite bound expects 1 <= a <= b");
    if (L < 2)
        throw DomainError("cited bipartite bound: path order must be at least 2");
    if (L % 2 == 1 && L >= 7 && a == L - 1) {
        // odd path order 2c+3 with the small side exactly 2c+2
        const std::int64_t c = (L - 3) / 2;
        return (a + b - 2 * c) * c;
    }
    if (L == 9 && a == 7)
        return 7 + 3 * (b - 1);
    if (L == 8 && a == 6)
        return 3 * b;
    if (L == 8 && a == 7 && b == 7)
        return 24;
    return std::nullopt;
}

namespace {

// plain include/exclude maximizer over P_L-free subgraphs of K_{a,b}
struct BipartiteBnb {
    int n = 0;
    int goal = 0;
    int slots = 0;
    std::vector<std::pair<int, int>> edge_of;
    std::array<std::uint64_t, 20> adj{};
    std::int64_t best = 0;

    BipartiteBnb(int a, int b, int goal_) : n(a + b), goal(goal_) {
        for (int i = 0; i < a; ++i)
            for (int j = 0; j < b; ++j)
                edge_of.emplace_back(i, a + j);
        slots = static_cast<int>(edge_of.size());
    }

    void dfs(int idx, std::int64_t e) {
        if (idx == slots) {
            best = std::max(best, e);
            return;
        }
        if (e + (slots - idx) <= best)
            return;
        const auto [u, v] = edge_of[idx];
        if (!detail::has_path_through_edge(adj.data(), n, goal, u, v)) {
            adj[u] |= bit(v);
            adj[v] |= bit(u);
            dfs(idx + 1, e + 1);
            adj[u] &= ~bit(v);
            adj[v] &= ~bit(u);
        }
        dfs(idx + 1, e);
    }
};

} // namespace

std::int64_t bipartite_path_turan_oracle(int a, int b, int L) {
    if (a < 1 || b < 1)
        throw DomainError("bipartite path oracle: sides must be positive");
    if (L < 2)
        throw DomainError("bipartite path oracle: path order must be at least 2");
    if (static_cast<std::int64_t>(a) * b > 20)
        throw CapacityError("bipartite path oracle supports a*b <= 20");
    BipartiteBnb bnb(a, b, L);
    // greedy lexicographic seed: add every edge that keeps the graph P_L-free
    {
        std::int64_t e = 0;
        for (const auto& [u, v] : bnb.edge_of) {
            if (!detail::has_path_through_edge(bnb.adj.data(), bnb.n, L, u, v)) {
                bnb.adj[u] |= bit(v);
                bnb.adj[v] |= bit(u);
                ++e;
            }
        }
        bnb.adj = {};
        bnb.best = e > 0 ? e - 1 : 0;
    }
    bnb.dfs(0, 0);
    return bnb.best;
}

std::int64_t two_color_path_ramsey(std::int64_t n, std::int64_t m) {
    if (m < 2 || n < m)
        throw DomainError("two colour path ramsey expects n >= m >= 2");
    return n + m / 2 - 1;
}

std::int64_t conjectured_r3_path(std::int64_t n) {
    if (n < 1)
        throw DomainError("path order must be positive");
    return 2 * n - 2 + (n % 2);
}

std::int64_t conjectured_r3_cycle(std::int64_t n) {
    if (n < 5)
        throw DomainError("cycle formula applies to n >= 5");
    return n % 2 == 1 ? 4 * n - 3 : 2 * n;
}

bool r3_path_established(std::int64_t n) { return n >= 1 && n <= 9; }

bool r3_cycle_established(std::int64_t n) { return n >= 5 && n <= 8; }

BoundReport bipartite_slack_report(std::int64_t a, std::int64_t b, std::int64_t L) {
    const auto bound = cited_bipartite_bound(a, b, L);
    if (!bound)
        throw DomainError("bipartite slack report: row not covered");
    BoundReport rep;
    rep.name = "bipartite";
    rep.params = "a=" + std::to_string(a) + " b=" + std::to_string(b) +
                 " L=" + std::to_string(L);
    rep.bound = *bound;
    if (a * b <= 20)
        rep.oracle = bipartite_path_turan_oracle(static_cast<int>(a),
                                                 static_cast<int>(b),
                                                 static_cast<int>(L));
    rep.ambient = a * b;
    rep.slack = rep.ambient - 2 * rep.bound;
    rep.requires_extremal = rep.slack <= 0;
    return rep;
}

} // namespace ramsey
