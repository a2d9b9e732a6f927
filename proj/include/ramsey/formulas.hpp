#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "ramsey/errors.hpp"

namespace ramsey {

inline constexpr std::int64_t choose2(std::int64_t x) {
    return x < 2 ? 0 : x * (x - 1) / 2;
}

// parameters of the path Turan bound: n = kt + r with k = L-1, 0 <= r < k
struct TuranParams {
    std::int64_t n, L, k, t, r;
    static TuranParams make(std::int64_t n, std::int64_t L);
};

// maximum edges of a P_L-free graph on n vertices: t*C(k,2) + C(r,2)
std::int64_t turan_path_max_edges(std::int64_t n, std::int64_t L);

// independent branch-and-bound maximum over all P_L-free graphs, n <= 9
std::int64_t turan_path_oracle(int n, int L);

// parameters of the circumference bound: r = (n-1) mod (k-1)
struct WoodallParams {
    std::int64_t n, k, r;
    static WoodallParams make(std::int64_t n, std::int64_t k);
};

struct WoodallValue {
    std::int64_t value;
    bool integral; // numerator (n-1)k - r(k-r-1) was even (observed always)
};

// maximum edges of an n-vertex graph with circumference at most k
WoodallValue woodall_bound_value(std::int64_t n, std::int64_t k);
std::int64_t woodall_bound(std::int64_t n, std::int64_t k);

// maximum edges of a P_L-free subgraph of K_{a,b} for the cited parameter
// rows only; nullopt means the row is not covered (no extrapolation)
std::optional<std::int64_t> cited_bipartite_bound(std::int64_t a, std::int64_t b,
                                                  std::int64_t L);

// exact bipartite maximum by branch-and-bound, a*b <= 20
std::int64_t bipartite_path_turan_oracle(int a, int b, int L);

// R(P_n, P_m) = n + floor(m/2) - 1 for n >= m >= 2
std::int64_t two_color_path_ramsey(std::int64_t n, std::int64_t m);

// 2n - 2 + (n mod 2), n >= 1
std::int64_t conjectured_r3_path(std::int64_t n);

// 4n - 3 for odd n, 2n for even n, n >= 5
std::int64_t conjectured_r3_cycle(std::int64_t n);

// whether the evaluated value is an established theorem rather than a
// conjectured extrapolation
bool r3_path_established(std::int64_t n);
bool r3_cycle_established(std::int64_t n);

// two-colour covering report for a cited bipartite row
struct BoundReport {
    std::string name;
    std::string params;
    std::int64_t bound = 0;
    std::optional<std::int64_t> oracle;
    std::int64_t ambient = 0;            // edge count of K_{a,b}
    std::int64_t slack = 0;              // ambient - 2*bound
    bool requires_extremal = false;      // slack <= 0: equality/overshoot case
};

BoundReport bipartite_slack_report(std::int64_t a, std::int64_t b, std::int64_t L);

} // namespace ramsey
