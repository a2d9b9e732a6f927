#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ramsey/coloring.hpp"
#include "ramsey/graph.hpp"

namespace ramsey {

struct SearchConfig {
    int n = 0;
    std::vector<Target> targets;      // one per color
    bool color_symmetry = true;       // ascending first appearances of
                                      // interchangeable (equal-target) colors
    bool vertex_symmetry = true;      // monotone rows over vertices that are
                                      // indistinguishable in the colored prefix
    bool incremental_check = true;    // per-edge pattern test instead of full rescans
    bool budget_prune = true;         // path Turan edge budgets
    std::uint64_t node_limit = 0;     // 0 = unlimited
    std::int64_t time_limit_ms = 0;   // 0 = unlimited
    int workers = 1;
};

struct SearchStats {
    std::uint64_t nodes = 0;          // edge-color assignments explored
    std::uint64_t leaves = 0;         // complete colorings reached
    std::uint64_t pattern_prunes = 0;
    std::uint64_t budget_prunes = 0;
    std::uint64_t symmetry_skips = 0;
    SearchStats& operator+=(const SearchStats& o);
};

enum class SearchStatus { Witness, ExhaustedNone, LimitReached };

struct SearchOutcome {
    SearchStatus status = SearchStatus::ExhaustedNone;
    std::optional<EdgeColoring> witness; // present iff status == Witness
    SearchStats stats;
};

// exhaustive symmetry-reduced backtracking for a coloring of K_n in which
// color i avoids targets[i-1]; every Witness is re-verified before returning
SearchOutcome find_good_coloring(const SearchConfig& cfg);

struct RamseyRun {
    int n = 0;
    SearchOutcome outcome;
};

struct RamseyResult {
    std::optional<int> value; // empty = inconclusive
    std::vector<RamseyRun> runs;
};

// least n in [n_lo, n_hi] with no good coloring, with a witness confirmed at
// n-1; inconclusive when a limit was hit or the range misses the value
RamseyResult compute_ramsey(const std::vector<Target>& targets, int n_lo, int n_hi,
                            const SearchConfig& base);

// true iff no assignment of the uncolored edges keeps every path-target class
// within its Turan budget (cycle targets impose none)
bool turan_budget_prune(const EdgeColoring& partial, const std::vector<Target>& targets);

} // namespace ramsey
