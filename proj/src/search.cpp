#include "ramsey/search.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <chrono>
#include <limits>
#include <stdexcept>

#include "ramsey/errors.hpp"
#include "ramsey/formulas.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace ramsey {

SearchStats& SearchStats::operator+=(const SearchStats& o) {
    nodes += o.nodes;
    leaves += o.leaves;
    pattern_prunes += o.pattern_prunes;
    budget_prunes += o.budget_prunes;
    symmetry_skips += o.symmetry_skips;
    return *this;
}

namespace {

using Clock = std::chrono::steady_clock;

constexpr std::int64_t kNoBudget = std::numeric_limits<std::int64_t>::max() / 4;
constexpr std::uint64_t bit(int v) { return std::uint64_t{1} << v; }

// everything fixed for the whole search
struct Shared {
    int n = 0;
    int colors = 0;
    int slots = 0;
    std::vector<Target> targets;
    std::vector<std::pair<int, int>> edge_of; // row-major (u,v), u < v
    std::vector<int> row_start;               // row u -> slot of edge (u, u+1)
    std::array<std::int64_t, 10> budget{};    // 1-based color -> edge budget
    std::array<int, 10> prev_in_group{};      // 1-based; 0 = none
    int infinite_budgets = 0;
    std::int64_t budget_total = 0;            // sum of finite budgets
    bool color_sym = true, vertex_sym = true, inc_check = true, budget_on = true;
    std::uint64_t node_limit = 0;
    bool timed = false;
    Clock::time_point deadline{};

    explicit Shared(const SearchConfig& cfg) {
        if (cfg.n < 1)
            throw DomainError("search needs at least one vertex");
        if (cfg.n > kMaxExactQuery)
            throw CapacityError("search supports n <= " + std::to_string(kMaxExactQuery));
        if (cfg.targets.empty() || cfg.targets.size() > 9)
            throw DomainError("search needs between 1 and 9 targets");
        n = cfg.n;
        colors = static_cast<int>(cfg.targets.size());
        targets = cfg.targets;
        color_sym = cfg.color_symmetry;
        vertex_sym = cfg.vertex_symmetry;
        inc_check = cfg.incremental_check;
        budget_on = cfg.budget_prune;
        node_limit = cfg.node_limit;
        if (cfg.time_limit_ms > 0) {
            timed = true;
            deadline = Clock::now() + std::chrono::milliseconds(cfg.time_limit_ms);
        }
        row_start.assign(n, 0);
        for (int u = 0; u < n; ++u) {
            row_start[u] = static_cast<int>(edge_of.size());
            for (int v = u + 1; v < n; ++v)
                edge_of.emplace_back(u, v);
        }
        slots = static_cast<int>(edge_of.size());
        for (int c = 1; c <= colors; ++c) {
            const Target& t = targets[c - 1];
            budget[c] = t.kind == PatternKind::Path ? turan_path_max_edges(n, t.order)
                                                    : kNoBudget;
            if (budget[c] == kNoBudget)
                ++infinite_budgets;
            else
                budget_total += budget[c];
            prev_in_group[c] = 0;
            for (int d = c - 1; d >= 1; --d)
                if (targets[d - 1] == t) {
                    prev_in_group[c] = d;
                    break;
                }
        }
    }
};

// one worker's view of the search tree
struct Engine {
    const Shared* sh = nullptr;
    // coordination for parallel runs (null when serial)
    std::atomic<bool>* stop = nullptr;
    std::atomic<std::uint64_t>* global_nodes = nullptr;
    std::uint64_t pending_nodes = 0;
    // collection mode: stop at this depth and emit prefixes
    int collect_depth = -1;
    std::vector<std::vector<std::uint8_t>>* sink = nullptr;

    std::vector<std::uint8_t> assign;
    std::array<std::array<std::uint64_t, 20>, 10> adj{};
    std::array<std::int64_t, 10> ecount{};
    std::array<std::array<std::uint8_t, 20>, 20> cls{};
    std::int64_t sum_free = 0;

    SearchStats stats;
    bool limit_hit = false;
    bool external_stop = false;
    bool found = false;
    std::vector<std::uint8_t> witness;

    explicit Engine(const Shared& s) : sh(&s) {
        assign.assign(s.slots, 0);
        sum_free = s.budget_total;
    }

    void refine_row(int u) {
        std::array<std::int8_t, 220> seen{};
        seen.fill(-1);
        std::int8_t next = 0;
        const int base = sh->row_start[u - 1] - (u - 1) - 1; // slot(u-1,v) = base + v
        for (int v = u + 1; v < sh->n; ++v) {
            const int key = cls[u - 1][v] * 10 + assign[base + v];
            if (seen[key] < 0)
                seen[key] = next++;
            cls[u][v] = static_cast<std::uint8_t>(seen[key]);
        }
    }

    // true when the search must unwind immediately
    bool interrupted() {
        if (sh->node_limit && stats.nodes > sh->node_limit) {
            limit_hit = true;
            return true;
        }
        if (global_nodes && ++pending_nodes >= 256) {
            const std::uint64_t total =
                global_nodes->fetch_add(pending_nodes, std::memory_order_relaxed) +
                pending_nodes;
            pending_nodes = 0;
            if (sh->node_limit && total > sh->node_limit) {
                limit_hit = true;
                return true;
            }
        }
        if (sh->timed && (stats.nodes & 0x3FF) == 0 && Clock::now() >= sh->deadline) {
            limit_hit = true;
            return true;
        }
        if (stop && (stats.nodes & 0x3F) == 0 &&
            stop->load(std::memory_order_relaxed)) {
            external_stop = true;
            return true;
        }
        return false;
    }

    // replay a prefix without re-counting its nodes
    void replay(const std::vector<std::uint8_t>& prefix) {
        for (int idx = 0; idx < static_cast<int>(prefix.size()); ++idx) {
            const auto [u, v] = sh->edge_of[idx];
            if (sh->vertex_sym && v == u + 1 && u >= 1)
                refine_row(u);
            const int c = prefix[idx];
            assign[idx] = static_cast<std::uint8_t>(c);
            adj[c][u] |= bit(v);
            adj[c][v] |= bit(u);
            if (++ecount[c] <= sh->budget[c])
                --sum_free;
        }
    }

    bool class_contains_target(int c) const {
        SimpleGraph g(sh->n);
        for (int u = 0; u < sh->n; ++u)
            for (std::uint64_t m = adj[c][u] >> (u + 1); m;) {
                const int v = u + 1 + std::countr_zero(m);
                m &= m - 1;
                g.add_edge(u, v);
            }
        const Target& t = sh->targets[c - 1];
        return t.kind == PatternKind::Path ? has_path(g, t.order)
                                           : has_cycle_exact(g, t.order);
    }

    bool dfs(int idx) {
        if (idx == collect_depth && sink) {
            sink->emplace_back(assign.begin(), assign.begin() + idx);
            return false;
        }
        if (idx == sh->slots) {
            ++stats.leaves;
            found = true;
            witness = assign;
            return true;
        }
        const auto [u, v] = sh->edge_of[idx];
        if (sh->vertex_sym && v == u + 1 && u >= 1)
            refine_row(u);
        int lo = 1;
        if (sh->vertex_sym && v >= u + 2 && cls[u][v] == cls[u][v - 1]) {
            lo = assign[idx - 1];
            stats.symmetry_skips += lo - 1;
        }
        for (int c = lo; c <= sh->colors; ++c) {
            const int prev = sh->prev_in_group[c];
            if (sh->color_sym && prev != 0 && ecount[prev] == 0) {
                ++stats.symmetry_skips;
                continue;
            }
            ++stats.nodes;
            if (interrupted())
                return true;
            assign[idx] = static_cast<std::uint8_t>(c);
            adj[c][u] |= bit(v);
            adj[c][v] |= bit(u);
            const bool counted = ++ecount[c] <= sh->budget[c];
            if (counted)
                --sum_free;
            bool dead = false;
            const Target& t = sh->targets[c - 1];
            if (sh->inc_check)
                dead = t.kind == PatternKind::Path
                           ? detail::has_path_through_edge(adj[c].data(), sh->n,
                                                           t.order, u, v)
                           : detail::has_cycle_exact_through_edge(adj[c].data(), sh->n,
                                                                  t.order, u, v);
            else
                dead = class_contains_target(c);
            if (dead)
                ++stats.pattern_prunes;
            if (!dead && sh->budget_on) {
                if (ecount[c] > sh->budget[c] ||
                    (sh->infinite_budgets == 0 && sum_free < sh->slots - idx - 1)) {
                    dead = true;
                    ++stats.budget_prunes;
                }
            }
            const bool abort_now = !dead && dfs(idx + 1);
            assign[idx] = 0;
            adj[c][u] &= ~bit(v);
            adj[c][v] &= ~bit(u);
            --ecount[c];
            if (counted)
                ++sum_free;
            if (abort_now)
                return true;
        }
        return false;
    }
};

EdgeColoring coloring_from(const Shared& sh, const std::vector<std::uint8_t>& assign) {
    EdgeColoring col(sh.n, sh.colors);
    for (int idx = 0; idx < sh.slots; ++idx)
        col.set_color(sh.edge_of[idx].first, sh.edge_of[idx].second, assign[idx]);
    return col;
}

SearchOutcome finish(const Shared& sh, SearchStats stats, bool limit_hit,
                     const std::vector<std::uint8_t>* witness) {
    SearchOutcome out;
    out.stats = stats;
    if (witness) {
        EdgeColoring col = coloring_from(sh, *witness);
        if (!verify_coloring(col, sh.targets).good)
            throw std::logic_error("search produced a coloring that fails verification");
        out.status = SearchStatus::Witness;
        out.witness = std::move(col);
    } else {
        out.status = limit_hit ? SearchStatus::LimitReached : SearchStatus::ExhaustedNone;
    }
    return out;
}

// how deep to expand the shared frontier before handing subtrees to workers
constexpr int kSplitDepth = 10;

SearchOutcome run_parallel(const Shared& sh, int workers) {
    Engine collector(sh);
    std::vector<std::vector<std::uint8_t>> frontier;
    collector.collect_depth = kSplitDepth;
    collector.sink = &frontier;
    collector.dfs(0);
    if (collector.limit_hit)
        return finish(sh, collector.stats, true, nullptr);

    SearchStats total = collector.stats;
    std::atomic<bool> stop{false};
    std::atomic<std::uint64_t> global_nodes{collector.stats.nodes};
    bool limit_hit = false;
    bool have_witness = false;
    std::vector<std::uint8_t> witness;

#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 1) num_threads(workers)
#endif
    for (std::size_t i = 0; i < frontier.size(); ++i) {
        if (stop.load(std::memory_order_relaxed))
            continue;
        if (sh.timed && Clock::now() >= sh.deadline) {
#ifdef _OPENMP
#pragma omp critical(ramsey_search_merge)
#endif
            limit_hit = true;
            stop.store(true, std::memory_order_relaxed);
            continue;
        }
        Engine task(sh);
        task.stop = &stop;
        task.global_nodes = &global_nodes;
        task.replay(frontier[i]);
        task.dfs(kSplitDepth);
        global_nodes.fetch_add(task.pending_nodes, std::memory_order_relaxed);
#ifdef _OPENMP
#pragma omp critical(ramsey_search_merge)
#endif
        {
            total += task.stats;
            if (task.found && !have_witness) {
                have_witness = true;
                witness = task.witness;
            }
            if (task.limit_hit)
                limit_hit = true;
            if (task.found || task.limit_hit)
                stop.store(true, std::memory_order_relaxed);
        }
    }
    if (have_witness)
        return finish(sh, total, false, &witness);
    return finish(sh, total, limit_hit, nullptr);
}

} // namespace

SearchOutcome find_good_coloring(const SearchConfig& cfg) {
    const Shared sh(cfg);
    int workers = std::max(1, cfg.workers);
#ifndef _OPENMP
    workers = 1;
#endif
    // an empty K_n cannot be completed at all when the budgets do not cover it
    if (sh.budget_on && sh.infinite_budgets == 0 && sh.budget_total < sh.slots) {
        SearchOutcome out;
        out.status = SearchStatus::ExhaustedNone;
        out.stats.budget_prunes = 1;
        return out;
    }
    if (workers == 1 || sh.slots <= kSplitDepth) {
        Engine eng(sh);
        eng.dfs(0);
        return finish(sh, eng.stats, eng.limit_hit, eng.found ? &eng.witness : nullptr);
    }
    return run_parallel(sh, workers);
}

RamseyResult compute_ramsey(const std::vector<Target>& targets, int n_lo, int n_hi,
                            const SearchConfig& base) {
    RamseyResult res;
    if (n_lo < 1 || n_lo > n_hi || n_hi > kMaxExactQuery)
        return res;
    auto run = [&](int n) -> const SearchOutcome& {
        SearchConfig cfg = base;
        cfg.n = n;
        cfg.targets = targets;
        res.runs.push_back(RamseyRun{n, find_good_coloring(cfg)});
        return res.runs.back().outcome;
    };
    bool prev_witness = false;
    for (int n = n_lo; n <= n_hi; ++n) {
        const SearchOutcome& out = run(n);
        if (out.status == SearchStatus::Witness) {
            prev_witness = true;
            continue;
        }
        if (out.status == SearchStatus::LimitReached)
            return res;
        bool confirmed = prev_witness;
        if (!confirmed && n == n_lo) {
            if (n == 1) {
                confirmed = true; // K_0 trivially has a good (empty) coloring
            } else {
                const SearchOutcome& below = run(n - 1);
                confirmed = below.status == SearchStatus::Witness;
            }
        }
        if (confirmed)
            res.value = n;
        return res;
    }
    return res; // witnesses everywhere: the value lies above the range
}

bool turan_budget_prune(const EdgeColoring& partial, const std::vector<Target>& targets) {
    if (static_cast<int>(targets.size()) != partial.color_count())
        throw DomainError("turan_budget_prune: one target per color required");
    const std::int64_t uncolored = partial.edge_slots() - partial.colored_count();
    bool any_infinite = false;
    std::int64_t sum_free = 0;
    for (int c = 1; c <= partial.color_count(); ++c) {
        const Target& t = targets[c - 1];
        if (t.kind != PatternKind::Path) {
            any_infinite = true;
            continue;
        }
        const std::int64_t cap = turan_path_max_edges(partial.vertex_count(), t.order);
        const std::int64_t have = partial.class_size(c);
        if (have > cap)
            return true;
        sum_free += cap - have;
    }
    return !any_infinite && sum_free < uncolored;
}

} // namespace ramsey
