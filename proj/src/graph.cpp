#include "ramsey/graph.hpp"

#include <algorithm>
#include <bit>

namespace ramsey {

namespace {

inline int ctz(std::uint64_t x) { return std::countr_zero(x); }
inline int pop(std::uint64_t x) { return std::popcount(x); }
inline std::uint64_t bit(int v) { return std::uint64_t{1} << v; }

} // namespace

void SimpleGraph::check_vertex(int v) const {
    if (v < 0 || v >= n_)
        throw DomainError("vertex " + std::to_string(v) + " outside [0," +
                          std::to_string(n_) + ")");
}

SimpleGraph::SimpleGraph(int n) : n_(n) {
    if (n < 0 || n > kMaxVertices)
        throw DomainError("vertex count must be in [0,64], got " + std::to_string(n));
    adj_.assign(static_cast<std::size_t>(n_), 0);
}

void SimpleGraph::add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw DomainError("loops are not allowed");
    adj_[u] |= bit(v);
    adj_[v] |= bit(u);
}

void SimpleGraph::remove_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    adj_[u] &= ~bit(v);
    adj_[v] &= ~bit(u);
}

bool SimpleGraph::has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return (adj_[u] >> v) & 1;
}

std::uint64_t SimpleGraph::neighbors(int v) const {
    check_vertex(v);
    return adj_[v];
}

int SimpleGraph::degree(int v) const {
    check_vertex(v);
    return pop(adj_[v]);
}

std::int64_t SimpleGraph::edge_count() const {
    std::int64_t twice = 0;
    for (std::uint64_t m : adj_) twice += pop(m);
    return twice / 2;
}

std::vector<std::uint64_t> SimpleGraph::components() const {
    std::vector<std::uint64_t> out;
    std::uint64_t left = (n_ == 64) ? ~std::uint64_t{0} : bit(n_) - 1;
    while (left) {
        std::uint64_t comp = detail::closure(adj_.data(), left, bit(ctz(left)));
        out.push_back(comp);
        left &= ~comp;
    }
    return out;
}

std::pair<SimpleGraph, std::vector<int>> SimpleGraph::induced(std::uint64_t mask) const {
    if (n_ < 64 && (mask >> n_) != 0)
        throw DomainError("induced: mask selects vertices outside the graph");
    std::vector<int> map;
    for (std::uint64_t m = mask; m;) {
        map.push_back(ctz(m));
        m &= m - 1;
    }
    if (map.empty()) throw DomainError("induced: empty vertex set");
    SimpleGraph h(static_cast<int>(map.size()));
    for (std::size_t a = 0; a < map.size(); ++a)
        for (std::size_t b = a + 1; b < map.size(); ++b)
            if ((adj_[map[a]] >> map[b]) & 1)
                h.add_edge(static_cast<int>(a), static_cast<int>(b));
    return {std::move(h), std::move(map)};
}

Target Target::path(int k) {
    if (k < 1) throw DomainError("path order must be >= 1");
    return {PatternKind::Path, k};
}

Target Target::cycle(int k) {
    if (k < 3) throw DomainError("cycle order must be >= 3");
    return {PatternKind::Cycle, k};
}

namespace detail {

std::uint64_t closure(const std::uint64_t* adj, std::uint64_t allowed, std::uint64_t seeds) {
    std::uint64_t seen = seeds & allowed;
    std::uint64_t frontier = seen;
    while (frontier) {
        std::uint64_t next = 0;
        for (std::uint64_t f = frontier; f;) {
            int w = ctz(f);
            f &= f - 1;
            next |= adj[w];
        }
        next &= allowed & ~seen;
        seen |= next;
        frontier = next;
    }
    return seen;
}

bool is_bipartite(const std::uint64_t* adj, std::uint64_t comp, std::uint64_t* side) {
    std::uint64_t a = 0, b = 0, seen = 0;
    while (seen != comp) {
        std::uint64_t frontier = bit(ctz(comp & ~seen));
        a |= frontier;
        seen |= frontier;
        bool to_b = true;
        while (frontier) {
            std::uint64_t next = 0;
            for (std::uint64_t f = frontier; f;) {
                int w = ctz(f);
                f &= f - 1;
                next |= adj[w];
            }
            next &= comp & ~seen;
            (to_b ? b : a) |= next;
            seen |= next;
            frontier = next;
            to_b = !to_b;
        }
    }
    for (std::uint64_t f = a; f;) {
        int w = ctz(f);
        f &= f - 1;
        if (adj[w] & a) return false;
    }
    for (std::uint64_t f = b; f;) {
        int w = ctz(f);
        f &= f - 1;
        if (adj[w] & b) return false;
    }
    if (side) *side = a;
    return true;
}

} // namespace detail

namespace {

// DFS for long paths.  The bound at each extension is the size of the
// connected closure still reachable from the candidate endpoint.
struct PathEngine {
    const std::uint64_t* adj = nullptr;
    std::uint64_t domain = 0;
    int best = 0;
    int goal = 0;       // stop as soon as best reaches goal
    bool decision = false; // additionally prune states that cannot reach goal
    bool record = false;
    std::vector<int> cur, found;

    bool grow(int end, std::uint64_t visited, int len) {
        if (len > best) {
            best = len;
            if (record) found = cur;
            if (best >= goal) return true;
        }
        std::uint64_t cand = adj[end] & domain & ~visited;
        while (cand) {
            int u = ctz(cand);
            cand &= cand - 1;
            std::uint64_t r = detail::closure(adj, domain & ~visited, bit(u));
            int potential = len + pop(r);
            if (decision ? potential < goal : potential <= best) continue;
            if (record) cur.push_back(u);
            if (grow(u, visited | bit(u), len + 1)) return true;
            if (record) cur.pop_back();
        }
        return false;
    }

    bool run_from(int s) {
        if (record) cur.assign(1, s);
        return grow(s, bit(s), 1);
    }
};

void check_query_capacity(const SimpleGraph& g) {
    if (g.vertex_count() > kMaxExactQuery)
        throw CapacityError("exact path/cycle queries are limited to " +
                            std::to_string(kMaxExactQuery) + " vertices, got " +
                            std::to_string(g.vertex_count()));
}

// decision=false: longest path order over the whole graph.
// decision=true: first path reaching `goal` vertices wins.
int path_search(const SimpleGraph& g, int goal, bool decision, std::vector<int>* witness) {
    check_query_capacity(g);
    PathEngine eng;
    eng.adj = g.adjacency();
    eng.decision = decision;
    eng.record = witness != nullptr;
    for (std::uint64_t comp : g.components()) {
        int size = pop(comp);
        std::uint64_t side = 0;
        bool bip = size >= 3 && detail::is_bipartite(eng.adj, comp, &side);
        int ub = size;
        if (bip) {
            int small = std::min(pop(side), size - pop(side));
            ub = std::min(size, 2 * small + (2 * small == size ? 0 : 1));
        }
        if (decision ? ub < goal : ub <= eng.best) continue;
        eng.domain = comp;
        eng.goal = decision ? goal : ub;
        // in an unbalanced bipartite component a longest path must start in
        // the larger side, so try those starts first
        std::uint64_t first = comp, second = 0;
        if (bip && 2 * pop(side) != size) {
            first = (2 * pop(side) > size) ? side : (comp & ~side);
            second = comp & ~first;
        }
        bool stop = false;
        for (std::uint64_t group : {first, second}) {
            for (std::uint64_t s = group; s && !stop;) {
                int v = ctz(s);
                s &= s - 1;
                stop = eng.run_from(v);
            }
            if (stop) break;
        }
        if (stop && (decision || eng.best >= g.vertex_count())) break;
    }
    if (witness) *witness = eng.found;
    return eng.best;
}

// DFS for cycles rooted at their smallest vertex.
struct CycleEngine {
    const std::uint64_t* adj = nullptr;
    std::uint64_t domain = 0;
    int root = 0;
    int best = 0;
    int goal = 0;
    bool exact = false; // look for exactly `goal`, else maximise up to goal
    bool record = false;
    std::vector<int> cur, found;

    bool grow(int end, std::uint64_t visited, int len) {
        if (len >= 3 && ((adj[end] >> root) & 1)) {
            if (exact) {
                if (len == goal) {
                    if (record) found = cur;
                    return true;
                }
            } else if (len > best) {
                best = len;
                if (record) found = cur;
                if (best >= goal) return true;
            }
        }
        if (exact && len >= goal) return false;
        std::uint64_t cand = adj[end] & domain & ~visited;
        while (cand) {
            int u = ctz(cand);
            cand &= cand - 1;
            std::uint64_t r = detail::closure(adj, domain & ~visited, bit(u));
            if (!(r & adj[root])) continue; // the arm can never close
            int potential = len + pop(r);
            if (exact ? potential < goal : potential <= best) continue;
            if (record) cur.push_back(u);
            if (grow(u, visited | bit(u), len + 1)) return true;
            if (record) cur.pop_back();
        }
        return false;
    }

    bool run_from(int rt, std::uint64_t allowed) {
        root = rt;
        domain = allowed;
        if (record) cur.assign(1, rt);
        return grow(rt, bit(rt), 1);
    }
};

// exact=false: circumference (0 for forests).  exact=true: cycle on exactly
// `goal` vertices, returning goal when found and 0 otherwise.
int cycle_search(const SimpleGraph& g, int goal, bool exact, std::vector<int>* witness) {
    check_query_capacity(g);
    CycleEngine eng;
    eng.adj = g.adjacency();
    eng.exact = exact;
    eng.record = witness != nullptr;
    for (std::uint64_t comp : g.components()) {
        int size = pop(comp);
        if (size < 3) continue;
        int ub = size;
        std::uint64_t side = 0;
        if (detail::is_bipartite(eng.adj, comp, &side)) {
            ub = 2 * std::min(pop(side), size - pop(side));
            if (exact && goal % 2 == 1) continue; // no odd cycles here
        }
        if (exact ? ub < goal : ub <= eng.best) continue;
        eng.goal = exact ? goal : ub;
        bool stop = false;
        for (std::uint64_t s = comp; s && !stop;) {
            int rt = ctz(s);
            s &= s - 1;
            // cycles through smaller roots were already handled
            std::uint64_t allowed = comp & ~(bit(rt) - 1);
            if (pop(allowed) < (exact ? goal : std::max(eng.best + 1, 3))) break;
            stop = eng.run_from(rt, allowed);
        }
        if (stop && exact) {
            if (witness) *witness = eng.found;
            return goal;
        }
    }
    if (exact) return 0;
    if (witness) *witness = eng.found;
    return eng.best;
}

} // namespace

int longest_path_order(const SimpleGraph& g) {
    return path_search(g, g.vertex_count(), false, nullptr);
}

bool has_path(const SimpleGraph& g, int k) {
    check_query_capacity(g);
    if (k < 1) throw DomainError("path order must be >= 1");
    if (k > g.vertex_count()) return false;
    return path_search(g, k, true, nullptr) >= k;
}

std::optional<std::vector<int>> find_path(const SimpleGraph& g, int k) {
    check_query_capacity(g);
    if (k < 1) throw DomainError("path order must be >= 1");
    if (k > g.vertex_count()) return std::nullopt;
    std::vector<int> w;
    if (path_search(g, k, true, &w) >= k) return w;
    return std::nullopt;
}

int circumference(const SimpleGraph& g) {
    return cycle_search(g, g.vertex_count(), false, nullptr);
}

bool has_cycle_exact(const SimpleGraph& g, int k) {
    check_query_capacity(g);
    if (k < 3) throw DomainError("cycle order must be >= 3");
    if (k > g.vertex_count()) return false;
    return cycle_search(g, k, true, nullptr) == k;
}

std::optional<std::vector<int>> find_cycle_exact(const SimpleGraph& g, int k) {
    check_query_capacity(g);
    if (k < 3) throw DomainError("cycle order must be >= 3");
    if (k > g.vertex_count()) return std::nullopt;
    std::vector<int> w;
    if (cycle_search(g, k, true, &w) == k) return w;
    return std::nullopt;
}

namespace detail {

namespace {

// can the arm growing from `end` be extended to `need` vertices in total?
bool arm_reach(const std::uint64_t* adj, std::uint64_t all, int end,
               std::uint64_t visited, int len, int need) {
    if (len >= need) return true;
    std::uint64_t cand = adj[end] & all & ~visited;
    while (cand) {
        int u = ctz(cand);
        cand &= cand - 1;
        std::uint64_t r = closure(adj, all & ~visited, bit(u));
        if (len + pop(r) < need) continue;
        if (arm_reach(adj, all, u, visited | bit(u), len + 1, need)) return true;
    }
    return false;
}

// enumerate arms out of u (avoiding v) and test the v side for each
bool path_arms(const std::uint64_t* adj, std::uint64_t all, int k, int v,
               int end_u, std::uint64_t arm_u, int len_u) {
    if (arm_reach(adj, all, v, arm_u | bit(v), 1, k - len_u)) return true;
    std::uint64_t cand = adj[end_u] & all & ~arm_u & ~bit(v);
    while (cand) {
        int w = ctz(cand);
        cand &= cand - 1;
        // everything the extended u-arm and the v-arm could still use
        std::uint64_t r = closure(adj, all & ~arm_u, bit(w) | bit(v));
        if (len_u + pop(r) < k) continue;
        if (path_arms(adj, all, k, v, w, arm_u | bit(w), len_u + 1)) return true;
    }
    return false;
}

// path of exactly k vertices from u to v; v is only joined as the last one
bool cycle_arm(const std::uint64_t* adj, std::uint64_t all, int k, int v,
               int end, std::uint64_t visited, int len) {
    if (len == k - 1) return (adj[end] >> v) & 1;
    std::uint64_t cand = adj[end] & all & ~visited & ~bit(v);
    while (cand) {
        int w = ctz(cand);
        cand &= cand - 1;
        std::uint64_t r = closure(adj, all & ~visited, bit(w));
        if (!((r >> v) & 1) || len + pop(r) < k) continue;
        if (cycle_arm(adj, all, k, v, w, visited | bit(w), len + 1)) return true;
    }
    return false;
}

} // namespace

bool has_path_through_edge(const std::uint64_t* adj, int n, int k, int u, int v) {
    if (k > n) return false;
    if (k <= 2) return true; // the edge itself
    std::uint64_t all = (n == 64) ? ~std::uint64_t{0} : bit(n) - 1;
    return path_arms(adj, all, k, v, u, bit(u), 1);
}

bool has_cycle_exact_through_edge(const std::uint64_t* adj, int n, int k, int u, int v) {
    std::uint64_t all = (n == 64) ? ~std::uint64_t{0} : bit(n) - 1;
    if (k < 3 || k > n) return false;
    return cycle_arm(adj, all, k, v, u, bit(u), 1);
}

} // namespace detail

} // namespace ramsey
