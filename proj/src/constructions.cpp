#include "ramsey/constructions.hpp"

#include <string>

#include "ramsey/errors.hpp"
#include "ramsey/formulas.hpp"

namespace ramsey {

BlowupSpec BlowupSpec::make(int n) {
    if (n < 2)
        throw DomainError("blow-up witness needs n >= 2");
    BlowupSpec spec;
    spec.n = n;
    const int m = (n + 1) / 2;
    spec.part_sizes = {m - 1, m - 1, m - 1, n % 2 == 0 ? m : m - 1};
    // one perfect matching of the four parts per color; color 1 also owns all
    // intra-part edges, and its matching pairs the odd-size part (3) with
    // part 2 so each of its components stays below n vertices
    spec.schedule = {{{{{0, 1}, {2, 3}}}, {{{0, 2}, {1, 3}}}, {{{0, 3}, {1, 2}}}}};
    return spec;
}

EdgeColoring blowup_witness(int n) {
    const BlowupSpec spec = BlowupSpec::make(n);
    const int total = spec.total();
    EdgeColoring col(total, 3);
    std::vector<int> part(total);
    int v = 0;
    for (int p = 0; p < 4; ++p)
        for (int i = 0; i < spec.part_sizes[p]; ++i)
            part[v++] = p;
    auto color_of = [&](int pu, int pv) {
        if (pu == pv)
            return 1;
        for (int c = 0; c < 3; ++c)
            for (const auto& [x, y] : spec.schedule[c])
                if ((x == pu && y == pv) || (x == pv && y == pu))
                    return c + 1;
        throw DomainError("unreachable: parts not matched");
    };
    for (int u = 0; u < total; ++u)
        for (int w = u + 1; w < total; ++w)
            col.set_color(u, w, color_of(part[u], part[w]));
    return col;
}

SimpleGraph turan_extremal_union(int t, int k, int r) {
    if (t < 0 || k < 1 || r < 0 || r >= k)
        throw DomainError("turan union expects t >= 0, k >= 1, 0 <= r < k");
    SimpleGraph g(t * k + r);
    int base = 0;
    auto clique = [&](int size) {
        for (int i = 0; i < size; ++i)
            for (int j = i + 1; j < size; ++j)
                g.add_edge(base + i, base + j);
        base += size;
    };
    for (int i = 0; i < t; ++i)
        clique(k);
    clique(r);
    return g;
}

SimpleGraph turan_extremal_join(int k, int tail) {
    if (k < 3 || k % 2 == 0)
        throw DomainError("turan join expects odd k >= 3");
    if (tail < (k + 1) / 2)
        throw DomainError("turan join expects tail >= (k+1)/2");
    const int h = (k - 1) / 2;
    SimpleGraph g(h + tail);
    for (int i = 0; i < h; ++i)
        for (int j = i + 1; j < h; ++j)
            g.add_edge(i, j);
    for (int i = 0; i < h; ++i)
        for (int j = 0; j < tail; ++j)
            g.add_edge(i, h + j);
    return g;
}

SimpleGraph biclique_minus_biclique(int a, int b, int ap, int bp) {
    if (a < 1 || b < 1)
        throw DomainError("biclique sides must be positive");
    if (ap < 0 || bp < 0 || ap > a || bp > b)
        throw DomainError("removed biclique must fit inside K_{a,b}");
    SimpleGraph g(a + b);
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j)
            if (i >= ap || j >= bp)
                g.add_edge(i, a + j);
    return g;
}

SimpleGraph biclique_union(const std::vector<std::pair<int, int>>& parts) {
    if (parts.empty())
        throw DomainError("biclique union needs at least one part");
    int total = 0;
    for (const auto& [a, b] : parts) {
        if (a < 1 || b < 1)
            throw DomainError("biclique sides must be positive");
        total += a + b;
    }
    SimpleGraph g(total);
    int base = 0;
    for (const auto& [a, b] : parts) {
        for (int i = 0; i < a; ++i)
            for (int j = 0; j < b; ++j)
                g.add_edge(base + i, base + a + j);
        base += a + b;
    }
    return g;
}

} // namespace ramsey
