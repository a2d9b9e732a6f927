// timing comparison between the serial reference engine (one worker,
// whole-class rescans) and the parallel/incremental production settings
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#include "ramsey/coloring_io.hpp"
#include "ramsey/formulas.hpp"
#include "ramsey/search.hpp"

using namespace ramsey;

namespace {

double run_ms(const SearchConfig& cfg, SearchOutcome& out) {
    const auto t0 = std::chrono::steady_clock::now();
    out = find_good_coloring(cfg);
    const auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

const char* status_name(SearchStatus s) {
    switch (s) {
    case SearchStatus::Witness:
        return "witness";
    case SearchStatus::ExhaustedNone:
        return "exhausted-none";
    case SearchStatus::LimitReached:
        return "limit-reached";
    }
    return "?";
}

void bench_search(const char* label, int n, const std::string& targets) {
    SearchConfig base;
    base.n = n;
    base.targets = parse_targets(targets, 0);
    std::printf("%s: n=%d targets=%s\n", label, n, targets.c_str());

    SearchConfig reference = base;
    reference.incremental_check = false;
    SearchOutcome out;
    double ms = run_ms(reference, out);
    std::printf("  %-34s %10.1f ms  nodes=%llu status=%s\n",
                "serial reference (full rescans)", ms,
                static_cast<unsigned long long>(out.stats.nodes),
                status_name(out.status));

    ms = run_ms(base, out);
    const double serial_ms = ms;
    std::printf("  %-34s %10.1f ms  nodes=%llu status=%s\n",
                "serial production (incremental)", ms,
                static_cast<unsigned long long>(out.stats.nodes),
                status_name(out.status));

    for (int workers : {2, 4}) {
        SearchConfig par = base;
        par.workers = workers;
        ms = run_ms(par, out);
        std::printf("  %-32s %2d %10.1f ms  nodes=%llu status=%s speedup=%.2f\n",
                    "parallel production, workers=", workers, ms,
                    static_cast<unsigned long long>(out.stats.nodes),
                    status_name(out.status), ms > 0 ? serial_ms / ms : 0.0);
    }
}

} // namespace

int main(int argc, char** argv) {
    if (argc >= 3) {
        bench_search("custom", std::atoi(argv[1]), argv[2]);
        return 0;
    }
    bench_search("witness search", 8, "P5,P5,P5");
    bench_search("exhaustion", 9, "P5,P5,P5");
    bench_search("exhaustion", 5, "P3,P3,P3");

    const auto t0 = std::chrono::steady_clock::now();
    const std::int64_t v = turan_path_oracle(9, 6);
    const auto t1 = std::chrono::steady_clock::now();
    std::printf("turan_path_oracle(9,6)=%lld in %.1f ms (closed form %lld)\n",
                static_cast<long long>(v),
                std::chrono::duration<double, std::milli>(t1 - t0).count(),
                static_cast<long long>(turan_path_max_edges(9, 6)));
    return 0;
}
