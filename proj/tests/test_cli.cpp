#include "doctest.h"
#include "ramsey/coloring.hpp"
#include "ramsey/coloring_io.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <sys/wait.h>
#include <unistd.h>

namespace {

struct CliResult {
    int code = -1;
    std::string out;
    std::string err;
};

std::string slurp(const std::filesystem::path& p) {
    std::ifstream f(p, std::ios::binary);
    std::ostringstream buf;
    buf << f.rdbuf();
    return buf.str();
}

std::filesystem::path temp_file(const std::string& tag) {
    static int counter = 0;
    return std::filesystem::temp_directory_path() /
           ("ramsey3_test_" + std::to_string(::getpid()) + "_" + tag + "_" +
            std::to_string(++counter) + ".txt");
}

CliResult run_cli(const std::string& args, const std::string& env = "") {
    const auto out = temp_file("out");
    const auto err = temp_file("err");
    std::string cmd = env.empty() ? "" : env + " ";
    cmd += std::string("'") + RAMSEY3_BIN + "' " + args + " >'" + out.string() +
           "' 2>'" + err.string() + "'";
    const int status = std::system(cmd.c_str());
    CliResult res;
    res.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    res.out = slurp(out);
    res.err = slurp(err);
    std::filesystem::remove(out);
    std::filesystem::remove(err);
    return res;
}

bool contains(const std::string& hay, const std::string& needle) {
    return hay.find(needle) != std::string::npos;
}

} // namespace

TEST_CASE("cli: witness to stdout parses and verifies") {
    CliResult res = run_cli("witness --n 9");
    CHECK(res.code == 0);
    CHECK(res.out.rfind("RPC1 16 3\n", 0) == 0);
    ramsey::EdgeColoring col = ramsey::parse_coloring(res.out);
    std::vector<ramsey::Target> t(3, ramsey::Target::path(9));
    CHECK(ramsey::verify_coloring(col, t).good);
}

TEST_CASE("cli: witness to a file reports the header line") {
    const auto file = temp_file("witness");
    CliResult res = run_cli("witness --n 5 --out '" + file.string() + "'");
    CHECK(res.code == 0);
    CHECK(contains(res.out, "order=8 colors=3 good=1"));
    ramsey::EdgeColoring col = ramsey::parse_coloring(slurp(file));
    CHECK(col.vertex_count() == 8);
    std::filesystem::remove(file);
}

TEST_CASE("cli: witness domain error exits 2") {
    CliResult res = run_cli("witness --n 1");
    CHECK(res.code == 2);
    CHECK(contains(res.err, "error"));
}

TEST_CASE("cli: verify accepts a good coloring and rejects tighter targets") {
    const auto file = temp_file("verify");
    CHECK(run_cli("witness --n 9 --out '" + file.string() + "'").code == 0);

    CliResult good = run_cli("verify '" + file.string() + "' --targets P9,P9,P9");
    CHECK(good.code == 0);
    CHECK(contains(good.out, "color=1 edges="));
    CHECK(contains(good.out, "good=1"));
    CHECK(!contains(good.out, "violation"));

    // the same coloring contains long monochromatic paths below order 9
    CliResult bad = run_cli("verify '" + file.string() + "' --targets P8,P8,P8");
    CHECK(bad.code == 1);
    CHECK(contains(bad.out, "good=0"));
    CHECK(contains(bad.out, "violation="));
    std::filesystem::remove(file);
}

TEST_CASE("cli: verify propagates parse errors as exit 2") {
    const auto file = temp_file("truncated");
    {
        std::ofstream f(file, std::ios::binary);
        f << "RPC1 16 3\n123\n";
    }
    CliResult res = run_cli("verify '" + file.string() + "' --targets P9,P9,P9");
    CHECK(res.code == 2);
    CHECK(contains(res.err, "parse error"));
    std::filesystem::remove(file);

    CliResult missing = run_cli("verify /does/not/exist --targets P9,P9,P9");
    CHECK(missing.code == 2);
}

TEST_CASE("cli: search exit codes separate the three outcomes") {
    CliResult none = run_cli("search --n 5 --targets P3,P3,P3");
    CHECK(none.code == 1);
    CHECK(contains(none.out, "status=exhausted-none"));
    CHECK(contains(none.out, "nodes="));
    CHECK(contains(none.out, "workers=1"));

    const auto file = temp_file("search");
    CliResult hit = run_cli("search --n 4 --targets P3,P3,P3 --out '" + file.string() + "'");
    CHECK(hit.code == 0);
    CHECK(contains(hit.out, "status=witness"));
    CHECK(contains(hit.out, "out="));
    ramsey::EdgeColoring col = ramsey::parse_coloring(slurp(file));
    std::vector<ramsey::Target> t(3, ramsey::Target::path(3));
    CHECK(ramsey::verify_coloring(col, t).good);
    std::filesystem::remove(file);

    CliResult limited = run_cli("search --n 9 --targets P5,P5,P5 --node-limit 50");
    CHECK(limited.code == 3);
    CHECK(contains(limited.out, "status=limit-reached"));
}

TEST_CASE("cli: search honors the node-limit environment variable") {
    CliResult limited =
        run_cli("search --n 9 --targets P5,P5,P5", "RAMSEY_NODE_LIMIT=50");
    CHECK(limited.code == 3);
    CHECK(contains(limited.out, "status=limit-reached"));

    CliResult bogus = run_cli("search --n 5 --targets P3,P3,P3", "RAMSEY_NODE_LIMIT=zzz");
    CHECK(bogus.code == 1); // falls back to unlimited and exhausts
    CHECK(contains(bogus.err, "RAMSEY_NODE_LIMIT"));
}

TEST_CASE("cli: search color count must match the target list") {
    CliResult two = run_cli("search --n 3 --targets P3,P3 --colors 2");
    CHECK(two.code == 1); // exhausted at the two-color diagonal value
    CHECK(run_cli("search --n 2 --targets P3,P3 --colors 2").code == 0);
    CHECK(run_cli("search --n 4 --targets P3,P3").code == 2); // needs 3 by default
}

TEST_CASE("cli: search flag toggles parse") {
    CliResult res = run_cli(
        "search --n 5 --targets P4,P4,P4 --no-vertex-symmetry --no-budget-prune");
    CHECK(res.code == 0); // a witness exists either way
    CHECK(contains(res.out, "status=witness"));
}

TEST_CASE("cli: formula values and exit codes") {
    CliResult res = run_cli("formula woodall 17 6");
    CHECK(res.code == 0);
    CHECK(contains(res.out, "value=46 integral=1"));

    res = run_cli("formula turan-path 11 8");
    CHECK(res.code == 0);
    CHECK(contains(res.out, "value=27"));

    res = run_cli("formula turan-path 9 6 --oracle");
    CHECK(res.code == 0);
    CHECK(contains(res.out, "value=16"));
    CHECK(contains(res.out, "oracle=16"));

    res = run_cli("formula bipartite 7 8 9");
    CHECK(res.code == 0);
    CHECK(contains(res.out, "value=28"));

    res = run_cli("formula bipartite 2 3 6");
    CHECK(res.code == 1);
    CHECK(contains(res.out, "value=not-covered"));

    res = run_cli("formula bipartite 2 5 4 --oracle");
    CHECK(res.code == 1);
    CHECK(contains(res.out, "value=not-covered"));
    CHECK(contains(res.out, "oracle=5"));

    res = run_cli("formula ramsey2-path 9 9");
    CHECK(contains(res.out, "value=12"));

    res = run_cli("formula conj-r3-path 9");
    CHECK(contains(res.out, "value=17 established=1"));
    res = run_cli("formula conj-r3-path 12");
    CHECK(contains(res.out, "value=22 established=0"));
    res = run_cli("formula conj-r3-cycle 6");
    CHECK(contains(res.out, "value=12 established=1"));

    CHECK(run_cli("formula nosuch 1").code == 2);
    CHECK(run_cli("formula woodall 17").code == 2);       // missing parameter
    CHECK(run_cli("formula woodall 2 5").code == 2);      // domain error
    CHECK(run_cli("formula turan-path 10 4 --oracle").code == 3); // capacity
}

TEST_CASE("cli: proof-check emits per-point lines") {
    CliResult res = run_cli("proof-check --step Eq6");
    CHECK(res.code == 0);
    CHECK(contains(res.out, "step=Eq6 point=m=3 lhs=31 rhs=31 verdict=flag"));
    CHECK(contains(res.out, "step=Eq6 point=m=6 lhs=31 rhs=31 verdict=flag"));
    CHECK(contains(res.out, "step=Eq6 points=10 ok=1 limit=0"));
    CHECK(!contains(res.out, "expected="));

    CHECK(run_cli("proof-check --step nosuch").code == 2);

    CliResult all = run_cli("proof-check");
    CHECK(all.code == 0);
    std::size_t ok_lines = 0, pos = 0;
    while ((pos = all.out.find("ok=1 limit=0", pos)) != std::string::npos) {
        ++ok_lines;
        ++pos;
    }
    CHECK(ok_lines == 8);
}

TEST_CASE("cli: argument errors exit 2, help exits 0") {
    CHECK(run_cli("").code == 2);                   // a subcommand is required
    CHECK(run_cli("search --targets P3,P3,P3").code == 2); // --n is required
    CHECK(run_cli("witness --n notanumber").code == 2);
    CHECK(run_cli("--help").code == 0);
    CHECK(run_cli("search --help").code == 0);
}
