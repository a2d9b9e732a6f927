#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ramsey/coloring.hpp"
#include "ramsey/coloring_io.hpp"
#include "ramsey/constructions.hpp"
#include "ramsey/errors.hpp"
#include "ramsey/formulas.hpp"
#include "ramsey/proof_checker.hpp"
#include "ramsey/search.hpp"

namespace {

using namespace ramsey;

std::vector<Target> same_path_targets(int order, int count) {
    return std::vector<Target>(static_cast<std::size_t>(count), Target::path(order));
}

int cmd_witness(int n, const std::string& out) {
    const EdgeColoring col = blowup_witness(n);
    const ColorReport rep = verify_coloring(col, same_path_targets(n, 3));
    if (!rep.good) {
        std::cerr << "error: witness failed self-verification\n";
        return 1;
    }
    const std::string text = serialize_coloring(col);
    if (out == "-") {
        std::cout << text;
        return 0;
    }
    std::ofstream f(out, std::ios::binary);
    f << text;
    f.flush();
    if (!f) {
        std::cerr << "error: cannot write " << out << '\n';
        return 2;
    }
    std::cout << "order=" << col.vertex_count() << " colors=" << col.color_count()
              << " good=1 out=" << out << '\n';
    return 0;
}

int cmd_verify(const std::string& path, const std::string& target_list) {
    std::ifstream f(path, std::ios::binary);
    if (!f) {
        std::cerr << "error: cannot read " << path << '\n';
        return 2;
    }
    std::ostringstream buf;
    buf << f.rdbuf();
    const EdgeColoring col = parse_coloring(buf.str());
    const std::vector<Target> targets = parse_targets(target_list, col.color_count());
    const ColorReport rep = verify_coloring(col, targets);
    for (std::size_t i = 0; i < rep.per_color.size(); ++i) {
        const ColorClassStats& st = rep.per_color[i];
        std::cout << "color=" << i + 1 << " edges=" << st.edges
                  << " longest_path=" << st.longest_path
                  << " circumference=" << st.circumference;
        if (st.violation) {
            std::cout << " violation=";
            for (std::size_t j = 0; j < st.violation->size(); ++j)
                std::cout << (j ? "," : "") << (*st.violation)[j];
        }
        std::cout << '\n';
    }
    std::cout << "good=" << (rep.good ? 1 : 0) << '\n';
    return rep.good ? 0 : 1;
}

std::uint64_t env_node_limit() {
    const char* v = std::getenv("RAMSEY_NODE_LIMIT");
    if (!v || !*v)
        return 0;
    try {
        return std::stoull(v);
    } catch (const std::exception&) {
        std::cerr << "warning: ignoring unparsable RAMSEY_NODE_LIMIT\n";
        return 0;
    }
}

int cmd_search(const SearchConfig& cfg, const std::string& out) {
    const SearchOutcome outcome = find_good_coloring(cfg);
    const char* status = outcome.status == SearchStatus::Witness ? "witness"
                         : outcome.status == SearchStatus::ExhaustedNone
                             ? "exhausted-none"
                             : "limit-reached";
    std::cout << "status=" << status << '\n'
              << "nodes=" << outcome.stats.nodes << " leaves=" << outcome.stats.leaves
              << " pattern_prunes=" << outcome.stats.pattern_prunes
              << " budget_prunes=" << outcome.stats.budget_prunes
              << " symmetry_skips=" << outcome.stats.symmetry_skips
              << " workers=" << std::max(1, cfg.workers) << '\n';
    if (outcome.witness) {
        const std::string text = serialize_coloring(*outcome.witness);
        if (out == "-") {
            std::cout << text;
        } else {
            std::ofstream f(out, std::ios::binary);
            f << text;
            f.flush();
            if (!f) {
                std::cerr << "error: cannot write " << out << '\n';
                return 2;
            }
            std::cout << "out=" << out << '\n';
        }
    }
    switch (outcome.status) {
    case SearchStatus::Witness:
        return 0;
    case SearchStatus::ExhaustedNone:
        return 1;
    case SearchStatus::LimitReached:
        return 3;
    }
    return 2;
}

int cmd_formula(const std::string& name, const std::vector<std::int64_t>& params,
                bool oracle) {
    auto need = [&](std::size_t count) {
        if (params.size() != count)
            throw DomainError("formula " + name + " takes " + std::to_string(count) +
                              " parameter(s), got " + std::to_string(params.size()));
    };
    if (name == "turan-path") {
        need(2);
        std::cout << "value=" << turan_path_max_edges(params[0], params[1]) << '\n';
        if (oracle)
            std::cout << "oracle="
                      << turan_path_oracle(static_cast<int>(params[0]),
                                           static_cast<int>(params[1]))
                      << '\n';
        return 0;
    }
    if (name == "woodall") {
        need(2);
        const WoodallValue w = woodall_bound_value(params[0], params[1]);
        std::cout << "value=" << w.value << " integral=" << (w.integral ? 1 : 0) << '\n';
        return 0;
    }
    if (name == "bipartite") {
        need(3);
        const auto bound = cited_bipartite_bound(params[0], params[1], params[2]);
        if (bound)
            std::cout << "value=" << *bound << '\n';
        else
            std::cout << "value=not-covered\n";
        if (oracle)
            std::cout << "oracle="
                      << bipartite_path_turan_oracle(static_cast<int>(params[0]),
                                                     static_cast<int>(params[1]),
                                                     static_cast<int>(params[2]))
                      << '\n';
        return bound ? 0 : 1;
    }
    if (name == "ramsey2-path") {
        need(2);
        std::cout << "value=" << two_color_path_ramsey(params[0], params[1]) << '\n';
        return 0;
    }
    if (name == "conj-r3-path") {
        need(1);
        std::cout << "value=" << conjectured_r3_path(params[0])
                  << " established=" << (r3_path_established(params[0]) ? 1 : 0) << '\n';
        return 0;
    }
    if (name == "conj-r3-cycle") {
        need(1);
        std::cout << "value=" << conjectured_r3_cycle(params[0])
                  << " established=" << (r3_cycle_established(params[0]) ? 1 : 0) << '\n';
        return 0;
    }
    std::cerr << "error: unknown formula '" << name << "'\n";
    return 2;
}

int cmd_proofcheck(const std::optional<std::string>& step_id) {
    std::vector<ProofStep> steps;
    if (step_id)
        steps.push_back(run_proof_step(*step_id));
    else
        steps = run_all_proof_steps();
    bool all_ok = true, any_limit = false;
    for (const ProofStep& step : steps) {
        std::cout << format_step(step);
        all_ok = all_ok && step.ok();
        any_limit = any_limit || step.limit_reached;
    }
    if (any_limit)
        return 3;
    return all_ok ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"search and verification toolkit for three-colour path Ramsey numbers"};
    app.require_subcommand(1);

    auto* witness = app.add_subcommand("witness", "write a lower-bound witness coloring");
    int witness_n = 0;
    std::string witness_out = "-";
    witness->add_option("--n", witness_n, "forbidden path order")->required();
    witness->add_option("--out", witness_out, "output file ('-' = stdout)");

    auto* verify = app.add_subcommand("verify", "verify a coloring file against targets");
    std::string verify_file, verify_targets;
    verify->add_option("file", verify_file, "coloring file")->required();
    verify->add_option("--targets", verify_targets, "comma-separated targets, e.g. P8,P8,P8")
        ->required();

    auto* search = app.add_subcommand("search", "search for a good coloring of K_n");
    SearchConfig cfg;
    std::string search_targets, search_out = "-";
    int search_colors = 0;
    cfg.node_limit = env_node_limit();
    search->add_option("--n", cfg.n, "complete graph order")->required();
    search->add_option("--targets", search_targets, "one target per color")->required();
    search->add_option("--colors", search_colors, "color count (default 3)");
    search->add_option("--node-limit", cfg.node_limit, "abort after this many nodes");
    search->add_option("--time-limit-ms", cfg.time_limit_ms, "abort after this many ms");
    search->add_option("--workers", cfg.workers, "parallel workers");
    search->add_option("--out", search_out, "witness output file ('-' = stdout)");
    search->add_flag("--color-symmetry,!--no-color-symmetry", cfg.color_symmetry,
                     "color-permutation reduction (default on)");
    search->add_flag("--vertex-symmetry,!--no-vertex-symmetry", cfg.vertex_symmetry,
                     "vertex-prefix reduction (default on)");
    search->add_flag("--incremental-check,!--no-incremental-check", cfg.incremental_check,
                     "per-edge pattern checks (default on)");
    search->add_flag("--budget-prune,!--no-budget-prune", cfg.budget_prune,
                     "edge-budget pruning (default on)");

    auto* formula = app.add_subcommand("formula", "evaluate a closed-form bound");
    std::string formula_name;
    std::vector<std::int64_t> formula_params;
    bool formula_oracle = false;
    formula->add_option("name", formula_name,
                        "turan-path | woodall | bipartite | ramsey2-path | "
                        "conj-r3-path | conj-r3-cycle")
        ->required();
    formula->add_option("params", formula_params, "integer parameters");
    formula->add_flag("--oracle", formula_oracle, "also run the exhaustive oracle");

    auto* proof = app.add_subcommand("proof-check", "run the mechanized proof steps");
    std::string proof_step;
    proof->add_option("--step", proof_step, "run one step by id");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (witness->parsed())
            return cmd_witness(witness_n, witness_out);
        if (verify->parsed())
            return cmd_verify(verify_file, verify_targets);
        if (search->parsed()) {
            cfg.targets = parse_targets(search_targets,
                                        search_colors > 0 ? search_colors : 3);
            return cmd_search(cfg, search_out);
        }
        if (formula->parsed())
            return cmd_formula(formula_name, formula_params, formula_oracle);
        if (proof->parsed())
            return cmd_proofcheck(proof_step.empty()
                                      ? std::nullopt
                                      : std::optional<std::string>(proof_step));
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return 2;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const CapacityError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const std::logic_error& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 1;
    }
    return 2;
}
