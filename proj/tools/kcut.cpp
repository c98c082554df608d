// kcut: command line front end for the max k-cut game library.
//
// Exit status: 0 verdict true / success, 1 verdict false (witness printed),
// 2 usage, parse or budget errors, 3 a proven result failed on an instance.

#include <chrono>
#include <cstdint>
#include <iostream>
#include <optional>
#include <random>
#include <string>

#include "CLI11.hpp"
#include "kcut/corpus.hpp"
#include "kcut/errors.hpp"
#include "kcut/harness.hpp"
#include "kcut/io.hpp"
#include "kcut/search.hpp"

namespace {

using kcut::json;

constexpr int kExitTrue = 0;
constexpr int kExitFalse = 1;
constexpr int kExitUsage = 2;
constexpr int kExitFalsified = 3;

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

kcut::GameSpec load_game(const std::string& path, std::optional<int> k) {
    auto spec = kcut::read_game_file(path);
    if (k) return kcut::GameSpec(spec.graph(), *k);
    return spec;
}

void print_witness(const kcut::DeviationWitness& w) {
    std::cout << "witness: coalition {";
    for (std::size_t i = 0; i < w.move.coalition.size(); ++i) {
        std::cout << (i ? " " : "") << w.move.coalition[i];
    }
    std::cout << "} -> (";
    for (std::size_t i = 0; i < w.move.new_colors.size(); ++i) std::cout << (i ? " " : "") << w.move.new_colors[i];
    std::cout << ")\n";
    for (std::size_t i = 0; i < w.move.coalition.size(); ++i) {
        std::cout << "  node " << w.move.coalition[i] << ": utility " << w.utilities_before[i] << " -> "
                  << w.utilities_after[i] << "\n";
    }
    std::cout << "  cut " << w.cut_before << " -> " << w.cut_after << " (delta " << w.cut_delta() << ")\n";
}

struct CheckArgs {
    std::string graph;
    std::string coloring;
    std::string concept_name = "ne";
    bool json = false;
};

int run_check(const CheckArgs& a) {
    const auto start = std::chrono::steady_clock::now();
    const auto spec = kcut::read_game_file(a.graph);
    const auto sigma = kcut::read_coloring_file(a.coloring, spec);
    const auto wanted = kcut::Concept::parse(a.concept_name);
    const auto report = kcut::check_concept(spec, sigma, wanted);
    if (a.json) {
        json out = kcut::report_to_json(report);
        out["game"] = kcut::game_to_json(spec);
        out["coloring"] = kcut::coloring_to_json(sigma);
        out["timing"] = {{"wall_seconds", seconds_since(start)}};
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << report.criterion.to_string() << ": " << (report.verdict ? "true" : "false") << " ("
                  << report.coalitions_examined << " coalitions examined)\n";
        if (report.witness) print_witness(*report.witness);
    }
    return report.verdict ? kExitTrue : kExitFalse;
}

struct SolveArgs {
    std::string graph;
    std::optional<int> k;
    bool heuristic = false;
    std::uint64_t seed = 1;
    bool json = false;
};

int run_solve(const SolveArgs& a) {
    const auto start = std::chrono::steady_clock::now();
    const auto spec = load_game(a.graph, a.k);
    kcut::Coloring best;
    std::uint64_t nodes = 0;
    if (a.heuristic) {
        best = kcut::local_search_coloring(spec, a.seed);
    } else {
        const auto estimate = kcut::canonical_coloring_count(spec.n(), spec.k());
        std::cerr << "exact search over at most " << estimate << " canonical colorings (budget "
                  << kcut::default_budget() << ")\n";
        auto opt = kcut::optimal_coloring_exact(spec);
        best = opt.coloring;
        nodes = opt.search_nodes;
    }
    const auto cut = kcut::cut_value(spec, best);
    if (a.json) {
        json out{{"solver", a.heuristic ? "heuristic" : "exact"},
                 {"verdict", true},
                 {"game", kcut::game_to_json(spec)},
                 {"coloring", kcut::coloring_to_json(best)},
                 {"cut", kcut::rational_to_json(cut)},
                 {"counts", {{"search_nodes", nodes}}},
                 {"timing", {{"wall_seconds", seconds_since(start)}}}};
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "# cut " << cut << (a.heuristic ? " (local search)" : " (optimal)") << "\n"
                  << kcut::format_coloring(best);
    }
    return kExitTrue;
}

struct DynamicsArgs {
    std::string graph;
    std::optional<int> k;
    std::string policy = "unilateral";
    std::size_t max_steps = 1000;
    std::optional<std::string> start;
    std::uint64_t seed = 1;
    bool random_selection = false;
    bool json = false;
};

int run_dynamics(const DynamicsArgs& a) {
    const auto started = std::chrono::steady_clock::now();
    const auto spec = load_game(a.graph, a.k);
    kcut::Coloring sigma0;
    if (a.start) {
        sigma0 = kcut::read_coloring_file(*a.start, spec);
    } else {
        std::mt19937_64 rng(a.seed);
        sigma0 = kcut::random_coloring(spec.n(), spec.k(), rng);
    }
    auto policy = kcut::Policy::parse(a.policy);
    if (a.random_selection) policy = policy.with_random(a.seed);
    const auto trace = kcut::run(spec, sigma0, policy, a.max_steps);
    const auto potential = kcut::check_potential_candidate(spec, trace);
    if (a.json) {
        json out = kcut::trace_to_json(trace);
        out["game"] = kcut::game_to_json(spec);
        out["verdict"] = trace.status == kcut::DynamicsStatus::Converged;
        out["potential"] = {{"respected", potential.potential_respected},
                            {"non_increases", potential.non_increases},
                            {"falsified", potential.falsified}};
        out["timing"] = {{"wall_seconds", seconds_since(started)}};
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << kcut::format_trace(trace);
        std::cout << "status: " << kcut::to_string(trace.status) << " after " << trace.steps.size() << " steps\n";
        if (!potential.potential_respected) {
            std::cout << "cut did not increase at " << potential.non_increases.size() << " step(s)\n";
        }
    }
    if (potential.falsified) {
        std::cerr << "falsification: the cut failed to increase under a policy where it must\n";
        return kExitFalsified;
    }
    return trace.status == kcut::DynamicsStatus::Converged ? kExitTrue : kExitFalse;
}

struct VerifyArgs {
    std::string suite;
    bool big = false;
    std::uint64_t seed = 1;
    int max_n = 0;
    bool json = false;
};

int run_verify(const VerifyArgs& a) {
    kcut::HarnessOptions options;
    options.seed = a.seed;
    options.big = a.big;
    options.max_n = a.max_n;
    std::vector<std::string> suites;
    if (a.suite == "all") {
        suites = kcut::harness_suites();
    } else {
        suites.push_back(a.suite);
    }
    bool all_passed = true;
    json results = json::array();
    for (const auto& name : suites) {
        const auto r = kcut::verify_theorems(name, options);
        all_passed = all_passed && r.passed();
        if (a.json) {
            results.push_back(kcut::harness_to_json(r));
        } else {
            std::cout << (r.passed() ? "PASS " : "FAIL ") << r.suite << ": " << r.instances_checked
                      << " instances, " << r.checks << " checks, " << r.failures.size() << " failures, "
                      << r.wall_seconds << " s\n  corpus: " << r.corpus << "\n";
            for (const auto& f : r.failures) std::cout << "  failure: " << f << "\n";
        }
    }
    if (a.json) std::cout << (results.size() == 1 ? results[0] : results).dump(2) << "\n";
    return all_passed ? kExitTrue : kExitFalsified;
}

struct SearchArgs {
    std::string kind;
    int n_max = 10;
    int k = 2;
    std::uint64_t seed = 1;
    std::uint64_t budget = 200000;
    bool json = false;
};

int run_search(const SearchArgs& a) {
    const auto started = std::chrono::steady_clock::now();
    if (a.kind == "cycle") {
        auto found = kcut::search_dynamics_cycle(kcut::default_weight_menu(), a.n_max, a.seed, a.budget);
        if (a.json) {
            json out{{"kind", "cycle"}, {"verdict", found.has_value()}, {"seed", a.seed}};
            if (found) out["instance"] = kcut::cycle_to_json(*found);
            out["timing"] = {{"wall_seconds", seconds_since(started)}};
            std::cout << out.dump(2) << "\n";
        } else if (found) {
            std::cout << "# cycling instance after " << found->assignments_examined << " weight assignments\n"
                      << kcut::format_game(found->spec) << "# start\n"
                      << kcut::format_coloring(found->start) << kcut::format_trace(found->trace);
        } else {
            std::cout << "no cycling instance found\n";
        }
        return found ? kExitTrue : kExitFalse;
    }
    if (a.kind == "cut-decrease") {
        const auto inst = kcut::reconstruct_cut_decrease_instance();
        const auto w = kcut::make_witness(inst.spec, inst.coloring, inst.move);
        if (a.json) {
            json out{{"kind", "cut-decrease"},
                     {"verdict", true},
                     {"game", kcut::game_to_json(inst.spec)},
                     {"coloring", kcut::coloring_to_json(inst.coloring)},
                     {"witness", kcut::witness_to_json(w)},
                     {"pads_per_color", inst.pads_per_color},
                     {"timing", {{"wall_seconds", seconds_since(started)}}}};
            std::cout << out.dump(2) << "\n";
        } else {
            std::cout << kcut::format_game(inst.spec) << kcut::format_coloring(inst.coloring);
            print_witness(w);
        }
        return kExitTrue;
    }
    if (a.kind == "optimum-not-se") {
        const auto probe = kcut::search_optimum_not_strong(a.n_max, a.k, a.seed, a.budget);
        const auto& found = probe.counterexample;
        if (a.json) {
            json out{{"kind", "optimum-not-se"},
                     {"verdict", found.has_value()},
                     {"seed", a.seed},
                     {"graphs_examined", probe.graphs_examined},
                     {"optima_examined", probe.optima_examined}};
            if (found) {
                out["game"] = kcut::game_to_json(found->spec);
                out["coloring"] = kcut::coloring_to_json(found->optimum);
                out["report"] = kcut::report_to_json(found->report);
            }
            out["timing"] = {{"wall_seconds", seconds_since(started)}};
            std::cout << out.dump(2) << "\n";
        } else if (found) {
            std::cout << "# optimal coloring that is not an SE\n"
                      << kcut::format_game(found->spec) << kcut::format_coloring(found->optimum);
            print_witness(*found->report.witness);
        } else {
            std::cout << "no counterexample among " << probe.optima_examined << " optimal colorings of "
                      << probe.graphs_examined << " graphs\n";
        }
        return found ? kExitTrue : kExitFalse;
    }
    const auto kind = kcut::parse_separation_kind(a.kind);
    auto found = kcut::search_separation(kind, a.n_max, a.k, a.seed, a.budget);
    if (a.json) {
        json out{{"kind", a.kind}, {"verdict", found.has_value()}, {"seed", a.seed}};
        if (found) out["witness"] = kcut::separation_to_json(*found);
        out["timing"] = {{"wall_seconds", seconds_since(started)}};
        std::cout << out.dump(2) << "\n";
    } else if (found) {
        std::cout << "# " << kcut::to_string(kind) << ": " << found->inner.criterion.to_string() << " holds, "
                  << found->outer.criterion.to_string() << " fails\n"
                  << kcut::format_game(found->spec) << kcut::format_coloring(found->coloring);
        print_witness(*found->outer.witness);
    } else {
        std::cout << "no witness found within budget\n";
    }
    return found ? kExitTrue : kExitFalse;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Max k-cut game: equilibrium checks, dynamics and verification"};
    app.require_subcommand(1);

    CheckArgs check;
    auto* check_cmd = app.add_subcommand("check", "Check a coloring against an equilibrium concept");
    check_cmd->add_option("graph", check.graph, "Graph file")->required();
    check_cmd->add_option("coloring", check.coloring, "Coloring file")->required();
    check_cmd->add_option("--concept", check.concept_name, "ne, qse:Q, lse:X or se")->capture_default_str();
    check_cmd->add_flag("--json", check.json, "Emit a JSON report");

    SolveArgs solve;
    auto* solve_cmd = app.add_subcommand("solve", "Compute a maximum k-cut coloring");
    solve_cmd->add_option("graph", solve.graph, "Graph file")->required();
    solve_cmd->add_option("-k", solve.k, "Number of colors (overrides the file header)");
    auto* exact_flag = solve_cmd->add_flag("--exact", "Exhaustive search (default)");
    solve_cmd->add_flag("--heuristic", solve.heuristic, "Best-response local search")->excludes(exact_flag);
    solve_cmd->add_option("--seed", solve.seed, "Seed for --heuristic")->capture_default_str();
    solve_cmd->add_flag("--json", solve.json, "Emit a JSON report");

    DynamicsArgs dyn;
    auto* dyn_cmd = app.add_subcommand("dynamics", "Run improvement dynamics");
    dyn_cmd->add_option("graph", dyn.graph, "Graph file")->required();
    dyn_cmd->add_option("-k", dyn.k, "Number of colors (overrides the file header)");
    dyn_cmd->add_option("--policy", dyn.policy, "unilateral, strong-minimal:Q, strong-any:Q or clique-only")
        ->capture_default_str();
    dyn_cmd->add_option("--max-steps", dyn.max_steps, "Step limit")->capture_default_str();
    auto* start_opt = dyn_cmd->add_option("--start", dyn.start, "Start coloring file");
    dyn_cmd->add_option("--seed", dyn.seed, "Seed for the random start and random selection")
        ->capture_default_str()
        ->excludes(start_opt);
    dyn_cmd->add_flag("--random-selection", dyn.random_selection, "Pick admissible moves uniformly at random");
    dyn_cmd->add_flag("--json", dyn.json, "Emit the trace as JSON");

    VerifyArgs verify;
    auto* verify_cmd = app.add_subcommand("verify", "Run a verification suite");
    verify_cmd->add_option("--suite", verify.suite, "Suite name or 'all'")
        ->required()
        ->check(CLI::IsMember([] {
            auto names = kcut::harness_suites();
            names.push_back("all");
            return names;
        }()));
    verify_cmd->add_flag("--big", verify.big, "Include the larger corpora");
    verify_cmd->add_option("--seed", verify.seed, "Root seed")->capture_default_str();
    verify_cmd->add_option("--max-n", verify.max_n, "Cap on exhaustive graph sizes (0 = suite default)");
    verify_cmd->add_flag("--json", verify.json, "Emit a JSON summary");

    SearchArgs search;
    auto* search_cmd = app.add_subcommand("search", "Search for separating or cycling instances");
    search_cmd->add_option("--kind", search.kind,
                           "ne-not-2se, 2se-not-lse, lse-not-kse, 2se-not-se, cycle, cut-decrease or optimum-not-se")
        ->required();
    search_cmd->add_option("--n-max", search.n_max, "Largest graph size")->capture_default_str();
    search_cmd->add_option("-k", search.k, "Number of colors for separations")->capture_default_str();
    search_cmd->add_option("--seed", search.seed, "Seed")->capture_default_str();
    search_cmd->add_option("--budget", search.budget, "Instances (or weight assignments) to try")
        ->capture_default_str();
    search_cmd->add_flag("--json", search.json, "Emit a JSON report");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitTrue : kExitUsage;
    }

    try {
        if (*check_cmd) return run_check(check);
        if (*solve_cmd) return run_solve(solve);
        if (*dyn_cmd) return run_dynamics(dyn);
        if (*verify_cmd) return run_verify(verify);
        if (*search_cmd) return run_search(search);
    } catch (const kcut::FalsificationError& e) {
        std::cerr << "falsification: " << e.what() << "\n" << e.witness_json() << "\n";
        return kExitFalsified;
    } catch (const kcut::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const kcut::BudgetExceeded& e) {
        std::cerr << "budget exceeded: " << e.what() << " (raise KCUT_BUDGET to allow it)\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
