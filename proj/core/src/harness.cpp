#include "kcut/harness.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <random>
#include <stdexcept>

#include "detail/scan.hpp"
#include "kcut/corpus.hpp"
#include "kcut/errors.hpp"
#include "kcut/search.hpp"

namespace kcut {

const std::vector<std::string>& harness_suites() {
    static const std::vector<std::string> names{
        "optimum-5se", "optimum-lse", "optimum-3se",   "containments", "k2-lse-eq-2se", "degree-se",
        "girth-se",    "lemmas",      "dynamics",      "minimal-cycle", "cut-decrease", "separations",
    };
    return names;
}

namespace {

class Run {
public:
    explicit Run(std::string suite) { result_.suite = std::move(suite); }

    void instance() { ++result_.instances_checked; }
    void check() { ++result_.checks; }
    void corpus(std::string text) { result_.corpus = std::move(text); }

    void fail(const std::string& what, const GameSpec& spec, const Coloring* sigma = nullptr,
              const JointMove* move = nullptr, json extra = nullptr) {
        json event{{"what", what}, {"game", game_to_json(spec)}};
        if (sigma) event["coloring"] = coloring_to_json(*sigma);
        if (move) event["move"] = move_to_json(*move);
        if (!extra.is_null()) event["detail"] = std::move(extra);
        result_.failures.push_back(event.dump());
    }
    void fail(const std::string& what) { result_.failures.push_back(json{{"what", what}}.dump()); }

    HarnessResult finish(std::chrono::steady_clock::time_point start) {
        result_.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        return std::move(result_);
    }

private:
    HarnessResult result_;
};

int limit(const HarnessOptions& o, int fallback) { return o.max_n > 0 ? std::min(o.max_n, fallback) : fallback; }

void each_connected(int max_n, const std::function<void(const Graph&)>& f) {
    for (int n = 1; n <= max_n; ++n) {
        for_each_connected_graph(n, [&](const Graph& g) {
            f(g);
            return true;
        });
    }
}

// Exact optima must pass `check`; used by all optimum suites.
void optimum_passes(Run& run, const GameSpec& spec, const HarnessOptions& o,
                    const std::function<EquilibriumReport(const GameSpec&, const Coloring&)>& check) {
    const auto opt = optimal_coloring_exact(spec, o.budget);
    const auto report = check(spec, opt.coloring);
    run.instance();
    run.check();
    if (report.verdict) return;
    run.fail("optimal coloring fails " + report.criterion.to_string(), spec, &opt.coloring, &report.witness->move);
}

HarnessResult optimum_suite(const std::string& name, const HarnessOptions& o,
                            const std::function<EquilibriumReport(const GameSpec&, const Coloring&)>& check) {
    const auto start = std::chrono::steady_clock::now();
    Run run(name);
    const int max_n = limit(o, 6);
    std::string corpus = "all connected unweighted graphs n <= " + std::to_string(max_n) + ", k in {2,3}";
    each_connected(max_n, [&](const Graph& g) {
        for (int k : {2, 3}) optimum_passes(run, GameSpec(g, k), o, check);
    });
    if (o.big) {
        corpus += "; 200 random connected graphs n = 7";
        for (std::uint64_t i = 0; i < 200; ++i) {
            std::mt19937_64 rng(substream_seed(o.seed, i));
            const double p = std::uniform_real_distribution<double>(0.3, 0.9)(rng);
            const Graph g = random_connected_graph(7, p, rng);
            for (int k : {2, 3}) optimum_passes(run, GameSpec(g, k), o, check);
        }
    }
    run.corpus(corpus);
    return run.finish(start);
}

HarnessResult optimum_3se(const HarnessOptions& o) {
    const auto start = std::chrono::steady_clock::now();
    Run run("optimum-3se");
    auto check = [&](const GameSpec& spec, const Coloring& sigma) {
        return is_q_strong(spec, sigma, std::min(3, spec.n()), o.budget);
    };
    const int max_n = limit(o, 5);
    each_connected(max_n, [&](const Graph& g) {
        for (int k : {2, 3}) optimum_passes(run, GameSpec(g, k), o, check);
    });
    const std::uint64_t weighted = o.big ? 2000 : 300;
    const auto menu = default_weight_menu();
    for (std::uint64_t i = 0; i < weighted; ++i) {
        std::mt19937_64 rng(substream_seed(o.seed, i));
        const int n = std::uniform_int_distribution<int>(3, 7)(rng);
        const Graph g = random_connected_graph(n, 0.6, rng, menu);
        for (int k : {2, 3}) optimum_passes(run, GameSpec(g, k), o, check);
    }
    run.corpus("all connected unweighted graphs n <= " + std::to_string(max_n) + " and " + std::to_string(weighted) +
               " random weighted graphs n in 3..7 over the default menu, k in {2,3}");
    return run.finish(start);
}

HarnessResult containments(const HarnessOptions& o) {
    const auto start = std::chrono::steady_clock::now();
    Run run("containments");
    const int max_n = limit(o, 5);
    const int k = 3;
    each_connected(max_n, [&](const Graph& g) {
        const GameSpec spec(g, k);
        const int n = g.node_count();
        for_each_coloring(n, k, [&](const Coloring& sigma) {
            const auto two = is_q_strong(spec, sigma, std::min(2, n), o.budget);
            const auto lse = is_local_strong(spec, sigma, 1);
            const auto kse = is_q_strong(spec, sigma, std::min(k, n), o.budget);
            run.instance();
            run.check();
            run.check();
            if (kse.verdict && !lse.verdict) run.fail("k-SE that is not an LSE", spec, &sigma, &lse.witness->move);
            if (lse.verdict && !two.verdict) run.fail("LSE that is not a 2-SE", spec, &sigma, &two.witness->move);
            return true;
        });
    });
    run.corpus("all colorings of all connected unweighted graphs n <= " + std::to_string(max_n) + ", k = 3");
    return run.finish(start);
}

HarnessResult k2_equivalence(const HarnessOptions& o) {
    const auto start = std::chrono::steady_clock::now();
    Run run("k2-lse-eq-2se");
    const int max_n = limit(o, 6);
    each_connected(max_n, [&](const Graph& g) {
        const GameSpec spec(g, 2);
        const int n = g.node_count();
        for_each_coloring(n, 2, [&](const Coloring& sigma) {
            const auto two = is_q_strong(spec, sigma, std::min(2, n), o.budget);
            const auto lse = is_local_strong(spec, sigma, 1);
            run.instance();
            run.check();
            if (two.verdict != lse.verdict) {
                const auto& w = two.verdict ? lse.witness : two.witness;
                run.fail(std::string("LSE and 2-SE verdicts differ (2-SE ") + (two.verdict ? "true" : "false") + ")",
                         spec, &sigma, &w->move);
            }
            return true;
        });
    });
    run.corpus("all colorings of all connected unweighted graphs n <= " + std::to_string(max_n) + ", k = 2");
    return run.finish(start);
}

HarnessResult degree_se(const HarnessOptions& o) {
    const auto start = std::chrono::steady_clock::now();
    Run run("degree-se");
    const int max_n = limit(o, 7);
    auto strong = [&](const GameSpec& spec, const Coloring& sigma) { return is_strong(spec, sigma, o.budget); };
    each_connected(max_n, [&](const Graph& g) {
        for (int k : {2, 3}) {
            const GameSpec spec(g, k);
            if (!degree_condition_guarantees_se(spec)) continue;
            optimum_passes(run, spec, o, strong);
        }
    });
    run.corpus("all connected unweighted graphs n <= " + std::to_string(max_n) +
               " with max degree <= 2k - 1, k in {2,3}");
    return run.finish(start);
}

HarnessResult girth_se(const HarnessOptions& o) {
    const auto start = std::chrono::steady_clock::now();
    Run run("girth-se");
    auto strong = [&](const GameSpec& spec, const Coloring& sigma) { return is_strong(spec, sigma, o.budget); };
    auto one = [&](const Graph& g) {
        for (int k : {2, 3}) {
            const GameSpec spec(g, k);
            const auto guarantee = girth_guarantee(spec);
            run.check();
            if (!guarantee.se_guaranteed && guarantee.q_guaranteed < spec.n()) {
                run.fail("corpus graph without an SE guarantee", spec);
                continue;
            }
            optimum_passes(run, spec, o, strong);
        }
    };
    for (int n = 3; n <= 8; ++n) one(cycle_graph(n));
    const int max_n = limit(o, 7);
    for (int n = 1; n <= max_n; ++n) {
        for_each_labeled_tree(n, [&](const Graph& g) {
            one(g);
            return true;
        });
    }
    run.corpus("cycles C3..C8 and all labeled trees n <= " + std::to_string(max_n) + ", k in {2,3}");
    return run.finish(start);
}

// Every strong improvement from sigma, with minimality from a subset DP over
// the improvable coalitions (n <= 8).
struct DeviationScan {
    std::vector<JointMove> moves;
    std::vector<std::uint32_t> masks;
    std::vector<bool> minimal;
    bool nash = true;
};

DeviationScan scan_all(const GameSpec& spec, const Coloring& sigma) {
    const int n = spec.n();
    DeviationScan out;
    detail::CostTable table(spec, sigma);
    const auto candidates = detail::improvable_nodes(spec, table);
    std::vector<char> improvable(std::size_t{1} << n, 0);
    detail::scan_strong_improvements(spec, sigma, table, candidates, n, detail::any_coalition(),
                                     [&](std::span<const NodeId> members, std::span<const Color> colors) {
                                         std::uint32_t mask = 0;
                                         for (auto v : members) mask |= 1u << v;
                                         improvable[mask] = 1;
                                         out.moves.push_back(
                                             JointMove{Coalition(std::vector<NodeId>(members.begin(), members.end())),
                                                       std::vector<Color>(colors.begin(), colors.end())});
                                         out.masks.push_back(mask);
                                         if (members.size() == 1) out.nash = false;
                                         return true;
                                     });
    // below[S]: some non-empty subset of S (S included) is improvable.
    std::vector<char> below(improvable.size(), 0);
    for (std::uint32_t s = 1; s < below.size(); ++s) {
        below[s] = improvable[s];
        for (int i = 0; i < n && !below[s]; ++i) {
            if (s & (1u << i)) below[s] = below[s & ~(1u << i)];
        }
    }
    for (auto mask : out.masks) {
        bool proper = false;
        for (int i = 0; i < n && !proper; ++i) {
            if (mask & (1u << i)) proper = below[mask & ~(1u << i)];
        }
        out.minimal.push_back(!proper);
    }
    return out;
}

void lemma_checks(Run& run, const GameSpec& spec, const Coloring& sigma) {
    const auto scan = scan_all(spec, sigma);
    const bool unweighted = spec.graph().unweighted();
    run.instance();
    for (std::size_t i = 0; i < scan.moves.size(); ++i) {
        const JointMove& m = scan.moves[i];
        if (scan.minimal[i]) {
            const auto p1 = check_color_set_preserved(spec, sigma, m, Preconditions::Assume);
            if (p1.colors_preserved != Check::NotApplicable) run.check();
            if (p1.acyclic_case_cut_increases != Check::NotApplicable) run.check();
            if (p1.colors_preserved == Check::Fail) run.fail("minimal move changes its color set", spec, &sigma, &m);
            if (p1.acyclic_case_cut_increases == Check::Fail) {
                run.fail("minimal acyclic move does not increase the cut", spec, &sigma, &m);
            }
            const auto two = check_acyclic_two_colors(spec, sigma, m, Preconditions::Assume);
            if (two.at_most_two_colors != Check::NotApplicable) run.check();
            if (two.falsified()) run.fail("minimal acyclic coalition uses more than two colors", spec, &sigma, &m);
        }
        if (!unweighted || !scan.nash) continue;
        if (scan.minimal[i]) {
            const auto p3 = check_few_colors_cut_growth(spec, sigma, m, Preconditions::Assume);
            if (p3.applicable) run.check();
            if (p3.falsified()) run.fail("minimal move from an NE does not increase the cut", spec, &sigma, &m);
            for (auto u : m.coalition) {
                for (auto x : m.coalition) {
                    if (u == x) continue;
                    const auto l2 = check_swap_pair(spec, sigma, m, u, x, Preconditions::Assume);
                    if (!l2.applicable()) continue;
                    run.check();
                    if (l2.third_player_nonadjacent != Check::NotApplicable) run.check();
                    if (l2.falsified()) {
                        run.fail("pairwise color-degree lemma fails", spec, &sigma, &m,
                                 json{{"u", u},
                                      {"x", x},
                                      {"degree_equality", to_string(l2.degree_equality)},
                                      {"third_player_nonadjacent", to_string(l2.third_player_nonadjacent)}});
                    }
                }
            }
        }
        if (is_clique(spec.graph(), m.coalition.members())) {
            const auto t1 = check_clique_move_structure(spec, sigma, m, Preconditions::Assume);
            run.check();
            if (t1.falsified()) {
                run.fail("clique deviation lemma fails", spec, &sigma, &m,
                         json{{"class_sizes_equal", t1.class_sizes_equal},
                              {"cost_drop_is_one", t1.cost_drop_is_one},
                              {"indifference", t1.indifference}});
            }
            run.check();
            try {
                extract_rotation_subcoalition(spec, sigma, m, Preconditions::Assume);
            } catch (const FalsificationError& e) {
                run.fail(e.what(), spec, &sigma, &m);
            }
        }
    }
}

HarnessResult lemmas(const HarnessOptions& o) {
    const auto start = std::chrono::steady_clock::now();
    Run run("lemmas");
    const int n3 = limit(o, 5);
    const int n2 = limit(o, 6);
    for (auto [max_n, k] : {std::pair{n3, 3}, std::pair{n2, 2}}) {
        each_connected(max_n, [&](const Graph& g) {
            const GameSpec spec(g, k);
            for_each_coloring(g.node_count(), k, [&](const Coloring& sigma) {
                lemma_checks(run, spec, sigma);
                return true;
            });
        });
    }
    const std::uint64_t weighted = o.big ? 1000 : 150;
    const auto menu = default_weight_menu();
    for (std::uint64_t i = 0; i < weighted; ++i) {
        std::mt19937_64 rng(substream_seed(o.seed, i));
        const int n = std::uniform_int_distribution<int>(3, 5)(rng);
        const int k = std::uniform_int_distribution<int>(2, 3)(rng);
        const GameSpec spec(random_connected_graph(n, 0.7, rng, menu), k);
        for_each_coloring(n, k, [&](const Coloring& sigma) {
            lemma_checks(run, spec, sigma);
            return true;
        });
    }
    run.corpus("all colorings of connected unweighted graphs n <= " + std::to_string(n3) + " (k = 3) and n <= " +
               std::to_string(n2) + " (k = 2); " + std::to_string(weighted) +
               " random weighted graphs n in 3..5 for the weighted statements");
    return run.finish(start);
}

void dynamics_run(Run& run, const GameSpec& spec, const Coloring& start, const Policy& policy) {
    const auto m = static_cast<std::size_t>(spec.graph().edge_count());
    const bool unweighted = spec.graph().unweighted();
    const std::size_t cap = unweighted ? m + 1 : 100000;
    const auto trace = kcut::run(spec, start, policy, cap);
    run.instance();
    run.check();
    const auto potential = check_potential_candidate(spec, trace);
    json detail{{"policy", policy.to_string()}, {"status", to_string(trace.status)}, {"steps", trace.steps.size()}};
    if (trace.status != DynamicsStatus::Converged) run.fail("dynamics did not converge", spec, &start, nullptr, detail);
    if (unweighted && trace.steps.size() > m) run.fail("dynamics took more than m steps", spec, &start, nullptr, detail);
    if (!potential.potential_respected) run.fail("cut not strictly increasing", spec, &start, nullptr, detail);
    if (!revalidate(spec, trace)) run.fail("trace does not replay", spec, &start, nullptr, detail);
    if (trace.status == DynamicsStatus::Converged) {
        const auto reached = *policy.converged_concept();
        Concept clamped = reached;
        if (clamped.kind == ConceptKind::QStrong) clamped.param = std::min(clamped.param, spec.n());
        if (!check_concept(spec, trace.state(trace.steps.size()), clamped).verdict) {
            run.fail("converged state misses " + reached.to_string(), spec, &start, nullptr, detail);
        }
    }
}

HarnessResult dynamics_suite(const HarnessOptions& o) {
    const auto start = std::chrono::steady_clock::now();
    Run run("dynamics");
    const auto menu = default_weight_menu();
    for (std::uint64_t i = 0; i < 1000; ++i) {
        std::mt19937_64 rng(substream_seed(o.seed, i));
        const int n = std::uniform_int_distribution<int>(2, 9)(rng);
        const int k = std::uniform_int_distribution<int>(2, 4)(rng);
        const double p = std::uniform_real_distribution<double>(0.2, 0.9)(rng);
        const bool weighted = i % 2 == 1;
        const GameSpec spec(random_graph(n, p, rng, weighted ? menu : std::vector<Rational>{}), k);
        Policy policy = Policy::unilateral();
        if (i % 4 >= 2) policy = policy.with_random(rng());
        dynamics_run(run, spec, random_coloring(n, k, rng), policy);
    }
    auto strong_run = [&](const Graph& g, std::mt19937_64& rng, bool randomized) {
        const int k = std::uniform_int_distribution<int>(2, 3)(rng);
        const GameSpec spec(g, k);
        Policy policy = Policy::strong_minimal(5);
        if (randomized) policy = policy.with_random(rng());
        dynamics_run(run, spec, random_coloring(g.node_count(), k, rng), policy);
    };
    std::string corpus = "1000 random unilateral runs (half weighted, n 2..9, k 2..4); ";
    if (o.big) {
        std::mt19937_64 rng(o.seed);
        std::uint64_t count = 0;
        each_connected(limit(o, 6), [&](const Graph& g) { strong_run(g, rng, (count++ % 2) == 1); });
        corpus += "strong-minimal(5) from a random start on every connected graph n <= " + std::to_string(limit(o, 6));
    } else {
        for (std::uint64_t i = 0; i < 300; ++i) {
            std::mt19937_64 rng(substream_seed(o.seed ^ 0x5eed, i));
            const int n = std::uniform_int_distribution<int>(2, 7)(rng);
            const double p = std::uniform_real_distribution<double>(0.3, 0.9)(rng);
            strong_run(random_connected_graph(n, p, rng), rng, i % 2 == 1);
        }
        corpus += "300 strong-minimal(5) runs on random connected unweighted graphs n 2..7";
    }
    run.corpus(corpus);
    return run.finish(start);
}

HarnessResult minimal_cycle(const HarnessOptions& o) {
    const auto start = std::chrono::steady_clock::now();
    Run run("minimal-cycle");
    run.corpus("4-clique with three fixed anchors, weights from {1/2, 1, 2, 3, 4, 1/100, 100}, k = 3");
    const auto found = search_dynamics_cycle(default_weight_menu(), 7, o.seed, o.big ? 117649 : 20000);
    run.instance();
    if (!found) {
        run.fail("no cycling instance found within budget");
        return run.finish(start);
    }
    const auto& t = found->trace;
    auto fail = [&](const std::string& what) { run.fail(what, found->spec, &found->start, nullptr, cycle_to_json(*found)); };
    run.check();
    if (t.status != DynamicsStatus::Cycle || t.steps.size() > 10) fail("trace is not a short cycle");
    run.check();
    if (!revalidate(found->spec, t)) fail("trace does not replay");
    run.check();
    if (t.potential_decreases.empty()) fail("cycle without a cut decrease");
    run.check();
    for (std::size_t s = 0; s < t.steps.size(); ++s) {
        if (!is_minimal(found->spec, t.state(s), t.steps[s].move)) fail("non-minimal move in the cycle");
    }
    run.check();
    const bool shape = t.steps.size() == 5 && t.steps[0].move.coalition.size() == 4 &&
                       is_clique(found->spec.graph(), t.steps[0].move.coalition.members()) &&
                       std::all_of(t.steps.begin() + 1, t.steps.end(),
                                   [](const TraceStep& s) { return s.move.coalition.size() == 1; });
    if (!shape) fail("cycle is not one clique move followed by four single moves");
    run.check();
    const auto replay = trace_from_json(json::parse(trace_to_json(t).dump()));
    if (!revalidate(found->spec, replay)) fail("serialized trace does not replay");
    run.check();
    if (search_dynamics_cycle({Rational(1)}, 7, o.seed, 1000)) run.fail("unit weights produced a cycling instance");
    return run.finish(start);
}

HarnessResult cut_decrease(const HarnessOptions&) {
    const auto start = std::chrono::steady_clock::now();
    Run run("cut-decrease");
    run.corpus("padded 7-clique gadget, k = 7");
    std::optional<CutDecreaseInstance> built;
    try {
        built = reconstruct_cut_decrease_instance();
    } catch (const std::exception& e) {
        run.fail(e.what());
        return run.finish(start);
    }
    const CutDecreaseInstance& inst = *built;
    run.instance();
    const auto& spec = inst.spec;
    auto fail = [&](const std::string& what) { run.fail(what, spec, &inst.coloring, &inst.move); };
    run.check();
    if (!spec.graph().unweighted()) fail("gadget is weighted");
    run.check();
    if (!is_nash(spec, inst.coloring).verdict) fail("start is not an NE");
    run.check();
    if (!is_strong_improvement(spec, inst.coloring, inst.move) || !is_minimal(spec, inst.coloring, inst.move)) {
        fail("move is not a minimal strong improvement");
    }
    run.check();
    if (make_witness(spec, inst.coloring, inst.move).cut_delta() != Rational(-3)) fail("cut delta differs from -3");
    run.check();
    bool pattern = inst.move.coalition.size() == 12;
    for (std::size_t i = 0; pattern && i < 12; ++i) {
        const Color want = i < 6 ? static_cast<Color>(i + 2) : 1;
        pattern = inst.move.coalition[i] == static_cast<NodeId>(i < 6 ? i : i + 1) && inst.move.new_colors[i] == want;
    }
    if (!pattern) fail("move does not rotate a..f to 2..7 and h..o to 1");
    return run.finish(start);
}

HarnessResult separations(const HarnessOptions& o) {
    const auto start = std::chrono::steady_clock::now();
    Run run("separations");
    run.corpus("random graphs n <= 10 driven to the inner concept by dynamics");
    const std::pair<SeparationKind, int> kinds[] = {
        {SeparationKind::NashNotTwoStrong, 2},
        {SeparationKind::TwoStrongNotLocal, 3},
        {SeparationKind::LocalNotKStrong, 3},
        {SeparationKind::TwoStrongNotStrong, 2},
    };
    for (auto [kind, k] : kinds) {
        run.instance();
        run.check();
        const auto w = search_separation(kind, 10, k, o.seed, o.big ? 2'000'000 : 200'000);
        if (!w) {
            run.fail("no " + to_string(kind) + " witness found within budget");
            continue;
        }
        if (!revalidate(*w)) run.fail(to_string(kind) + " witness does not revalidate", w->spec, &w->coloring);
        const auto loaded = separation_from_json(json::parse(separation_to_json(*w).dump()));
        if (!revalidate(loaded)) run.fail(to_string(kind) + " witness does not survive serialization", w->spec);
        if (w->spec.n() > 10) run.fail(to_string(kind) + " witness exceeds 10 nodes", w->spec, &w->coloring);
    }
    return run.finish(start);
}

}  // namespace

HarnessResult verify_theorems(const std::string& suite, const HarnessOptions& options) {
    if (suite == "optimum-5se") {
        return optimum_suite(suite, options, [&](const GameSpec& spec, const Coloring& sigma) {
            return is_q_strong(spec, sigma, std::min(5, spec.n()), options.budget);
        });
    }
    if (suite == "optimum-lse") {
        return optimum_suite(suite, options,
                             [](const GameSpec& spec, const Coloring& sigma) { return is_local_strong(spec, sigma); });
    }
    if (suite == "optimum-3se") return optimum_3se(options);
    if (suite == "containments") return containments(options);
    if (suite == "k2-lse-eq-2se") return k2_equivalence(options);
    if (suite == "degree-se") return degree_se(options);
    if (suite == "girth-se") return girth_se(options);
    if (suite == "lemmas") return lemmas(options);
    if (suite == "dynamics") return dynamics_suite(options);
    if (suite == "minimal-cycle") return minimal_cycle(options);
    if (suite == "cut-decrease") return cut_decrease(options);
    if (suite == "separations") return separations(options);
    throw std::invalid_argument("unknown suite '" + suite + "'");
}

json harness_to_json(const HarnessResult& r) {
    json failures = json::array();
    for (const auto& f : r.failures) failures.push_back(json::parse(f));
    return {{"suite", r.suite},
            {"corpus", r.corpus},
            {"verdict", r.passed()},
            {"counts", {{"instances", r.instances_checked}, {"checks", r.checks}}},
            {"failures", std::move(failures)},
            {"timing", {{"wall_seconds", r.wall_seconds}}}};
}

}  // namespace kcut
