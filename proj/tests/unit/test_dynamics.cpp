#include <gtest/gtest.h>

#include <random>

#include "kcut/corpus.hpp"
#include "kcut/dynamics.hpp"
#include "kcut/search.hpp"

using namespace kcut;

namespace {

Coloring col(std::vector<Color> c) { return Coloring(std::move(c)); }

std::vector<Policy> all_policies() {
    return {Policy::unilateral(), Policy::strong_minimal(3), Policy::strong_any(3), Policy::clique_only(),
            Policy::unilateral().with_random(9), Policy::strong_minimal(5).with_random(9)};
}

}  // namespace

TEST(Policy, ParsesAndPrints) {
    for (const char* text : {"unilateral", "strong-minimal:5", "strong-any:2", "clique-only"}) {
        EXPECT_EQ(Policy::parse(text).to_string(), text);
    }
    EXPECT_THROW(Policy::parse("scripted"), std::invalid_argument);
    EXPECT_THROW(Policy::parse("strong-minimal:0"), std::invalid_argument);
    EXPECT_EQ(Policy::strong_minimal(5).converged_concept(), Concept::q_strong(5));
    EXPECT_EQ(Policy::clique_only().converged_concept(), Concept::local_strong(1));
    EXPECT_EQ(Policy::unilateral().converged_concept(), Concept::nash());
    EXPECT_FALSE(Policy::scripted({}).converged_concept().has_value());
}

TEST(Step, NoMoveFromAlternatingSquare) {
    const GameSpec spec(cycle_graph(4), 2);
    for (const auto& p : all_policies()) {
        EXPECT_FALSE(step(spec, col({1, 2, 1, 2}), p).has_value()) << p.to_string();
    }
}

TEST(Step, UnilateralPicksTheMiddleOfAMonochromaticPath) {
    // P3 with its middle node labeled 0.
    const GameSpec spec(star_graph(2), 2);
    EXPECT_EQ(step(spec, col({1, 1, 1}), Policy::unilateral()), JointMove::single(0, 2));
}

TEST(Step, UnilateralPlaysABestResponse) {
    // Node 0 sees colors 1, 1, 2, 3, 3 among its neighbors: best color is 2.
    const GameSpec spec(star_graph(5), 3);
    EXPECT_EQ(step(spec, col({1, 1, 1, 2, 3, 3}), Policy::unilateral()), JointMove::single(0, 2));
}

TEST(Step, StrongMinimalFindsACoalitionAtANash) {
    const GameSpec spec(cycle_graph(4), 2);
    const auto sigma = col({1, 2, 2, 1});
    ASSERT_TRUE(is_nash(spec, sigma).verdict);
    const auto m = step(spec, sigma, Policy::strong_minimal(5));
    ASSERT_TRUE(m.has_value());
    EXPECT_GE(m->coalition.size(), 2u);
    EXPECT_TRUE(is_minimal(spec, sigma, *m));
}

TEST(AdmissibleMoves, RespectThePolicy) {
    std::mt19937_64 rng(79);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = std::uniform_int_distribution<int>(2, 6)(rng);
        const GameSpec spec(random_graph(n, 0.6, rng), 3);
        const auto sigma = random_coloring(n, 3, rng);
        for (const auto& m : admissible_moves(spec, sigma, Policy::strong_minimal(4))) {
            ASSERT_LE(m.coalition.size(), 4u);
            ASSERT_TRUE(is_minimal(spec, sigma, m));
        }
        for (const auto& m : admissible_moves(spec, sigma, Policy::clique_only())) {
            ASSERT_TRUE(is_clique(spec.graph(), m.coalition.members()));
            ASSERT_TRUE(is_strong_improvement(spec, sigma, m));
        }
        const auto any = admissible_moves(spec, sigma, Policy::strong_any(2));
        const auto first = step(spec, sigma, Policy::strong_any(2));
        ASSERT_EQ(any.empty(), !first.has_value());
        if (first) {
            ASSERT_EQ(any.front(), *first);
        }
    }
}

TEST(Run, RejectsZeroSteps) {
    const GameSpec spec(path_graph(2), 2);
    EXPECT_THROW(run(spec, col({1, 1}), Policy::unilateral(), 0), std::invalid_argument);
}

TEST(Run, UnweightedUnilateralConvergesWithinEdgeCount) {
    std::mt19937_64 rng(83);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = std::uniform_int_distribution<int>(1, 10)(rng);
        const GameSpec spec(random_graph(n, 0.5, rng), std::uniform_int_distribution<int>(2, 4)(rng));
        const auto trace = run(spec, random_coloring(n, spec.k(), rng), Policy::unilateral(), 10000);
        ASSERT_EQ(trace.status, DynamicsStatus::Converged);
        ASSERT_LE(trace.steps.size(), spec.graph().edge_count());
        ASSERT_TRUE(trace.potential_decreases.empty());
        ASSERT_TRUE(check_potential_candidate(spec, trace).potential_respected);
        ASSERT_TRUE(is_nash(spec, trace.state(trace.steps.size())).verdict);
        ASSERT_TRUE(revalidate(spec, trace));
    }
}

TEST(Run, StrongMinimalFiveConvergesWithIncreasingCut) {
    std::mt19937_64 rng(89);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = std::uniform_int_distribution<int>(2, 7)(rng);
        const GameSpec spec(random_connected_graph(n, 0.5, rng), 3);
        const auto trace = run(spec, random_coloring(n, 3, rng), Policy::strong_minimal(5), 1000);
        ASSERT_EQ(trace.status, DynamicsStatus::Converged);
        const auto report = check_potential_candidate(spec, trace);
        ASSERT_TRUE(report.potential_respected);
        ASSERT_FALSE(report.falsified);
        ASSERT_TRUE(is_q_strong(spec, trace.state(trace.steps.size()), std::min(5, n)).verdict);
    }
}

TEST(Run, CliqueOnlyConvergesToLocalStrong) {
    std::mt19937_64 rng(97);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = std::uniform_int_distribution<int>(2, 7)(rng);
        const GameSpec spec(random_graph(n, 0.6, rng), 3);
        const auto trace = run(spec, random_coloring(n, 3, rng), Policy::clique_only(), 1000);
        ASSERT_EQ(trace.status, DynamicsStatus::Converged);
        ASSERT_TRUE(is_local_strong(spec, trace.state(trace.steps.size())).verdict);
    }
}

TEST(Run, IsDeterministicForAFixedSeed) {
    std::mt19937_64 rng(101);
    const GameSpec spec(random_graph(9, 0.5, rng, default_weight_menu()), 3);
    const auto start = random_coloring(9, 3, rng);
    for (const auto& p : all_policies()) {
        const auto a = run(spec, start, p, 500);
        const auto b = run(spec, start, p, 500);
        ASSERT_EQ(a.steps.size(), b.steps.size());
        for (std::size_t i = 0; i < a.steps.size(); ++i) {
            ASSERT_EQ(a.steps[i].move, b.steps[i].move);
        }
    }
}

TEST(Run, StepBudget) {
    const GameSpec spec(path_graph(6), 2);
    const auto trace = run(spec, Coloring(std::vector<Color>(6, 1)), Policy::unilateral(), 1);
    EXPECT_EQ(trace.status, DynamicsStatus::BudgetExhausted);
    EXPECT_EQ(trace.steps.size(), 1u);
}

TEST(Run, ScriptedMoves) {
    const GameSpec spec(path_graph(3), 2);
    const auto sigma = col({1, 1, 1});
    auto trace = run(spec, sigma, Policy::scripted({JointMove::single(0, 2)}), 10);
    EXPECT_EQ(trace.status, DynamicsStatus::ScriptExhausted);
    EXPECT_EQ(trace.steps.size(), 1u);

    // {0,1} is improving but not minimal, so the script is rejected.
    const GameSpec p3(path_graph(3), 3);
    trace = run(p3, sigma, Policy::scripted({JointMove{Coalition({0, 1}), {2, 3}}}), 10);
    EXPECT_EQ(trace.status, DynamicsStatus::ScriptRejected);
    EXPECT_TRUE(trace.steps.empty());
}

TEST(Run, CyclingWeightedInstance) {
    const auto found = search_dynamics_cycle(default_weight_menu(), 7, 1, 20000);
    ASSERT_TRUE(found.has_value());
    const auto& t = found->trace;
    EXPECT_EQ(t.status, DynamicsStatus::Cycle);
    ASSERT_LE(t.steps.size(), 10u);
    ASSERT_EQ(t.steps.size(), 5u);
    EXPECT_EQ(t.first_repeat_index, 0u);
    EXPECT_EQ(t.steps[0].move.coalition.size(), 4u);
    EXPECT_TRUE(is_clique(found->spec.graph(), t.steps[0].move.coalition.members()));
    for (std::size_t i = 1; i < 5; ++i) {
        EXPECT_EQ(t.steps[i].move.coalition.size(), 1u);
    }
    EXPECT_EQ(t.state(5), found->start);
    for (std::size_t i = 0; i < 5; ++i) {
        EXPECT_TRUE(is_minimal(found->spec, t.state(i), t.steps[i].move));
    }
    EXPECT_FALSE(t.potential_decreases.empty());
    const auto report = check_potential_candidate(found->spec, t);
    EXPECT_FALSE(report.potential_respected);
    EXPECT_FALSE(report.falsified);
    EXPECT_TRUE(revalidate(found->spec, t));
}

TEST(Revalidate, DetectsTamperedTraces) {
    const GameSpec spec(path_graph(5), 2);
    auto trace = run(spec, Coloring(std::vector<Color>(5, 1)), Policy::unilateral(), 100);
    ASSERT_TRUE(revalidate(spec, trace));
    auto bad_cut = trace;
    bad_cut.steps.back().cut += 1;
    EXPECT_FALSE(revalidate(spec, bad_cut));
    auto bad_status = trace;
    bad_status.status = DynamicsStatus::Cycle;
    EXPECT_FALSE(revalidate(spec, bad_status));
}
