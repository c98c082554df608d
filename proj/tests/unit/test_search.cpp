#include <gtest/gtest.h>

#include "kcut/corpus.hpp"
#include "kcut/search.hpp"

using namespace kcut;

TEST(SeparationKind, NamesRoundTrip) {
    for (auto kind : {SeparationKind::NashNotTwoStrong, SeparationKind::TwoStrongNotLocal,
                      SeparationKind::LocalNotKStrong, SeparationKind::TwoStrongNotStrong}) {
        EXPECT_EQ(parse_separation_kind(to_string(kind)), kind);
    }
    EXPECT_THROW(parse_separation_kind("ne-not-se"), std::invalid_argument);
}

TEST(SearchSeparation, RejectsCoincidingConceptsForTwoColors) {
    EXPECT_THROW(search_separation(SeparationKind::LocalNotKStrong, 8, 2, 1, 100), std::invalid_argument);
    EXPECT_THROW(search_separation(SeparationKind::TwoStrongNotLocal, 8, 2, 1, 100), std::invalid_argument);
}

TEST(SearchSeparation, ZeroBudgetFindsNothing) {
    EXPECT_FALSE(search_separation(SeparationKind::NashNotTwoStrong, 6, 2, 1, 0).has_value());
}

struct KindCase {
    SeparationKind kind;
    int n_max;
    int k;
};

class SeparationSearch : public ::testing::TestWithParam<KindCase> {};

TEST_P(SeparationSearch, FindsAWitnessThatSurvivesSerialization) {
    const auto [kind, n_max, k] = GetParam();
    const auto w = search_separation(kind, n_max, k, 1, 200000);
    ASSERT_TRUE(w.has_value());
    EXPECT_LE(w->spec.n(), n_max);
    EXPECT_TRUE(w->inner.verdict);
    EXPECT_FALSE(w->outer.verdict);
    EXPECT_TRUE(revalidate(*w));
    const auto loaded = separation_from_json(json::parse(separation_to_json(*w).dump()));
    EXPECT_TRUE(revalidate(loaded));
    EXPECT_EQ(loaded.coloring, w->coloring);

    // The checkers, run fresh, agree.
    EXPECT_TRUE(check_concept(loaded.spec, loaded.coloring, inner_concept(kind, k)).verdict);
    EXPECT_FALSE(check_concept(loaded.spec, loaded.coloring, outer_concept(kind, k)).verdict);
}

INSTANTIATE_TEST_SUITE_P(AllKinds, SeparationSearch,
                         ::testing::Values(KindCase{SeparationKind::NashNotTwoStrong, 6, 2},
                                           KindCase{SeparationKind::TwoStrongNotLocal, 10, 3},
                                           KindCase{SeparationKind::LocalNotKStrong, 10, 3},
                                           KindCase{SeparationKind::TwoStrongNotStrong, 10, 2}));

TEST(SearchSeparation, TwoStrongNotLocalClassifiesIntoTheTwoStrongRegion) {
    const auto w = search_separation(SeparationKind::TwoStrongNotLocal, 10, 3, 1, 200000);
    ASSERT_TRUE(w.has_value());
    EXPECT_EQ(classify(w->spec, w->coloring).region, Region::TwoStrong);
}

TEST(SearchSeparation, NashNotTwoStrongWitnessSwapIsMinimal) {
    const auto w = search_separation(SeparationKind::NashNotTwoStrong, 6, 2, 3, 200000);
    ASSERT_TRUE(w.has_value());
    const auto& m = w->outer.witness->move;
    EXPECT_EQ(m.coalition.size(), 2u);
    EXPECT_TRUE(is_minimal(w->spec, w->coloring, m));
}

TEST(SearchDynamicsCycle, UnitWeightsAndTinyBudgetsFindNothing) {
    EXPECT_FALSE(search_dynamics_cycle({Rational(1)}, 7, 1, 1000000).has_value());
    EXPECT_FALSE(search_dynamics_cycle(default_weight_menu(), 7, 1, 0).has_value());
    EXPECT_FALSE(search_dynamics_cycle(default_weight_menu(), 6, 1, 20000).has_value());
}

TEST(SearchDynamicsCycle, ReplaysFromJson) {
    const auto found = search_dynamics_cycle(default_weight_menu(), 7, 5, 20000);
    ASSERT_TRUE(found.has_value());
    const auto j = json::parse(cycle_to_json(*found).dump());
    const auto spec = game_from_json(j.at("game"));
    const auto trace = trace_from_json(j.at("trace"));
    EXPECT_TRUE(revalidate(spec, trace));
    const auto replay = run(spec, coloring_from_json(j.at("start")), trace.policy, 10);
    EXPECT_EQ(replay.status, DynamicsStatus::Cycle);
    EXPECT_EQ(replay.steps.size(), trace.steps.size());
}

TEST(CutDecrease, ReconstructedInstance) {
    const auto inst = reconstruct_cut_decrease_instance();
    EXPECT_TRUE(inst.spec.graph().unweighted());
    EXPECT_EQ(inst.spec.k(), 7);
    EXPECT_TRUE(is_strong_improvement(inst.spec, inst.coloring, inst.move));
    EXPECT_TRUE(is_minimal(inst.spec, inst.coloring, inst.move));
    EXPECT_TRUE(is_nash(inst.spec, inst.coloring).verdict);
    EXPECT_EQ(make_witness(inst.spec, inst.coloring, inst.move).cut_delta(), Rational(-3));

    // a..f (0..5) go to colors 2..7, the attached players (7..12) to color 1.
    ASSERT_EQ(inst.move.coalition, Coalition({0, 1, 2, 3, 4, 5, 7, 8, 9, 10, 11, 12}));
    EXPECT_EQ(inst.move.new_colors, (std::vector<Color>{2, 3, 4, 5, 6, 7, 1, 1, 1, 1, 1, 1}));
    for (NodeId v = 0; v < 7; ++v) {
        EXPECT_EQ(inst.coloring[v], 1);
    }
    for (NodeId v = 7; v < 13; ++v) {
        EXPECT_EQ(inst.coloring[v], v - 5);
    }
    EXPECT_TRUE(is_clique(inst.spec.graph(), std::vector<NodeId>{0, 1, 2, 3, 4, 5, 6}));

    const auto trace = run(inst.spec, inst.coloring, Policy::scripted({inst.move}), 1);
    EXPECT_EQ(trace.potential_decreases, std::vector<std::size_t>{0});
}

TEST(SearchOptimumNotStrong, ChecksEveryOptimumOfSmallGraphs) {
    const auto probe = search_optimum_not_strong(6, 3, 1, 50);
    EXPECT_EQ(probe.graphs_examined, 50u);
    EXPECT_GE(probe.optima_examined, probe.graphs_examined);
    EXPECT_FALSE(probe.counterexample.has_value());
}

TEST(SearchOptimumNotStrong, RejectsOversizedEnumerations) {
    EXPECT_THROW(search_optimum_not_strong(13, 3, 1, 1), std::invalid_argument);
    EXPECT_THROW(search_optimum_not_strong(6, 1, 1, 1), std::invalid_argument);
}
