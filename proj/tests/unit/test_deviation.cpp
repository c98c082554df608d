#include <gtest/gtest.h>

#include <bit>
#include <random>

#include "kcut/corpus.hpp"
#include "kcut/deviation.hpp"
#include "kcut/errors.hpp"
#include "oracles.hpp"

using namespace kcut;

namespace {

Coloring col(std::vector<Color> c) { return Coloring(std::move(c)); }

JointMove joint(std::vector<NodeId> members, std::vector<Color> colors) {
    return JointMove{Coalition(std::move(members)), std::move(colors)};
}

// C4 0-1-2-3-0 with k = 2: (1,2,2,1) is an NE, and {0,1} can swap colors so
// both endpoints reach utility 2.
GameSpec square() { return GameSpec(cycle_graph(4), 2); }
Coloring square_ne() { return col({1, 2, 2, 1}); }
JointMove square_swap() { return joint({0, 1}, {2, 1}); }

// Every strong improvement with at most `max_size` members, found by
// brute force over movers-only recolorings.
std::vector<JointMove> all_improvements(const GameSpec& spec, const Coloring& sigma, int max_size) {
    std::vector<JointMove> out;
    for (const auto& c : enumerate_coalitions(spec.graph(), max_size)) {
        const int s = static_cast<int>(c.size());
        std::vector<Color> colors(s, 1);
        while (true) {
            bool movers = true;
            for (int i = 0; i < s; ++i) movers = movers && colors[i] != sigma[c[i]];
            if (movers) {
                JointMove m{c, colors};
                if (is_strong_improvement(spec, sigma, m)) out.push_back(m);
            }
            int i = s - 1;
            while (i >= 0 && colors[i] == spec.k()) colors[i--] = 1;
            if (i < 0) break;
            ++colors[i];
        }
    }
    return out;
}

}  // namespace

TEST(ApplyMove, FlipsExactlyTheCoalitionAndInverts) {
    const auto sigma = col({1, 2, 3, 1});
    const auto single = JointMove::single(2, 1);
    const auto after = apply_move(sigma, single);
    EXPECT_EQ(after, col({1, 2, 1, 1}));
    EXPECT_EQ(sigma, col({1, 2, 3, 1}));

    const auto m = joint({0, 3}, {2, 3});
    EXPECT_EQ(apply_move(apply_move(sigma, m), inverse_move(sigma, m)), sigma);
}

TEST(ValidateMove, RejectsNonMovers) {
    const GameSpec spec(path_graph(3), 3);
    const auto sigma = col({1, 2, 3});
    EXPECT_THROW(validate_move(spec, sigma, joint({0}, {1})), std::invalid_argument);
    EXPECT_THROW(validate_move(spec, sigma, joint({0}, {4})), std::invalid_argument);
    EXPECT_THROW(validate_move(spec, sigma, joint({0, 1}, {2})), std::invalid_argument);
    EXPECT_THROW(validate_move(spec, sigma, joint({5}, {2})), std::out_of_range);
    EXPECT_NO_THROW(validate_move(spec, sigma, joint({0, 2}, {2, 1})));
}

TEST(StrongImprovement, Examples) {
    const GameSpec k2(complete_graph(2), 2);
    EXPECT_TRUE(is_strong_improvement(k2, col({1, 1}), JointMove::single(0, 2)));

    const GameSpec c4 = square();
    for (const auto& m : {JointMove::single(0, 2), joint({0, 1}, {2, 1}), joint({0, 1, 2, 3}, {2, 1, 2, 1})}) {
        EXPECT_FALSE(is_strong_improvement(c4, col({1, 2, 1, 2}), m));
    }

    const GameSpec tri(complete_graph(3), 3);
    EXPECT_FALSE(is_strong_improvement(tri, col({1, 1, 2}), joint({0, 1}, {3, 2})));
}

TEST(FindStrongImprovement, Examples) {
    const GameSpec k2(complete_graph(2), 2);
    EXPECT_EQ(find_strong_improvement(k2, col({1, 1}), Coalition({0})), JointMove::single(0, 2));

    const GameSpec tri(complete_graph(3), 3);
    EXPECT_FALSE(find_strong_improvement(tri, col({1, 1, 2}), Coalition({0, 1})).has_value());

    const GameSpec c4 = square();
    for (const auto& c : enumerate_coalitions(c4.graph(), 4)) {
        EXPECT_FALSE(find_strong_improvement(c4, col({1, 2, 1, 2}), c).has_value());
    }
}

TEST(FindStrongImprovement, IsCompleteAgainstOracle) {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 300; ++trial) {
        const int n = std::uniform_int_distribution<int>(2, 6)(rng);
        const int k = std::uniform_int_distribution<int>(2, 3)(rng);
        const GameSpec spec(random_graph(n, 0.6, rng, trial % 2 ? default_weight_menu() : std::vector<Rational>{}),
                            k);
        const auto sigma = random_coloring(n, k, rng);
        const auto raw = oracle::colors_of(sigma);
        for (const auto& c : enumerate_coalitions(spec.graph(), std::min(n, 3))) {
            std::uint32_t mask = 0;
            for (auto v : c) mask |= 1u << v;
            const auto found = find_strong_improvement(spec, sigma, c);
            if (found) {
                ASSERT_TRUE(is_strong_improvement(spec, sigma, *found));
                ASSERT_TRUE(oracle::subset_can_improve(spec, raw, mask));
            }
            // The oracle lets members stay put, so its answer for c means the
            // movers among some subset of c improve.
            if (oracle::subset_can_improve(spec, raw, mask)) {
                bool some_subset = false;
                for (std::uint32_t sub = mask; sub && !some_subset; sub = (sub - 1) & mask) {
                    std::vector<NodeId> part;
                    for (int v = 0; v < n; ++v) {
                        if (sub & (1u << v)) part.push_back(v);
                    }
                    some_subset = find_strong_improvement(spec, sigma, Coalition(part)).has_value();
                }
                ASSERT_TRUE(some_subset);
            }
        }
    }
}

TEST(IsMinimal, Examples) {
    const GameSpec k2(complete_graph(2), 2);
    EXPECT_TRUE(is_minimal(k2, col({1, 1}), JointMove::single(0, 2)));

    // a=0 alone can already improve on a monochromatic P3.
    const GameSpec p3(path_graph(3), 3);
    const auto mono = col({1, 1, 1});
    const auto pair = joint({0, 1}, {2, 3});
    ASSERT_TRUE(is_strong_improvement(p3, mono, pair));
    EXPECT_FALSE(is_minimal(p3, mono, pair));

    EXPECT_TRUE(is_minimal(square(), square_ne(), square_swap()));
    EXPECT_THROW(is_minimal(square(), square_ne(), JointMove::single(0, 2)), PreconditionError);
}

TEST(IsMinimal, RestrictionModeIsWeaker) {
    // The restriction of the move to {0} is not improving, but 0 has a
    // different improving deviation of its own.
    const GameSpec p3(path_graph(3), 3);
    const auto sigma = col({1, 1, 1});
    const auto m = joint({0, 1}, {2, 3});
    EXPECT_FALSE(is_minimal(p3, sigma, m, MinimalityMode::AnyDeviation));
    EXPECT_FALSE(is_minimal(p3, sigma, m, MinimalityMode::Restriction));

    std::mt19937_64 rng(37);
    for (int trial = 0; trial < 150; ++trial) {
        const int n = std::uniform_int_distribution<int>(2, 6)(rng);
        const GameSpec spec(random_graph(n, 0.6, rng), 3);
        const auto s = random_coloring(n, 3, rng);
        for (const auto& mv : all_improvements(spec, s, 3)) {
            if (is_minimal(spec, s, mv, MinimalityMode::AnyDeviation)) {
                ASSERT_TRUE(is_minimal(spec, s, mv, MinimalityMode::Restriction));
            }
        }
    }
}

TEST(IsMinimal, MatchesNaiveSubsetOracle) {
    std::mt19937_64 rng(41);
    int minimal_seen = 0;
    int non_minimal_seen = 0;
    for (int trial = 0; trial < 250; ++trial) {
        const int n = std::uniform_int_distribution<int>(2, 6)(rng);
        const int k = std::uniform_int_distribution<int>(2, 3)(rng);
        const GameSpec spec(random_graph(n, 0.6, rng, trial % 2 ? default_weight_menu() : std::vector<Rational>{}),
                            k);
        const auto sigma = random_coloring(n, k, rng);
        const auto raw = oracle::colors_of(sigma);
        for (const auto& m : all_improvements(spec, sigma, 4)) {
            const std::vector<NodeId> members(m.coalition.begin(), m.coalition.end());
            const bool expected = oracle::is_minimal(spec, raw, members);
            ASSERT_EQ(is_minimal(spec, sigma, m), expected);
            (expected ? minimal_seen : non_minimal_seen)++;

            const auto sub = find_improving_subcoalition(spec, sigma, m.coalition, true);
            ASSERT_EQ(sub.has_value(), !expected);
            if (sub) {
                ASSERT_LT(sub->coalition.size(), m.coalition.size());
                for (auto v : sub->coalition) {
                    ASSERT_TRUE(m.coalition.contains(v));
                }
                ASSERT_TRUE(is_strong_improvement(spec, sigma, *sub));
            }
        }
    }
    EXPECT_GT(minimal_seen, 0);
    EXPECT_GT(non_minimal_seen, 0);
}

TEST(Witness, RevalidatesAndRejectsTampering) {
    auto w = make_witness(square(), square_ne(), square_swap());
    EXPECT_EQ(w.utilities_before, (std::vector<Rational>{1, 1}));
    EXPECT_EQ(w.utilities_after, (std::vector<Rational>{2, 2}));
    EXPECT_EQ(w.cut_delta(), Rational(2));
    EXPECT_TRUE(revalidate(square(), square_ne(), w));
    w.cut_after = Rational(3);
    EXPECT_FALSE(revalidate(square(), square_ne(), w));
}

TEST(MoveProperties, LocalityAndCutDecomposition) {
    std::mt19937_64 rng(43);
    for (int trial = 0; trial < 300; ++trial) {
        const int n = std::uniform_int_distribution<int>(2, 9)(rng);
        const int k = std::uniform_int_distribution<int>(2, 4)(rng);
        const GameSpec spec(random_graph(n, 0.4, rng, default_weight_menu()), k);
        const auto sigma = random_coloring(n, k, rng);
        std::vector<NodeId> members;
        std::vector<Color> colors;
        for (int v = 0; v < n; ++v) {
            if (std::bernoulli_distribution(0.3)(rng)) {
                members.push_back(v);
                colors.push_back(sigma[v] % k + 1);
            }
        }
        if (members.empty()) continue;
        const JointMove m{Coalition(members), colors};
        const auto after = apply_move(sigma, m);
        Rational half_sum;
        for (int w = 0; w < n; ++w) {
            half_sum += utility(spec, after, w) - utility(spec, sigma, w);
            bool touches = m.coalition.contains(w);
            for (const auto& nb : spec.graph().neighbors(w)) touches = touches || m.coalition.contains(nb.node);
            if (!touches) {
                ASSERT_EQ(utility(spec, after, w), utility(spec, sigma, w));
            }
        }
        ASSERT_EQ(cut_value(spec, after) - cut_value(spec, sigma), half_sum / 2);
        ASSERT_EQ(make_witness(spec, sigma, m).cut_delta(), half_sum / 2);
    }
}

TEST(ColorSetPreserved, SingletonIsNotApplicableAndSwapPreservesColors) {
    const GameSpec k2(complete_graph(2), 2);
    const auto r = check_color_set_preserved(k2, col({1, 1}), JointMove::single(0, 2));
    EXPECT_EQ(r.colors_preserved, Check::NotApplicable);
    EXPECT_EQ(r.acyclic_case_cut_increases, Check::Pass);

    const auto swap = check_color_set_preserved(square(), square_ne(), square_swap());
    EXPECT_EQ(swap.colors_preserved, Check::Pass);
    EXPECT_EQ(swap.acyclic_case_cut_increases, Check::Pass);
    EXPECT_FALSE(swap.falsified());

    EXPECT_THROW(check_color_set_preserved(square(), square_ne(), joint({0, 1, 2}, {2, 1, 1})), PreconditionError);
}

TEST(SwapPair, NotApplicableWhenHypothesesFail) {
    // u = 0, x = 1 in the swap: sigma(0)=1 != sigma(1)=2, sigma'(0)=2 == sigma(1),
    // and 1 is 0's only coalition neighbor colored 2.
    const auto r = check_swap_pair(square(), square_ne(), square_swap(), 0, 1);
    EXPECT_TRUE(r.applicable());
    EXPECT_EQ(r.degree_equality, Check::Pass);
    EXPECT_FALSE(r.falsified());

    const GameSpec p4(path_graph(4), 2);
    const auto sigma = col({1, 1, 2, 2});
    const auto m = joint({1, 2}, {2, 1});
    ASSERT_TRUE(is_strong_improvement(p4, sigma, m));
    const auto same = check_swap_pair(p4, sigma, m, 1, 1, Preconditions::Assume);
    EXPECT_FALSE(same.applicable());
    EXPECT_EQ(same.degree_equality, Check::NotApplicable);
}

TEST(SwapPair, RequiresPreconditions) {
    const GameSpec weighted(Graph(2, {{0, 1, 2}}), 2);
    EXPECT_THROW(check_swap_pair(weighted, col({1, 1}), JointMove::single(0, 2), 0, 0), PreconditionError);
    const GameSpec p3(path_graph(3), 2);
    EXPECT_THROW(check_swap_pair(p3, col({1, 1, 1}), JointMove::single(1, 2), 1, 1), PreconditionError);
}

TEST(CliqueMoveStructure, TwoCliqueSwap) {
    const auto r = check_clique_move_structure(square(), square_ne(), square_swap());
    EXPECT_TRUE(r.class_sizes_equal);
    EXPECT_TRUE(r.cost_drop_is_one);
    EXPECT_TRUE(r.indifference);
    EXPECT_FALSE(r.falsified());
}

TEST(CliqueMoveStructure, RejectsWeightedNonCliqueAndNonNash) {
    const GameSpec weighted(Graph(4, {{0, 1, 2}, {1, 2, 1}, {2, 3, 1}, {0, 3, 1}}), 2);
    EXPECT_THROW(check_clique_move_structure(weighted, square_ne(), square_swap()), PreconditionError);
    const GameSpec p3(path_graph(3), 3);
    EXPECT_THROW(check_clique_move_structure(p3, col({1, 2, 1}), joint({0, 2}, {2, 2})), PreconditionError);
    EXPECT_THROW(check_clique_move_structure(p3, col({1, 1, 1}), JointMove::single(1, 2)), PreconditionError);
}

TEST(Rotation, TwoCliqueSwapReturnsThePairInOrder) {
    EXPECT_EQ(extract_rotation_subcoalition(square(), square_ne(), square_swap()), (std::vector<NodeId>{0, 1}));
}

TEST(Rotation, ThreeCliqueDeviationFromSearchedInstance) {
    // Look for an NE on a 6-node graph with an improving 3-clique deviation.
    std::mt19937_64 rng(47);
    bool found = false;
    for (int trial = 0; trial < 20000 && !found; ++trial) {
        const GameSpec spec(random_graph(6, 0.7, rng), 3);
        const auto sigma = local_search_coloring(spec, rng());
        for (const auto& c : enumerate_x_local_coalitions(spec.graph(), 1, 3)) {
            if (c.size() != 3) continue;
            const auto m = find_strong_improvement(spec, sigma, c);
            if (!m) continue;
            found = true;
            const auto cycle = extract_rotation_subcoalition(spec, sigma, *m);
            ASSERT_GE(cycle.size(), 2u);
            ASSERT_LE(cycle.size(), coalition_colors(sigma, m->coalition).size());
            std::vector<NodeId> members;
            std::vector<Color> colors;
            for (auto v : Coalition::from_unsorted(cycle)) {
                members.push_back(v);
                colors.push_back(m->new_colors[m->coalition.index_of(v)]);
            }
            for (std::size_t i = 0; i < cycle.size(); ++i) {
                const NodeId u = cycle[i];
                const NodeId next = cycle[(i + 1) % cycle.size()];
                EXPECT_EQ(m->new_colors[m->coalition.index_of(u)], sigma[next]);
            }
            const JointMove sub{Coalition(members), colors};
            for (std::size_t i = 0; i < members.size(); ++i) {
                EXPECT_GT(utility(spec, apply_move(sigma, sub), members[i]), utility(spec, sigma, members[i]));
            }
            break;
        }
    }
    EXPECT_TRUE(found);
}

TEST(FewColorsCutGrowth, GateAndTwoColorCase) {
    const auto r = check_few_colors_cut_growth(square(), square_ne(), square_swap());
    EXPECT_TRUE(r.applicable);
    EXPECT_EQ(r.cut_increases, Check::Pass);

    // Five members using three colors: neither 2, |C|-1 nor |C|.
    const GameSpec spec(complete_graph(6), 3);
    const auto sigma = col({1, 1, 2, 2, 3, 3});
    const auto m = joint({0, 1, 2, 3, 4}, {2, 3, 1, 3, 1});
    const auto gate = check_few_colors_cut_growth(spec, sigma, m, Preconditions::Assume);
    EXPECT_FALSE(gate.applicable);
    EXPECT_EQ(gate.cut_increases, Check::NotApplicable);
}

TEST(AcyclicColors, SmallCasesAreNotApplicable) {
    const auto r = check_acyclic_two_colors(square(), square_ne(), square_swap());
    EXPECT_EQ(r.at_most_two_colors, Check::NotApplicable);
}
