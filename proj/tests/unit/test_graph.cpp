#include <gtest/gtest.h>

#include <random>
#include <set>

#include "kcut/corpus.hpp"
#include "oracles.hpp"

using namespace kcut;

namespace {

Graph p3() { return path_graph(3); }

std::vector<std::vector<NodeId>> members(const std::vector<Coalition>& cs) {
    std::vector<std::vector<NodeId>> out;
    for (const auto& c : cs) out.emplace_back(c.begin(), c.end());
    return out;
}

}  // namespace

TEST(Graph, RejectsMalformedEdges) {
    EXPECT_THROW(Graph(2, {{0, 0, 1}}), std::invalid_argument);
    EXPECT_THROW(Graph(2, {{0, 1, 1}, {1, 0, 1}}), std::invalid_argument);
    EXPECT_THROW(Graph(2, {{0, 2, 1}}), std::invalid_argument);
    EXPECT_THROW(Graph(2, {{0, 1, 0}}), std::invalid_argument);
    EXPECT_THROW(Graph(2, {{0, 1, Rational(-1, 2)}}), std::invalid_argument);
}

TEST(Graph, UnweightedFlagAndScaledWeights) {
    EXPECT_TRUE(complete_graph(4).unweighted());
    const Graph g(3, {{0, 1, Rational(1, 2)}, {1, 2, 3}});
    EXPECT_FALSE(g.unweighted());
    EXPECT_EQ(g.scale(), 2);
    EXPECT_EQ(g.scaled_weight(0, 1), 1);
    EXPECT_EQ(g.scaled_weight(2, 1), 6);
    EXPECT_EQ(g.scaled_weight(0, 2), 0);
    EXPECT_EQ(g.from_scaled(g.scaled_degree(1)), Rational(7, 2));
}

TEST(Degree, Examples) {
    const Graph triangle = complete_graph(3);
    for (int v = 0; v < 3; ++v) {
        EXPECT_EQ(degree(triangle, v), Rational(2));
    }
    EXPECT_EQ(degree(Graph(3, {{0, 1, 1}}), 2), Rational(0));
    const Graph k2(2, {{0, 1, 5}});
    EXPECT_EQ(degree(k2, 0), Rational(5));
    EXPECT_EQ(degree(k2, 1), Rational(5));
    EXPECT_THROW(degree(k2, 2), std::out_of_range);
}

TEST(MaxDegree, Examples) {
    EXPECT_EQ(max_degree(star_graph(4)), Rational(4));
    EXPECT_EQ(max_degree(cycle_graph(5)), Rational(2));
    EXPECT_EQ(max_degree(Graph(3, {{0, 1, Rational(1, 2)}, {1, 2, 3}})), Rational(7, 2));
    EXPECT_THROW(max_degree(Graph(0)), std::invalid_argument);
}

TEST(HopDistance, Examples) {
    EXPECT_EQ(hop_distance(p3(), 0, 2), 2);
    EXPECT_EQ(hop_distance(p3(), 1, 1), 0);
    const Graph two(4, {{0, 1, 1}, {2, 3, 1}});
    EXPECT_FALSE(hop_distance(two, 0, 3).has_value());
    EXPECT_THROW(hop_distance(p3(), 0, 3), std::out_of_range);
}

TEST(HopDistance, MatchesFloydWarshallAndIsAMetric) {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        const Graph g = random_graph(8, 0.3, rng);
        const auto ref = oracle::hop_distances(g);
        const auto mat = hop_distance_matrix(g);
        for (int u = 0; u < 8; ++u) {
            for (int v = 0; v < 8; ++v) {
                const auto d = hop_distance(g, u, v);
                ASSERT_EQ(d.value_or(-1), ref[u][v]);
                ASSERT_EQ(mat[u * 8 + v], ref[u][v]);
                ASSERT_EQ(d, hop_distance(g, v, u));
                for (int w = 0; w < 8; ++w) {
                    const auto a = hop_distance(g, u, w);
                    const auto b = hop_distance(g, w, v);
                    if (a && b) {
                        ASSERT_LE(d.value(), *a + *b);
                    }
                }
            }
        }
    }
}

TEST(Girth, Examples) {
    EXPECT_EQ(girth(cycle_graph(5)), 5);
    EXPECT_FALSE(girth(path_graph(6)).has_value());
    EXPECT_FALSE(girth(star_graph(5)).has_value());
    EXPECT_EQ(girth(petersen_graph()), 5);
    EXPECT_EQ(girth(complete_graph(4)), 3);
}

TEST(Girth, MatchesEdgeRemovalOracleAndAcyclicity) {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 300; ++trial) {
        const int n = std::uniform_int_distribution<int>(1, 9)(rng);
        const Graph g = random_graph(n, std::uniform_real_distribution<double>(0.1, 0.6)(rng), rng);
        ASSERT_EQ(girth(g), oracle::girth(g));
        ASSERT_EQ(!girth(g).has_value(), is_acyclic(g));
    }
}

TEST(IsAcyclic, Examples) {
    EXPECT_TRUE(is_acyclic(path_graph(5)));
    EXPECT_FALSE(is_acyclic(cycle_graph(3)));
    EXPECT_TRUE(is_acyclic(Graph(4)));
}

TEST(InducedSubgraph, Examples) {
    const Graph tri = induced_subgraph(complete_graph(4), Coalition({0, 2, 3}));
    EXPECT_EQ(tri.node_count(), 3);
    EXPECT_EQ(tri.edge_count(), 3u);

    const Graph ends = induced_subgraph(p3(), Coalition({0, 2}));
    EXPECT_EQ(ends.node_count(), 2);
    EXPECT_EQ(ends.edge_count(), 0u);

    const Graph g(4, {{0, 1, Rational(1, 3)}, {1, 2, 2}, {2, 3, Rational(5, 7)}});
    const Graph copy = induced_subgraph(g, Coalition({0, 1, 2, 3}));
    EXPECT_EQ(copy.edges(), g.edges());

    const Graph part = induced_subgraph(g, Coalition({1, 2, 3}));
    ASSERT_EQ(part.edge_count(), 2u);
    EXPECT_EQ(part.weight(0, 1), Rational(2));
    EXPECT_EQ(part.weight(1, 2), Rational(5, 7));
}

TEST(Coalition, Invariants) {
    EXPECT_THROW(Coalition(std::vector<NodeId>{}), std::invalid_argument);
    EXPECT_THROW(Coalition({2, 1}), std::invalid_argument);
    EXPECT_THROW(Coalition({1, 1}), std::invalid_argument);
    EXPECT_EQ(Coalition::from_unsorted({3, 0, 2}), Coalition({0, 2, 3}));
    EXPECT_THROW(Coalition({0, 5}).validate_for(p3()), std::out_of_range);
}

TEST(XLocalCoalitions, PathExamples) {
    const std::vector<std::vector<NodeId>> cliques{{0}, {0, 1}, {1}, {1, 2}, {2}};
    EXPECT_EQ(members(enumerate_x_local_coalitions(p3(), 1, 3)), cliques);
    const std::vector<std::vector<NodeId>> two{{0}, {0, 1}, {0, 1, 2}, {0, 2}, {1}, {1, 2}, {2}};
    EXPECT_EQ(members(enumerate_x_local_coalitions(p3(), 2, 3)), two);
}

TEST(XLocalCoalitions, CompleteGraphHasAllSubsets) {
    EXPECT_EQ(enumerate_x_local_coalitions(complete_graph(4), 1, 4).size(), 15u);
}

TEST(XLocalCoalitions, CliquesMatchBruteForceOracle) {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = std::uniform_int_distribution<int>(1, 8)(rng);
        const Graph g = random_graph(n, std::uniform_real_distribution<double>(0.2, 0.9)(rng), rng);
        const int max_size = std::uniform_int_distribution<int>(1, n)(rng);
        ASSERT_EQ(members(enumerate_x_local_coalitions(g, 1, max_size)), oracle::cliques(g, max_size));
    }
}

TEST(XLocalCoalitions, LargeLocalityGivesAllSubsetsOnConnectedGraphs) {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 30; ++trial) {
        const int n = std::uniform_int_distribution<int>(1, 7)(rng);
        const Graph g = random_connected_graph(n, 0.4, rng);
        EXPECT_EQ(enumerate_x_local_coalitions(g, n, n).size(), (1u << n) - 1);
        EXPECT_EQ(members(enumerate_x_local_coalitions(g, n, n)), members(enumerate_coalitions(g, n)));
    }
}

TEST(XLocalCoalitions, VisitorCanStopEarly) {
    int seen = 0;
    for_each_x_local_coalition(complete_graph(5), 1, 5, [&](const Coalition&) { return ++seen < 4; });
    EXPECT_EQ(seen, 4);
}

TEST(Coalitions, CountsAndOrder) {
    const Graph g3(3);
    EXPECT_EQ(members(enumerate_coalitions(g3, 1)), (std::vector<std::vector<NodeId>>{{0}, {1}, {2}}));
    EXPECT_EQ(enumerate_coalitions(g3, 3).size(), 7u);
    EXPECT_EQ(enumerate_coalitions(Graph(5), 2).size(), 15u);
    const auto all = members(enumerate_coalitions(Graph(5), 5));
    EXPECT_TRUE(std::is_sorted(all.begin(), all.end()));
    EXPECT_EQ(std::set<std::vector<NodeId>>(all.begin(), all.end()).size(), all.size());
}

TEST(Corpus, ConnectedGraphCounts) {
    // Connected labeled graphs on n nodes: 1, 1, 4, 38, 728, 26704.
    const std::vector<std::uint64_t> expected{1, 1, 4, 38, 728, 26704};
    for (int n = 1; n <= 6; ++n) {
        std::uint64_t count = 0;
        for_each_connected_graph(n, [&](const Graph& g) {
            EXPECT_TRUE(is_connected(g));
            ++count;
            return true;
        });
        EXPECT_EQ(count, expected[n - 1]) << "n = " << n;
    }
}

TEST(Corpus, LabeledTreesFollowCayley) {
    for (int n = 1; n <= 6; ++n) {
        std::uint64_t count = 0;
        for_each_labeled_tree(n, [&](const Graph& g) {
            EXPECT_TRUE(is_acyclic(g));
            EXPECT_TRUE(is_connected(g));
            ++count;
            return true;
        });
        std::uint64_t cayley = 1;
        for (int i = 0; i < n - 2; ++i) cayley *= n;
        EXPECT_EQ(count, cayley) << "n = " << n;
    }
}
