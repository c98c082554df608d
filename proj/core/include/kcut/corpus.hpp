#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "kcut/game.hpp"

namespace kcut {

/// Visits every connected labeled graph on n nodes (all edge subsets with a
/// connectivity filter, no isomorphism reduction), in increasing order of
/// the edge-subset bitmask. The visitor returns false to stop. n <= 7.
/// Returns the number of graphs visited.
std::uint64_t for_each_connected_graph(int n, const std::function<bool(const Graph&)>& visit);

/// Every labeled tree on n nodes, one per Pruefer sequence (n^(n-2) of
/// them; a single node for n = 1).
std::uint64_t for_each_labeled_tree(int n, const std::function<bool(const Graph&)>& visit);

/// Every coloring of n nodes with colors 1..k, lexicographic.
std::uint64_t for_each_coloring(int n, int k, const std::function<bool(const Coloring&)>& visit);

Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph star_graph(int leaves);
Graph petersen_graph();

/// {1/2, 1, 2, 3, 4, 1/100, 100}: small weights plus a tiny and a huge one.
std::vector<Rational> default_weight_menu();

/// G(n, p) with edge weights drawn uniformly from `menu` (unit weights when
/// the menu is empty).
Graph random_graph(int n, double p, std::mt19937_64& rng, const std::vector<Rational>& menu = {});
/// Resamples until connected (n >= 1).
Graph random_connected_graph(int n, double p, std::mt19937_64& rng, const std::vector<Rational>& menu = {});
Coloring random_coloring(int n, int k, std::mt19937_64& rng);

}  // namespace kcut
