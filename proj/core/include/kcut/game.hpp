#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "kcut/budget.hpp"
#include "kcut/graph.hpp"

namespace kcut {

using Color = int;

/// Strategy profile: one color in 1..k per node.
class Coloring {
public:
    Coloring() = default;
    explicit Coloring(std::vector<Color> colors) : colors_(std::move(colors)) {}

    std::size_t size() const noexcept { return colors_.size(); }
    Color operator[](NodeId v) const { return colors_[static_cast<std::size_t>(v)]; }
    void set(NodeId v, Color c) { colors_[static_cast<std::size_t>(v)] = c; }
    std::span<const Color> colors() const noexcept { return colors_; }

    /// Space separated, e.g. "1 2 1".
    std::string to_string() const;

    friend bool operator==(const Coloring&, const Coloring&) = default;
    friend auto operator<=>(const Coloring&, const Coloring&) = default;

private:
    std::vector<Color> colors_;
};

/// A max k-cut game: the graph plus the shared color set {1..k}.
class GameSpec {
public:
    /// Throws std::invalid_argument when k < 2.
    GameSpec(Graph graph, int k);

    const Graph& graph() const noexcept { return graph_; }
    int k() const noexcept { return k_; }
    int n() const noexcept { return graph_.node_count(); }

    /// Throws std::invalid_argument on wrong length or out-of-range color.
    void validate(const Coloring& sigma) const;
    void check_color(Color c) const;

private:
    Graph graph_;
    int k_;
};

Rational utility(const GameSpec& spec, const Coloring& sigma, NodeId u);
Rational cost(const GameSpec& spec, const Coloring& sigma, NodeId u);
Rational color_degree(const GameSpec& spec, const Coloring& sigma, NodeId u, Color i);
Rational cut_value(const GameSpec& spec, const Coloring& sigma);
Rational social_welfare(const GameSpec& spec, const Coloring& sigma);

/// Distinct colors used by the coalition, ascending.
std::vector<Color> coalition_colors(const Coloring& sigma, const Coalition& c);
/// Members of c colored i; possibly empty.
std::vector<NodeId> color_class(const Coloring& sigma, const Coalition& c, Color i);
/// Weight of monochromatic edges from u into c (u itself never counts).
Rational coalition_cost(const GameSpec& spec, const Coloring& sigma, NodeId u, const Coalition& c);

struct OptimalColoring {
    Coloring coloring;
    Rational cut;
    std::uint64_t search_nodes = 0;
};

/// Number of canonical colorings (node 0 fixed to 1, colors introduced in
/// order) the exact solver may visit: sum_{j<=k} S(n, j). Saturates.
std::uint64_t canonical_coloring_count(int n, int k);

/// Maximum cut by exhaustive canonical search with bound pruning. Returns
/// the lexicographically smallest maximizer. Throws BudgetExceeded when
/// canonical_coloring_count(n, k) > budget.
OptimalColoring optimal_coloring_exact(const GameSpec& spec, std::uint64_t budget = default_budget());

/// Iterated unilateral best responses from a seeded uniform start; the
/// result is always a Nash equilibrium.
Coloring local_search_coloring(const GameSpec& spec, std::uint64_t seed);

}  // namespace kcut
