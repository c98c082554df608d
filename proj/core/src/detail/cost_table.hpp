#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "kcut/game.hpp"

namespace kcut::detail {

/// Per-node weight towards each color under a fixed profile, in the graph's
/// scaled integer units. cost(u) == at(u, sigma(u)).
class CostTable {
public:
    CostTable(const GameSpec& spec, const Coloring& sigma);

    std::int64_t at(NodeId u, Color c) const noexcept { return colw_[static_cast<std::size_t>(u) * stride_ + c]; }
    std::int64_t cost(NodeId u) const noexcept { return cost_[static_cast<std::size_t>(u)]; }

private:
    std::size_t stride_;
    std::vector<std::int64_t> colw_;
    std::vector<std::int64_t> cost_;
};

/// Cost of members[i] after the joint recoloring, scaled units.
std::int64_t cost_after(const Graph& g, const Coloring& sigma, const CostTable& table,
                        std::span<const NodeId> members, std::span<const Color> new_colors, std::size_t i);

/// True iff every member's cost strictly drops (equivalently its utility
/// strictly rises). Members must be distinct; a member keeping its color is
/// evaluated like any other.
bool improves_all(const Graph& g, const Coloring& sigma, const CostTable& table, std::span<const NodeId> members,
                  std::span<const Color> new_colors);

}  // namespace kcut::detail
