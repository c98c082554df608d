#include "detail/cost_table.hpp"

namespace kcut::detail {

CostTable::CostTable(const GameSpec& spec, const Coloring& sigma)
    : stride_(static_cast<std::size_t>(spec.k()) + 1),
      colw_(static_cast<std::size_t>(spec.n()) * stride_, 0),
      cost_(static_cast<std::size_t>(spec.n()), 0) {
    const Graph& g = spec.graph();
    for (const auto& e : g.edges()) {
        std::int64_t w = g.scaled_weight(e.u, e.v);
        colw_[static_cast<std::size_t>(e.u) * stride_ + sigma[e.v]] += w;
        colw_[static_cast<std::size_t>(e.v) * stride_ + sigma[e.u]] += w;
    }
    for (NodeId u = 0; u < spec.n(); ++u) cost_[u] = at(u, sigma[u]);
}

std::int64_t cost_after(const Graph& g, const Coloring& sigma, const CostTable& table,
                        std::span<const NodeId> members, std::span<const Color> new_colors, std::size_t i) {
    const NodeId u = members[i];
    const Color c = new_colors[i];
    std::int64_t value = table.at(u, c);
    for (std::size_t j = 0; j < members.size(); ++j) {
        if (j == i) continue;
        std::int64_t w = g.scaled_weight(u, members[j]);
        if (w == 0) continue;
        if (sigma[members[j]] == c) value -= w;
        if (new_colors[j] == c) value += w;
    }
    return value;
}

bool improves_all(const Graph& g, const Coloring& sigma, const CostTable& table, std::span<const NodeId> members,
                  std::span<const Color> new_colors) {
    for (std::size_t i = 0; i < members.size(); ++i) {
        if (cost_after(g, sigma, table, members, new_colors, i) >= table.cost(members[i])) return false;
    }
    return true;
}

}  // namespace kcut::detail
