#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "detail/cost_table.hpp"

namespace kcut::detail {

struct ScanStats {
    std::uint64_t coalitions = 0;
    std::uint64_t moves_tested = 0;
};

/// Nodes that can possibly gain: positive cost under sigma. A node whose
/// utility already equals its degree never strictly improves.
inline std::vector<NodeId> improvable_nodes(const GameSpec& spec, const CostTable& table) {
    std::vector<NodeId> out;
    for (NodeId u = 0; u < spec.n(); ++u) {
        if (table.cost(u) > 0) out.push_back(u);
    }
    return out;
}

/// Enumerates every movers-only strong improvement whose coalition has at
/// most `max_size` members drawn from `candidates` (ascending), ordered by
/// coalition size, then coalition (lexicographic), then color tuple
/// (lexicographic). `compatible(prefix, v)` filters coalitions while they
/// grow (pairwise locality); `visit(members, colors)` returns false to stop.
/// Nodes outside `candidates` are skipped, so callers must only drop nodes
/// that can never gain.
template <typename Compatible, typename Visit>
ScanStats scan_strong_improvements(const GameSpec& spec, const Coloring& sigma, const CostTable& table,
                                   std::span<const NodeId> candidates, int max_size, Compatible&& compatible,
                                   Visit&& visit) {
    const Graph& g = spec.graph();
    const int k = spec.k();
    ScanStats stats;
    std::vector<NodeId> members;
    std::vector<std::vector<Color>> viable;
    std::vector<std::size_t> pos;
    std::vector<Color> colors;
    bool stop = false;

    auto test_coalition = [&]() {
        ++stats.coalitions;
        const std::size_t s = members.size();
        viable.resize(s);
        for (std::size_t i = 0; i < s; ++i) {
            const NodeId u = members[i];
            viable[i].clear();
            for (Color c = 1; c <= k; ++c) {
                if (c == sigma[u]) continue;
                std::int64_t bound = table.at(u, c);
                for (std::size_t j = 0; j < s; ++j) {
                    if (j != i && sigma[members[j]] == c) bound -= g.scaled_weight(u, members[j]);
                }
                if (bound < table.cost(u)) viable[i].push_back(c);
            }
            if (viable[i].empty()) return;
        }
        pos.assign(s, 0);
        colors.resize(s);
        while (true) {
            for (std::size_t i = 0; i < s; ++i) colors[i] = viable[i][pos[i]];
            ++stats.moves_tested;
            if (improves_all(g, sigma, table, members, colors) && !visit(std::span<const NodeId>(members),
                                                                         std::span<const Color>(colors))) {
                stop = true;
                return;
            }
            std::size_t i = s;
            while (i > 0) {
                --i;
                if (++pos[i] < viable[i].size()) break;
                pos[i] = 0;
                if (i == 0) return;
            }
        }
    };

    // Depth-limited DFS per target size keeps the size-major order.
    auto grow = [&](auto&& self, std::size_t start, int target) -> void {
        if (static_cast<int>(members.size()) == target) {
            test_coalition();
            return;
        }
        for (std::size_t idx = start; idx < candidates.size() && !stop; ++idx) {
            const NodeId v = candidates[idx];
            if (!compatible(std::span<const NodeId>(members), v)) continue;
            members.push_back(v);
            self(self, idx + 1, target);
            members.pop_back();
        }
    };
    for (int size = 1; size <= max_size && !stop; ++size) grow(grow, 0, size);
    return stats;
}

inline auto any_coalition() {
    return [](std::span<const NodeId>, NodeId) { return true; };
}

}  // namespace kcut::detail
