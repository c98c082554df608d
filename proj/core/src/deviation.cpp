#include "kcut/deviation.hpp"

#include <algorithm>
#include <stdexcept>

#include "detail/cost_table.hpp"
#include "kcut/errors.hpp"
#include "kcut/report_json.hpp"

namespace kcut {

using detail::CostTable;

void validate_move(const GameSpec& spec, const Coloring& sigma, const JointMove& m) {
    spec.validate(sigma);
    m.coalition.validate_for(spec.graph());
    if (m.new_colors.size() != m.coalition.size()) {
        throw std::invalid_argument("move has " + std::to_string(m.new_colors.size()) + " colors for " +
                                    std::to_string(m.coalition.size()) + " members");
    }
    for (std::size_t i = 0; i < m.coalition.size(); ++i) {
        spec.check_color(m.new_colors[i]);
        if (m.new_colors[i] == sigma[m.coalition[i]]) {
            throw std::invalid_argument("member " + std::to_string(m.coalition[i]) + " keeps color " +
                                        std::to_string(m.new_colors[i]) + "; every member must move");
        }
    }
}

Coloring apply_move(const Coloring& sigma, const JointMove& m) {
    if (m.new_colors.size() != m.coalition.size()) throw std::invalid_argument("move arity mismatch");
    Coloring out = sigma;
    for (std::size_t i = 0; i < m.coalition.size(); ++i) {
        const NodeId v = m.coalition[i];
        if (v >= static_cast<NodeId>(sigma.size())) throw std::out_of_range("move member outside coloring");
        if (sigma[v] == m.new_colors[i]) {
            throw std::invalid_argument("member " + std::to_string(v) + " does not change color");
        }
        out.set(v, m.new_colors[i]);
    }
    return out;
}

JointMove inverse_move(const Coloring& sigma, const JointMove& m) {
    JointMove inv{m.coalition, {}};
    inv.new_colors.reserve(m.coalition.size());
    for (auto v : m.coalition) inv.new_colors.push_back(sigma[v]);
    return inv;
}

DeviationWitness make_witness(const GameSpec& spec, const Coloring& sigma, const JointMove& m) {
    validate_move(spec, sigma, m);
    const Coloring after = apply_move(sigma, m);
    DeviationWitness w{m, {}, {}, cut_value(spec, sigma), cut_value(spec, after)};
    for (auto v : m.coalition) {
        w.utilities_before.push_back(utility(spec, sigma, v));
        w.utilities_after.push_back(utility(spec, after, v));
    }
    return w;
}

bool revalidate(const GameSpec& spec, const Coloring& sigma, const DeviationWitness& w) {
    std::optional<DeviationWitness> made;
    try {
        made = make_witness(spec, sigma, w.move);
    } catch (const std::exception&) {
        return false;
    }
    const DeviationWitness& fresh = *made;
    if (fresh.utilities_before != w.utilities_before || fresh.utilities_after != w.utilities_after ||
        fresh.cut_before != w.cut_before || fresh.cut_after != w.cut_after) {
        return false;
    }
    for (std::size_t i = 0; i < w.utilities_before.size(); ++i) {
        if (!(w.utilities_after[i] > w.utilities_before[i])) return false;
    }
    return true;
}

bool is_strong_improvement(const GameSpec& spec, const Coloring& sigma, const JointMove& m) {
    validate_move(spec, sigma, m);
    CostTable table(spec, sigma);
    return detail::improves_all(spec.graph(), sigma, table, m.coalition.members(), m.new_colors);
}

std::optional<JointMove> find_strong_improvement(const GameSpec& spec, const Coloring& sigma, const Coalition& c) {
    spec.validate(sigma);
    c.validate_for(spec.graph());
    const int k = spec.k();
    CostTable table(spec, sigma);
    const auto members = c.members();
    for (auto v : members) {
        if (table.cost(v) == 0) return std::nullopt;
    }
    std::vector<Color> colors(members.size());
    // Odometer over colors 1..k skipping each member's current color.
    auto first_other = [&](NodeId v, Color from) {
        Color col = from;
        while (col <= k && col == sigma[v]) ++col;
        return col;
    };
    for (std::size_t i = 0; i < members.size(); ++i) colors[i] = first_other(members[i], 1);
    while (true) {
        if (detail::improves_all(spec.graph(), sigma, table, members, colors)) {
            return JointMove{c, colors};
        }
        std::size_t i = members.size();
        while (true) {
            if (i == 0) return std::nullopt;
            --i;
            Color next = first_other(members[i], colors[i] + 1);
            if (next <= k) {
                colors[i] = next;
                break;
            }
            colors[i] = first_other(members[i], 1);
        }
    }
}

namespace {

// Branch and bound over stay/recolor decisions for the members of a
// coalition. A mover's final cost is at least the weight towards its new
// color from nodes whose final color is already fixed, so once that lower
// bound reaches its current cost the branch is dead.
class SubsetSearch {
public:
    SubsetSearch(const GameSpec& spec, const Coloring& sigma, const Coalition& c, bool proper_only)
        : g_(spec.graph()),
          k_(spec.k()),
          sigma_(sigma),
          table_(spec, sigma),
          members_(c.members().begin(), c.members().end()),
          proper_only_(proper_only),
          final_(members_.size(), 0) {
        // Weight towards color c from outside the coalition only.
        const std::size_t s = members_.size();
        outside_.assign(s * static_cast<std::size_t>(k_ + 1), 0);
        for (std::size_t i = 0; i < s; ++i) {
            for (Color col = 1; col <= k_; ++col) {
                std::int64_t w = table_.at(members_[i], col);
                for (std::size_t j = 0; j < s; ++j) {
                    if (j != i && sigma_[members_[j]] == col) w -= g_.scaled_weight(members_[i], members_[j]);
                }
                outside_[i * static_cast<std::size_t>(k_ + 1) + col] = w;
            }
        }
    }

    std::optional<JointMove> run() {
        if (dfs(0, 0)) {
            std::vector<NodeId> movers;
            std::vector<Color> colors;
            for (std::size_t i = 0; i < members_.size(); ++i) {
                if (final_[i] != sigma_[members_[i]]) {
                    movers.push_back(members_[i]);
                    colors.push_back(final_[i]);
                }
            }
            return JointMove{Coalition(std::move(movers)), std::move(colors)};
        }
        return std::nullopt;
    }

private:
    bool moving(std::size_t i) const { return final_[i] != sigma_[members_[i]]; }

    // Lower bound on member i's final cost given the first `decided` decisions.
    std::int64_t lower_bound(std::size_t i, std::size_t decided) const {
        const Color col = final_[i];
        std::int64_t value = outside_[i * static_cast<std::size_t>(k_ + 1) + col];
        for (std::size_t j = 0; j < decided; ++j) {
            if (j != i && final_[j] == col) value += g_.scaled_weight(members_[i], members_[j]);
        }
        return value;
    }

    bool feasible(std::size_t depth) const {
        const std::size_t decided = depth + 1;
        for (std::size_t j = 0; j < decided; ++j) {
            if (!moving(j)) continue;
            if (j != depth && g_.scaled_weight(members_[j], members_[depth]) == 0) continue;
            if (lower_bound(j, decided) >= table_.cost(members_[j])) return false;
        }
        return true;
    }

    bool dfs(std::size_t depth, std::size_t movers) {
        const std::size_t s = members_.size();
        if (depth == s) return movers > 0 && (!proper_only_ || movers < s);
        const NodeId v = members_[depth];
        // Stay first: keeps the found subset small.
        const bool must_stay = proper_only_ && depth + 1 == s && movers == depth;
        final_[depth] = sigma_[v];
        if (feasible(depth) && dfs(depth + 1, movers)) return true;
        if (must_stay || table_.cost(v) == 0) return false;
        for (Color col = 1; col <= k_; ++col) {
            if (col == sigma_[v]) continue;
            final_[depth] = col;
            if (feasible(depth) && dfs(depth + 1, movers + 1)) return true;
        }
        final_[depth] = sigma_[v];
        return false;
    }

    const Graph& g_;
    int k_;
    const Coloring& sigma_;
    CostTable table_;
    std::vector<NodeId> members_;
    bool proper_only_;
    std::vector<Color> final_;
    std::vector<std::int64_t> outside_;
};

}  // namespace

std::optional<JointMove> find_improving_subcoalition(const GameSpec& spec, const Coloring& sigma, const Coalition& c,
                                                     bool proper_only) {
    spec.validate(sigma);
    c.validate_for(spec.graph());
    return SubsetSearch(spec, sigma, c, proper_only).run();
}

bool is_minimal(const GameSpec& spec, const Coloring& sigma, const JointMove& m, MinimalityMode mode) {
    if (!is_strong_improvement(spec, sigma, m)) {
        throw PreconditionError("is_minimal: the move is not a strong improvement");
    }
    const std::size_t s = m.coalition.size();
    if (s == 1) return true;
    if (mode == MinimalityMode::AnyDeviation) {
        return !find_improving_subcoalition(spec, sigma, m.coalition, true).has_value();
    }
    if (s > 24) throw BudgetExceeded("restriction minimality over more than 2^24 subsets");
    CostTable table(spec, sigma);
    std::vector<NodeId> sub;
    std::vector<Color> colors;
    const std::uint32_t full = (1u << s) - 1;
    for (std::uint32_t mask = 1; mask < full; ++mask) {
        sub.clear();
        colors.clear();
        for (std::size_t i = 0; i < s; ++i) {
            if (mask & (1u << i)) {
                sub.push_back(m.coalition[i]);
                colors.push_back(m.new_colors[i]);
            }
        }
        if (detail::improves_all(spec.graph(), sigma, table, sub, colors)) return false;
    }
    return true;
}

std::string to_string(Check c) {
    switch (c) {
        case Check::Pass: return "pass";
        case Check::Fail: return "fail";
        case Check::NotApplicable: return "n/a";
    }
    return "?";
}

namespace {

Check check_of(bool ok) { return ok ? Check::Pass : Check::Fail; }

bool is_nash_profile(const GameSpec& spec, const Coloring& sigma) {
    CostTable table(spec, sigma);
    for (NodeId u = 0; u < spec.n(); ++u) {
        for (Color c = 1; c <= spec.k(); ++c) {
            if (table.at(u, c) < table.cost(u)) return false;
        }
    }
    return true;
}

void require_unweighted(const GameSpec& spec, const char* who) {
    if (!spec.graph().unweighted()) {
        throw PreconditionError(std::string(who) + " is defined for unweighted graphs only");
    }
}

void require_nash(const GameSpec& spec, const Coloring& sigma, const char* who) {
    if (!is_nash_profile(spec, sigma)) throw PreconditionError(std::string(who) + ": sigma is not a Nash equilibrium");
}

void require_minimal(const GameSpec& spec, const Coloring& sigma, const JointMove& m, const char* who) {
    if (!is_strong_improvement(spec, sigma, m)) {
        throw PreconditionError(std::string(who) + ": the move is not a strong improvement");
    }
    if (!is_minimal(spec, sigma, m)) throw PreconditionError(std::string(who) + ": the move is not minimal");
}

void require_clique_improvement(const GameSpec& spec, const Coloring& sigma, const JointMove& m, const char* who) {
    require_unweighted(spec, who);
    require_nash(spec, sigma, who);
    if (!is_clique(spec.graph(), m.coalition.members())) {
        throw PreconditionError(std::string(who) + ": the coalition is not a clique");
    }
    if (!is_strong_improvement(spec, sigma, m)) {
        throw PreconditionError(std::string(who) + ": the move is not a strong improvement");
    }
}

}  // namespace

ColorSetReport check_color_set_preserved(const GameSpec& spec, const Coloring& sigma, const JointMove& m, Preconditions pre) {
    if (pre == Preconditions::Verify) {
        require_minimal(spec, sigma, m, "check_color_set_preserved");
    } else {
        validate_move(spec, sigma, m);
    }
    ColorSetReport r;
    const Coloring after = apply_move(sigma, m);
    if (m.coalition.size() >= 2) {
        r.colors_preserved = check_of(coalition_colors(sigma, m.coalition) == coalition_colors(after, m.coalition));
    }
    if (is_acyclic(induced_subgraph(spec.graph(), m.coalition))) {
        r.acyclic_case_cut_increases = check_of(cut_value(spec, after) > cut_value(spec, sigma));
    }
    return r;
}

AcyclicColorsReport check_acyclic_two_colors(const GameSpec& spec, const Coloring& sigma, const JointMove& m,
                                             Preconditions pre) {
    if (pre == Preconditions::Verify) {
        require_minimal(spec, sigma, m, "check_acyclic_two_colors");
    } else {
        validate_move(spec, sigma, m);
    }
    AcyclicColorsReport r;
    if (m.coalition.size() > 2 && is_acyclic(induced_subgraph(spec.graph(), m.coalition))) {
        r.at_most_two_colors = check_of(coalition_colors(sigma, m.coalition).size() <= 2);
    }
    return r;
}

SwapPairReport check_swap_pair(const GameSpec& spec, const Coloring& sigma, const JointMove& m, NodeId u, NodeId x,
                          Preconditions pre) {
    require_unweighted(spec, "check_swap_pair");
    const int iu = m.coalition.index_of(u);
    const int ix = m.coalition.index_of(x);
    if (iu < 0 || ix < 0) throw PreconditionError("check_swap_pair: u and x must be coalition members");
    if (pre == Preconditions::Verify) {
        require_nash(spec, sigma, "check_swap_pair");
        require_minimal(spec, sigma, m, "check_swap_pair");
    } else {
        validate_move(spec, sigma, m);
    }
    const Graph& g = spec.graph();
    SwapPairReport r;
    const Color sx = sigma[x];
    r.colors_differ = sigma[u] != sx;
    r.moves_to_partner_color = m.new_colors[iu] == sx;
    std::vector<NodeId> same;
    for (auto y : m.coalition) {
        if (y != u && g.scaled_weight(u, y) != 0 && sigma[y] == sx) same.push_back(y);
    }
    r.partner_is_unique = same.size() == 1 && same.front() == x;
    if (!r.applicable()) return r;

    r.degree_equality = check_of(color_degree(spec, sigma, u, sigma[u]) == color_degree(spec, sigma, u, sx));
    bool any_third = false;
    bool all_nonadjacent = true;
    for (std::size_t i = 0; i < m.coalition.size(); ++i) {
        const NodeId v = m.coalition[i];
        if (v == u || v == x) continue;
        if (sigma[v] != sx && m.new_colors[i] == sx) {
            any_third = true;
            if (g.scaled_weight(u, v) != 0) all_nonadjacent = false;
        }
    }
    if (any_third) r.third_player_nonadjacent = check_of(all_nonadjacent);
    return r;
}

CliqueMoveReport check_clique_move_structure(const GameSpec& spec, const Coloring& sigma, const JointMove& m, Preconditions pre) {
    if (pre == Preconditions::Verify) {
        require_clique_improvement(spec, sigma, m, "check_clique_move_structure");
    } else {
        require_unweighted(spec, "check_clique_move_structure");
        validate_move(spec, sigma, m);
    }
    const Coloring after = apply_move(sigma, m);
    CostTable before_table(spec, sigma);
    CostTable after_table(spec, after);
    CliqueMoveReport r;
    r.class_sizes_equal = true;
    for (Color c = 1; c <= spec.k(); ++c) {
        if (color_class(sigma, m.coalition, c).size() != color_class(after, m.coalition, c).size()) {
            r.class_sizes_equal = false;
        }
    }
    const std::int64_t unit = spec.graph().scale();
    r.cost_drop_is_one = true;
    r.indifference = true;
    for (std::size_t i = 0; i < m.coalition.size(); ++i) {
        const NodeId u = m.coalition[i];
        if (before_table.cost(u) - after_table.cost(u) != unit) r.cost_drop_is_one = false;
        if (before_table.cost(u) != before_table.at(u, m.new_colors[i])) r.indifference = false;
    }
    return r;
}

std::vector<NodeId> extract_rotation_subcoalition(const GameSpec& spec, const Coloring& sigma, const JointMove& m,
                                                  Preconditions pre) {
    if (pre == Preconditions::Verify) {
        require_clique_improvement(spec, sigma, m, "extract_rotation_subcoalition");
    } else {
        require_unweighted(spec, "extract_rotation_subcoalition");
        validate_move(spec, sigma, m);
    }
    auto fail = [&](const std::string& why) {
        throw FalsificationError("rotation extraction: " + why, falsification_witness_json(spec, sigma, m));
    };
    std::vector<std::size_t> walk{0};
    while (true) {
        const Color next_color = m.new_colors[walk.back()];
        auto seen = std::find_if(walk.begin(), walk.end(),
                                 [&](std::size_t idx) { return sigma[m.coalition[idx]] == next_color; });
        if (seen != walk.end()) {
            walk.erase(walk.begin(), seen);
            break;
        }
        // The lowest member whose old color is the color just taken.
        std::size_t found = m.coalition.size();
        for (std::size_t i = 0; i < m.coalition.size(); ++i) {
            if (sigma[m.coalition[i]] == next_color) {
                found = i;
                break;
            }
        }
        if (found == m.coalition.size()) fail("no member previously held color " + std::to_string(next_color));
        walk.push_back(found);
    }
    std::vector<NodeId> cycle;
    std::vector<std::pair<NodeId, Color>> sub;
    for (auto idx : walk) {
        cycle.push_back(m.coalition[idx]);
        sub.emplace_back(m.coalition[idx], m.new_colors[idx]);
    }
    std::sort(sub.begin(), sub.end());
    std::vector<NodeId> sub_members;
    std::vector<Color> sub_colors;
    for (auto& [v, c] : sub) {
        sub_members.push_back(v);
        sub_colors.push_back(c);
    }
    const JointMove restricted{Coalition(std::move(sub_members)), std::move(sub_colors)};
    if (!is_strong_improvement(spec, sigma, restricted)) fail("the rotation does not improve on its own");
    return cycle;
}

FewColorsReport check_few_colors_cut_growth(const GameSpec& spec, const Coloring& sigma, const JointMove& m, Preconditions pre) {
    require_unweighted(spec, "check_few_colors_cut_growth");
    if (pre == Preconditions::Verify) {
        require_nash(spec, sigma, "check_few_colors_cut_growth");
        require_minimal(spec, sigma, m, "check_few_colors_cut_growth");
    } else {
        validate_move(spec, sigma, m);
    }
    FewColorsReport r;
    const std::size_t used = coalition_colors(sigma, m.coalition).size();
    const std::size_t s = m.coalition.size();
    r.applicable = used == 2 || used + 1 == s || used == s;
    if (r.applicable) {
        r.cut_increases = check_of(cut_value(spec, apply_move(sigma, m)) > cut_value(spec, sigma));
    }
    return r;
}

}  // namespace kcut
