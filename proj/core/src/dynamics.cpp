#include "kcut/dynamics.hpp"

#include <charconv>
#include <random>
#include <stdexcept>
#include <unordered_map>

#include "detail/scan.hpp"

namespace kcut {

std::string Policy::to_string() const {
    switch (mode) {
        case PolicyMode::Unilateral: return "unilateral";
        case PolicyMode::StrongMinimal: return "strong-minimal:" + std::to_string(max_coalition_size);
        case PolicyMode::StrongAny: return "strong-any:" + std::to_string(max_coalition_size);
        case PolicyMode::CliqueOnly: return "clique-only";
        case PolicyMode::Scripted: return "scripted";
    }
    return "?";
}

Policy Policy::parse(const std::string& text) {
    if (text == "unilateral") return unilateral();
    if (text == "clique-only") return clique_only();
    auto colon = text.find(':');
    if (colon != std::string::npos) {
        const std::string head = text.substr(0, colon);
        const std::string tail = text.substr(colon + 1);
        int q = 0;
        auto [ptr, ec] = std::from_chars(tail.data(), tail.data() + tail.size(), q);
        if (ec == std::errc{} && ptr == tail.data() + tail.size() && q >= 1) {
            if (head == "strong-minimal") return strong_minimal(q);
            if (head == "strong-any") return strong_any(q);
        }
    }
    throw std::invalid_argument("unknown policy '" + text +
                                "' (expected unilateral, strong-minimal:Q, strong-any:Q or clique-only)");
}

std::optional<Concept> Policy::converged_concept() const {
    switch (mode) {
        case PolicyMode::Unilateral: return Concept::nash();
        case PolicyMode::StrongMinimal:
        case PolicyMode::StrongAny: return Concept::q_strong(max_coalition_size);
        case PolicyMode::CliqueOnly: return Concept::local_strong(1);
        case PolicyMode::Scripted: return std::nullopt;
    }
    return std::nullopt;
}

std::string to_string(DynamicsStatus s) {
    switch (s) {
        case DynamicsStatus::Converged: return "converged";
        case DynamicsStatus::Cycle: return "cycle";
        case DynamicsStatus::BudgetExhausted: return "budget-exhausted";
        case DynamicsStatus::ScriptExhausted: return "script-exhausted";
        case DynamicsStatus::ScriptRejected: return "script-rejected";
    }
    return "?";
}

namespace {

JointMove to_move(std::span<const NodeId> members, std::span<const Color> colors) {
    return JointMove{Coalition(std::vector<NodeId>(members.begin(), members.end())),
                     std::vector<Color>(colors.begin(), colors.end())};
}

// Best responses of every player that can gain, by player then color.
std::vector<JointMove> unilateral_moves(const GameSpec& spec, const Coloring& sigma, bool first_only) {
    detail::CostTable table(spec, sigma);
    std::vector<JointMove> out;
    for (NodeId v = 0; v < spec.n(); ++v) {
        std::int64_t best = table.cost(v);
        for (Color c = 1; c <= spec.k(); ++c) best = std::min(best, table.at(v, c));
        if (best == table.cost(v)) continue;
        for (Color c = 1; c <= spec.k(); ++c) {
            if (table.at(v, c) != best) continue;
            out.push_back(JointMove::single(v, c));
            if (first_only) return out;
        }
    }
    return out;
}

std::vector<JointMove> coalition_moves(const GameSpec& spec, const Coloring& sigma, const Policy& policy,
                                       bool first_only) {
    const Graph& g = spec.graph();
    detail::CostTable table(spec, sigma);
    const auto candidates = detail::improvable_nodes(spec, table);
    std::vector<JointMove> out;
    auto visit = [&](std::span<const NodeId> members, std::span<const Color> colors) {
        JointMove m = to_move(members, colors);
        if (policy.mode == PolicyMode::StrongMinimal && !is_minimal(spec, sigma, m)) return true;
        out.push_back(std::move(m));
        return !first_only;
    };
    if (policy.mode == PolicyMode::CliqueOnly) {
        auto clique = [&](std::span<const NodeId> prefix, NodeId v) {
            for (auto u : prefix) {
                if (g.scaled_weight(u, v) == 0) return false;
            }
            return true;
        };
        detail::scan_strong_improvements(spec, sigma, table, candidates, spec.n(), clique, visit);
    } else {
        const int q = std::min(policy.max_coalition_size, spec.n());
        detail::scan_strong_improvements(spec, sigma, table, candidates, q, detail::any_coalition(), visit);
    }
    return out;
}

std::vector<JointMove> moves_at(const GameSpec& spec, const Coloring& sigma, const Policy& policy, bool first_only) {
    if (policy.mode == PolicyMode::Unilateral) return unilateral_moves(spec, sigma, first_only);
    return coalition_moves(spec, sigma, policy, first_only);
}

bool scripted_move_ok(const GameSpec& spec, const Coloring& sigma, const JointMove& m) {
    try {
        return is_strong_improvement(spec, sigma, m) && is_minimal(spec, sigma, m);
    } catch (const std::invalid_argument&) {
        return false;
    } catch (const std::out_of_range&) {
        return false;
    }
}

struct ColoringHash {
    std::size_t operator()(const Coloring& c) const noexcept {
        std::size_t h = 1469598103934665603ull;
        for (auto col : c.colors()) h = (h ^ static_cast<std::size_t>(col)) * 1099511628211ull;
        return h;
    }
};

}  // namespace

std::vector<JointMove> admissible_moves(const GameSpec& spec, const Coloring& sigma, const Policy& policy) {
    if (policy.mode == PolicyMode::Scripted) throw std::invalid_argument("scripted policies have no move set");
    spec.validate(sigma);
    return moves_at(spec, sigma, policy, false);
}

std::optional<JointMove> step(const GameSpec& spec, const Coloring& sigma, const Policy& policy,
                              std::size_t step_index) {
    spec.validate(sigma);
    if (policy.mode == PolicyMode::Scripted) {
        if (step_index >= policy.script.size()) return std::nullopt;
        const JointMove& m = policy.script[step_index];
        if (!scripted_move_ok(spec, sigma, m)) return std::nullopt;
        return m;
    }
    if (policy.mode != PolicyMode::Unilateral && policy.mode != PolicyMode::CliqueOnly &&
        policy.max_coalition_size < 1) {
        throw std::invalid_argument("max_coalition_size must be >= 1");
    }
    if (policy.selection == Selection::Lexicographic) {
        auto moves = moves_at(spec, sigma, policy, true);
        if (moves.empty()) return std::nullopt;
        return moves.front();
    }
    auto moves = moves_at(spec, sigma, policy, false);
    if (moves.empty()) return std::nullopt;
    std::mt19937_64 rng(substream_seed(policy.seed, step_index));
    std::uniform_int_distribution<std::size_t> pick(0, moves.size() - 1);
    return moves[pick(rng)];
}

DynamicsTrace run(const GameSpec& spec, const Coloring& sigma0, const Policy& policy, std::size_t max_steps) {
    if (max_steps < 1) throw std::invalid_argument("max_steps must be >= 1");
    spec.validate(sigma0);
    DynamicsTrace trace;
    trace.policy = policy;
    trace.initial = sigma0;
    trace.initial_cut = cut_value(spec, sigma0);
    std::unordered_map<Coloring, std::size_t, ColoringHash> seen{{sigma0, 0}};
    Coloring current = sigma0;
    Rational current_cut = trace.initial_cut;
    for (std::size_t t = 0;; ++t) {
        if (t == max_steps) {
            trace.status = DynamicsStatus::BudgetExhausted;
            break;
        }
        std::optional<JointMove> move;
        if (policy.mode == PolicyMode::Scripted) {
            if (t >= policy.script.size()) {
                trace.status = DynamicsStatus::ScriptExhausted;
                break;
            }
            if (!scripted_move_ok(spec, current, policy.script[t])) {
                trace.status = DynamicsStatus::ScriptRejected;
                break;
            }
            move = policy.script[t];
        } else {
            move = step(spec, current, policy, t);
            if (!move) {
                trace.status = DynamicsStatus::Converged;
                break;
            }
        }
        Coloring next = apply_move(current, *move);
        Rational next_cut = cut_value(spec, next);
        if (next_cut < current_cut) trace.potential_decreases.push_back(t);
        trace.steps.push_back(TraceStep{*move, next, next_cut});
        auto [it, inserted] = seen.emplace(next, t + 1);
        current = std::move(next);
        current_cut = next_cut;
        if (!inserted) {
            trace.status = DynamicsStatus::Cycle;
            trace.first_repeat_index = it->second;
            break;
        }
    }
    return trace;
}

PotentialReport check_potential_candidate(const GameSpec& spec, const DynamicsTrace& trace) {
    PotentialReport r;
    for (std::size_t t = 0; t < trace.steps.size(); ++t) {
        const Rational& before = trace.cut_at(t);
        const Rational& after = trace.steps[t].cut;
        if (after < before) r.decreases.push_back(t);
        if (!(after > before)) r.non_increases.push_back(t);
    }
    r.potential_respected = r.non_increases.empty();
    const Policy& p = trace.policy;
    const bool proved = p.mode == PolicyMode::Unilateral ||
                        (p.mode == PolicyMode::StrongMinimal && p.max_coalition_size <= 5 && spec.graph().unweighted());
    r.falsified = proved && !r.potential_respected;
    return r;
}

bool revalidate(const GameSpec& spec, const DynamicsTrace& trace) {
    try {
        spec.validate(trace.initial);
        if (trace.initial_cut != cut_value(spec, trace.initial)) return false;
        const Policy& p = trace.policy;
        std::vector<std::size_t> decreases;
        for (std::size_t t = 0; t < trace.steps.size(); ++t) {
            const Coloring& before = trace.state(t);
            const TraceStep& s = trace.steps[t];
            if (!is_strong_improvement(spec, before, s.move)) return false;
            if ((p.mode == PolicyMode::StrongMinimal || p.mode == PolicyMode::Scripted) &&
                !is_minimal(spec, before, s.move)) {
                return false;
            }
            if (p.mode == PolicyMode::CliqueOnly && !is_clique(spec.graph(), s.move.coalition.members())) return false;
            if ((p.mode == PolicyMode::StrongMinimal || p.mode == PolicyMode::StrongAny) &&
                static_cast<int>(s.move.coalition.size()) > p.max_coalition_size) {
                return false;
            }
            if (p.mode == PolicyMode::Unilateral && s.move.coalition.size() != 1) return false;
            if (p.mode == PolicyMode::Scripted && (t >= p.script.size() || !(p.script[t] == s.move))) return false;
            if (apply_move(before, s.move) != s.coloring) return false;
            if (cut_value(spec, s.coloring) != s.cut) return false;
            if (s.cut < trace.cut_at(t)) decreases.push_back(t);
        }
        if (decreases != trace.potential_decreases) return false;
        const std::size_t last = trace.steps.size();
        switch (trace.status) {
            case DynamicsStatus::Cycle:
                return trace.first_repeat_index && *trace.first_repeat_index < last &&
                       trace.state(*trace.first_repeat_index) == trace.state(last);
            case DynamicsStatus::Converged:
                return p.mode != PolicyMode::Scripted && !step(spec, trace.state(last), p, last).has_value();
            case DynamicsStatus::BudgetExhausted:
            case DynamicsStatus::ScriptExhausted:
            case DynamicsStatus::ScriptRejected: return !trace.first_repeat_index.has_value();
        }
    } catch (const std::exception&) {
        return false;
    }
    return false;
}

}  // namespace kcut
