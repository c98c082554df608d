#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "kcut/equilibrium.hpp"

namespace kcut {

enum class PolicyMode {
    /// One player moves to its best color (smallest such color on ties).
    Unilateral,
    /// Minimal strong improvements with at most max_coalition_size members.
    StrongMinimal,
    /// Any strong improvement with at most max_coalition_size members.
    StrongAny,
    /// Strong improvements by cliques.
    CliqueOnly,
    /// Replays `script` in order; each move must be a minimal strong
    /// improvement at the moment it is played.
    Scripted,
};

enum class Selection {
    /// Smallest coalition, then lexicographic coalition, then lexicographic
    /// color tuple.
    Lexicographic,
    /// Uniform over all admissible moves at the current state, drawn from a
    /// stream derived from (seed, step index).
    SeededRandom,
};

struct Policy {
    PolicyMode mode = PolicyMode::Unilateral;
    int max_coalition_size = 1;
    Selection selection = Selection::Lexicographic;
    std::uint64_t seed = 0;
    std::vector<JointMove> script;

    static Policy unilateral() { return {}; }
    static Policy strong_minimal(int q) { return with_mode(PolicyMode::StrongMinimal, q); }
    static Policy strong_any(int q) { return with_mode(PolicyMode::StrongAny, q); }
    static Policy clique_only() { return with_mode(PolicyMode::CliqueOnly, 0); }
    static Policy scripted(std::vector<JointMove> moves) {
        Policy p = with_mode(PolicyMode::Scripted, 0);
        p.script = std::move(moves);
        return p;
    }
    Policy with_random(std::uint64_t s) const {
        Policy p = *this;
        p.selection = Selection::SeededRandom;
        p.seed = s;
        return p;
    }

    /// "unilateral", "strong-minimal:Q", "strong-any:Q", "clique-only",
    /// "scripted".
    std::string to_string() const;
    /// Parses every form produced by to_string except "scripted". Throws
    /// std::invalid_argument.
    static Policy parse(const std::string& text);

    /// The concept a converged run reaches; none for scripted runs.
    std::optional<Concept> converged_concept() const;

private:
    static Policy with_mode(PolicyMode m, int q) {
        Policy p;
        p.mode = m;
        p.max_coalition_size = q;
        return p;
    }
};

/// The admissible move chosen at `sigma`, or none when no admissible move
/// exists (then sigma satisfies converged_concept()). `step_index` selects
/// the script entry and seeds the random stream.
std::optional<JointMove> step(const GameSpec& spec, const Coloring& sigma, const Policy& policy,
                              std::size_t step_index = 0);

/// Every admissible move at sigma in lexicographic order. Not defined for
/// scripted policies.
std::vector<JointMove> admissible_moves(const GameSpec& spec, const Coloring& sigma, const Policy& policy);

enum class DynamicsStatus { Converged, Cycle, BudgetExhausted, ScriptExhausted, ScriptRejected };
std::string to_string(DynamicsStatus s);

struct TraceStep {
    JointMove move;
    /// Coloring after the move and its cut value.
    Coloring coloring;
    Rational cut;
};

struct DynamicsTrace {
    Policy policy;
    Coloring initial;
    Rational initial_cut;
    std::vector<TraceStep> steps;
    DynamicsStatus status = DynamicsStatus::Converged;
    /// For Cycle: the state index (0 = initial, t = after step t) that the
    /// final state repeats.
    std::optional<std::size_t> first_repeat_index;
    /// Step indices (0-based) whose move strictly decreased the cut.
    std::vector<std::size_t> potential_decreases;

    /// State t: initial for t = 0, otherwise the coloring after step t-1.
    const Coloring& state(std::size_t t) const { return t == 0 ? initial : steps[t - 1].coloring; }
    const Rational& cut_at(std::size_t t) const { return t == 0 ? initial_cut : steps[t - 1].cut; }
};

/// Iterates step() until no admissible move (Converged), a repeated
/// coloring (Cycle), max_steps moves (BudgetExhausted), the end of a
/// script (ScriptExhausted) or a scripted move that is not a minimal strong
/// improvement (ScriptRejected). Throws std::invalid_argument if
/// max_steps < 1.
DynamicsTrace run(const GameSpec& spec, const Coloring& sigma0, const Policy& policy, std::size_t max_steps);

struct PotentialReport {
    /// The cut strictly increased at every step.
    bool potential_respected = true;
    std::vector<std::size_t> decreases;
    std::vector<std::size_t> non_increases;
    /// A non-increase happened where the cut is proved to be a potential:
    /// unilateral moves on any graph, or strong-minimal(q <= 5) moves on an
    /// unweighted graph.
    bool falsified = false;
};

PotentialReport check_potential_candidate(const GameSpec& spec, const DynamicsTrace& trace);

/// Replays the trace from its initial coloring and checks the recorded
/// colorings, cuts, decreases, move admissibility, and cycle claim.
bool revalidate(const GameSpec& spec, const DynamicsTrace& trace);

}  // namespace kcut
