#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "kcut/report_json.hpp"

namespace kcut {

enum class SeparationKind { NashNotTwoStrong, TwoStrongNotLocal, LocalNotKStrong, TwoStrongNotStrong };

/// "ne-not-2se", "2se-not-lse", "lse-not-kse", "2se-not-se".
std::string to_string(SeparationKind kind);
SeparationKind parse_separation_kind(const std::string& text);

/// The concept the witness satisfies and the one it violates.
Concept inner_concept(SeparationKind kind, int k);
Concept outer_concept(SeparationKind kind, int k);

struct SeparationWitness {
    SeparationKind kind;
    GameSpec spec;
    Coloring coloring;
    EquilibriumReport inner;
    EquilibriumReport outer;
};

/// Samples random graphs with 2 <= n <= n_max nodes, drives a random start
/// to the inner concept with the matching dynamics, and stops at the first
/// profile violating the outer concept. The witness is then shrunk by
/// greedy node and edge deletion while the separation persists. `budget`
/// caps the number of sampled instances. Throws std::invalid_argument for
/// 2se-not-lse and lse-not-kse with k < 3, where the concepts coincide.
std::optional<SeparationWitness> search_separation(SeparationKind kind, int n_max, int k, std::uint64_t seed,
                                                   std::uint64_t budget);

/// Recomputes both reports from scratch: inner holds, outer fails with a
/// re-validating witness, and both match the stored reports.
bool revalidate(const SeparationWitness& w);

json separation_to_json(const SeparationWitness& w);
SeparationWitness separation_from_json(const json& j);

struct CycleInstance {
    GameSpec spec;
    Coloring start;
    DynamicsTrace trace;
    /// Core weight assignments examined before success.
    std::uint64_t assignments_examined = 0;
};

/// Searches weights from `weight_menu` for a 3-color instance whose
/// dynamics of minimal strong improvements returns to its start: one
/// 4-clique coalition move followed by four single-player moves. The
/// instance is a 4-clique a, b, d, g plus three anchor players fixed in
/// colors 1, 2, 3; edge weights among the clique and towards the anchors
/// (absent edge allowed) come from the menu. Every move is re-verified as a
/// minimal strong improvement and the trace must contain a strict cut
/// decrease. `budget` caps the clique weight assignments examined; none is
/// returned when it runs out, when n_max < 7, or when no assignment works
/// (for instance with unit weights only).
std::optional<CycleInstance> search_dynamics_cycle(const std::vector<Rational>& weight_menu, int n_max,
                                                   std::uint64_t seed, std::uint64_t budget);

json cycle_to_json(const CycleInstance& c);

struct CutDecreaseInstance {
    GameSpec spec;
    Coloring coloring;
    JointMove move;
    /// Pads per color in the gadget that made the construction work.
    int pads_per_color = 0;
};

/// Unweighted 7-color instance with a 7-clique a..g colored 1, players
/// h, i, l, m, n, o colored 2..7 each attached to two consecutive clique
/// members, and padding nodes that pin everyone else. The move sends a..f
/// to colors 2..7 and h..o to color 1; it is a minimal strong improvement
/// and loses exactly 3 cut edges. Pad counts are searched upward; throws
/// std::runtime_error if no count up to 12 validates.
CutDecreaseInstance reconstruct_cut_decrease_instance();

struct OptimumNotStrong {
    GameSpec spec;
    Coloring optimum;
    /// Failing SE report for `optimum`.
    EquilibriumReport report;
};

struct OptimumProbe {
    std::optional<OptimumNotStrong> counterexample;
    std::uint64_t graphs_examined = 0;
    std::uint64_t optima_examined = 0;
};

/// Probes whether every maximum k-cut of an unweighted graph is an SE.
/// Samples random connected unweighted graphs with 2 <= n <= n_max nodes
/// and checks every optimal coloring (not just the canonical one) against
/// the full SE check. Stops at the first counterexample. Throws
/// std::invalid_argument when k^n_max exceeds 10^6.
OptimumProbe search_optimum_not_strong(int n_max, int k, std::uint64_t seed, std::uint64_t budget);

}  // namespace kcut
