#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kcut/game.hpp"

namespace kcut {

/// A coalition together with the new color of each member (parallel to the
/// member list). Movers-only: every member must change color.
struct JointMove {
    Coalition coalition;
    std::vector<Color> new_colors;

    /// Single-player move.
    static JointMove single(NodeId v, Color c) { return JointMove{Coalition({v}), {c}}; }

    friend bool operator==(const JointMove&, const JointMove&) = default;
};

/// Throws std::invalid_argument unless m is a well-formed movers-only move
/// for sigma under spec.
void validate_move(const GameSpec& spec, const Coloring& sigma, const JointMove& m);

/// (sigma_{-C}, sigma'_C). sigma is not modified.
Coloring apply_move(const Coloring& sigma, const JointMove& m);

/// The move that takes apply_move(sigma, m) back to sigma.
JointMove inverse_move(const Coloring& sigma, const JointMove& m);

struct DeviationWitness {
    JointMove move;
    std::vector<Rational> utilities_before;
    std::vector<Rational> utilities_after;
    Rational cut_before;
    Rational cut_after;

    Rational cut_delta() const { return cut_after - cut_before; }
};

/// Recomputes every field from scratch.
DeviationWitness make_witness(const GameSpec& spec, const Coloring& sigma, const JointMove& m);

/// True iff the witness is consistent with a from-scratch recomputation
/// and every member strictly gains.
bool revalidate(const GameSpec& spec, const Coloring& sigma, const DeviationWitness& w);

bool is_strong_improvement(const GameSpec& spec, const Coloring& sigma, const JointMove& m);

/// First strong improvement by exactly the members of c, scanning the
/// (k-1)^|c| movers-only recolorings in lexicographic order of the color
/// tuple.
std::optional<JointMove> find_strong_improvement(const GameSpec& spec, const Coloring& sigma, const Coalition& c);

/// How "a proper subset can improve by itself" is read.
enum class MinimalityMode {
    /// The subset admits any strong improvement from sigma.
    AnyDeviation,
    /// The subset improves by playing its part of the given move.
    Restriction,
};

/// Searches the subsets of c (all non-empty ones, or only proper ones) for
/// a strong improvement from sigma by branch and bound over
/// stay/recolor decisions. Returns the move found, movers only.
std::optional<JointMove> find_improving_subcoalition(const GameSpec& spec, const Coloring& sigma, const Coalition& c,
                                                     bool proper_only);

/// True iff no proper non-empty subset of m's coalition can improve by
/// itself. Throws PreconditionError if m is not a strong improvement.
bool is_minimal(const GameSpec& spec, const Coloring& sigma, const JointMove& m,
                MinimalityMode mode = MinimalityMode::AnyDeviation);

// ---------------------------------------------------------------------------
// Executable forms of the structural results about minimal and clique
// deviations. Each returns a report; `falsified()` is true when a
// conclusion that should hold under the verified hypotheses does not.

enum class Check { Pass, Fail, NotApplicable };
std::string to_string(Check c);

/// Whether a checker re-verifies its (possibly expensive) preconditions.
enum class Preconditions { Verify, Assume };

struct ColorSetReport {
    Check colors_preserved = Check::NotApplicable;
    Check acyclic_case_cut_increases = Check::NotApplicable;
    bool falsified() const { return colors_preserved == Check::Fail || acyclic_case_cut_increases == Check::Fail; }
};

/// For a minimal strong improvement: the set of colors used by the
/// coalition is unchanged (n/a for singletons), and if G(C) is acyclic the
/// cut strictly grows.
ColorSetReport check_color_set_preserved(const GameSpec& spec, const Coloring& sigma, const JointMove& m,
                        Preconditions pre = Preconditions::Verify);

struct AcyclicColorsReport {
    Check at_most_two_colors = Check::NotApplicable;
    bool falsified() const { return at_most_two_colors == Check::Fail; }
};

/// A minimal strong improvement by an acyclic coalition of size > 2 uses
/// at most two colors in sigma.
AcyclicColorsReport check_acyclic_two_colors(const GameSpec& spec, const Coloring& sigma, const JointMove& m,
                                             Preconditions pre = Preconditions::Verify);

struct SwapPairReport {
    bool colors_differ = false;           // sigma(u) != sigma(x)
    bool moves_to_partner_color = false;  // sigma'(u) == sigma(x)
    bool partner_is_unique = false;       // x is u's only C-neighbour colored sigma(x)
    Check degree_equality = Check::NotApplicable;
    Check third_player_nonadjacent = Check::NotApplicable;
    /// Which third-player clause was tested.
    std::string variant = "third player v with sigma(v) != sigma(x) and sigma'(v) == sigma(x)";

    bool applicable() const { return colors_differ && moves_to_partner_color && partner_is_unique; }
    bool falsified() const {
        return degree_equality == Check::Fail || third_player_nonadjacent == Check::Fail;
    }
};

/// Unweighted graphs only; sigma an NE and m minimal; u, x members of m.
SwapPairReport check_swap_pair(const GameSpec& spec, const Coloring& sigma, const JointMove& m, NodeId u, NodeId x,
                          Preconditions pre = Preconditions::Verify);

struct CliqueMoveReport {
    bool class_sizes_equal = false;
    bool cost_drop_is_one = false;
    bool indifference = false;
    bool falsified() const { return !(class_sizes_equal && cost_drop_is_one && indifference); }
};

/// Unweighted graphs only; sigma an NE, m's coalition a clique and m a
/// strong improvement.
CliqueMoveReport check_clique_move_structure(const GameSpec& spec, const Coloring& sigma, const JointMove& m,
                        Preconditions pre = Preconditions::Verify);

/// Walks the clique deviation v1 -> (member whose old color is v1's new
/// color) -> ... until a color repeats and returns the closing cycle
/// u1..uj with sigma'(u_i) == sigma(u_{i+1}) and sigma'(u_j) == sigma(u_1).
/// The returned sub-coalition, playing its part of m alone, is itself a
/// strong improvement. Throws FalsificationError if either guarantee fails.
std::vector<NodeId> extract_rotation_subcoalition(const GameSpec& spec, const Coloring& sigma, const JointMove& m,
                                                  Preconditions pre = Preconditions::Verify);

struct FewColorsReport {
    bool applicable = false;
    Check cut_increases = Check::NotApplicable;
    bool falsified() const { return cut_increases == Check::Fail; }
};

/// Unweighted graphs only; sigma an NE, m minimal. Applicable when the
/// coalition uses 2, |C|-1 or |C| colors in sigma; then the cut must grow.
FewColorsReport check_few_colors_cut_growth(const GameSpec& spec, const Coloring& sigma, const JointMove& m,
                        Preconditions pre = Preconditions::Verify);

}  // namespace kcut
