#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "kcut/deviation.hpp"

namespace kcut {

enum class ConceptKind { Nash, QStrong, LocalStrong, Strong };

/// An equilibrium concept; `param` is q for QStrong and x for LocalStrong.
struct Concept {
    ConceptKind kind = ConceptKind::Nash;
    int param = 1;

    static Concept nash() { return {ConceptKind::Nash, 1}; }
    static Concept q_strong(int q) { return {ConceptKind::QStrong, q}; }
    static Concept local_strong(int x = 1) { return {ConceptKind::LocalStrong, x}; }
    static Concept strong() { return {ConceptKind::Strong, 0}; }

    /// "ne", "qse:3", "lse:1", "se".
    std::string to_string() const;
    /// Inverse of to_string; "lse" alone means x = 1. Throws
    /// std::invalid_argument on anything else.
    static Concept parse(const std::string& text);

    friend bool operator==(const Concept&, const Concept&) = default;
};

struct EquilibriumReport {
    Concept criterion;
    bool verdict = true;
    /// Present iff verdict is false.
    std::optional<DeviationWitness> witness;
    std::uint64_t coalitions_examined = 0;
};

/// Witness: the first improving (v, i) in lexicographic order.
EquilibriumReport is_nash(const GameSpec& spec, const Coloring& sigma);

/// No coalition of size <= q has a strong improvement. Coalitions are
/// scanned by size, then lexicographically, so the witness is the first
/// improving move in that order (and therefore minimal). Throws
/// std::invalid_argument unless 1 <= q <= n, BudgetExceeded when the number
/// of movers-only moves sum_{s<=q} C(n,s)(k-1)^s exceeds budget.
EquilibriumReport is_q_strong(const GameSpec& spec, const Coloring& sigma, int q,
                              std::uint64_t budget = default_budget());

/// No x-local coalition (pairwise hop distance <= x; cliques for x = 1) has
/// a strong improvement.
EquilibriumReport is_local_strong(const GameSpec& spec, const Coloring& sigma, int x = 1);

/// is_q_strong with q = n; an empty graph is trivially an SE.
EquilibriumReport is_strong(const GameSpec& spec, const Coloring& sigma, std::uint64_t budget = default_budget());

EquilibriumReport check_concept(const GameSpec& spec, const Coloring& sigma, const Concept& wanted,
                                std::uint64_t budget = default_budget());

/// The report's witness re-validates from scratch and its coalition fits
/// the concept; a true verdict carries no witness.
bool revalidate(const GameSpec& spec, const Coloring& sigma, const EquilibriumReport& report);

/// Regions of the containment chain NE > 2-SE > LSE > k-SE > SE (outermost
/// first). For k = 2 the LSE and 2-SE regions coincide.
enum class Region { NotNash, Nash, TwoStrong, LocalStrong, KStrong, Strong };
std::string to_string(Region r);

struct Classification {
    Region region = Region::NotNash;
    bool nash = false;
    bool two_strong = false;
    bool local_strong = false;
    bool k_strong = false;
    bool strong = false;
};

/// Innermost region sigma belongs to. q-values are clamped to n. Throws
/// FalsificationError if LSE => 2-SE fails, or if k-SE => LSE fails on an
/// unweighted graph. On weighted graphs a k-SE that is not an LSE is
/// reported in the 2-SE region.
Classification classify(const GameSpec& spec, const Coloring& sigma, std::uint64_t budget = default_budget());

/// k >= ceil((maxdeg + 1) / 2). Unweighted graphs only (PreconditionError).
bool degree_condition_guarantees_se(const GameSpec& spec);

struct GirthGuarantee {
    std::optional<int> girth;
    /// 2 * girth - 3, or n on forests. Not clamped.
    int q_guaranteed = 0;
    /// girth >= (n + 3) / 2; always true on forests.
    bool se_guaranteed = false;
};

/// Unweighted graphs only (PreconditionError).
GirthGuarantee girth_guarantee(const GameSpec& spec);

}  // namespace kcut
