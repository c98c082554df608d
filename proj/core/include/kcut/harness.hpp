#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "kcut/report_json.hpp"

namespace kcut {

struct HarnessOptions {
    std::uint64_t seed = 1;
    std::uint64_t budget = default_budget();
    /// Larger corpora where a suite has them (n = 7 samples, bigger random
    /// sets).
    bool big = false;
    /// Upper node count for the exhaustive connected-graph corpora; lower
    /// it for quick runs. 0 means the suite default.
    int max_n = 0;
};

struct HarnessResult {
    std::string suite;
    std::string corpus;
    std::uint64_t instances_checked = 0;
    /// Individual conclusions evaluated (a single instance may carry many).
    std::uint64_t checks = 0;
    /// Serialized falsification events; empty when the suite passes.
    std::vector<std::string> failures;
    double wall_seconds = 0.0;

    bool passed() const { return failures.empty(); }
};

/// Suite names accepted by verify_theorems.
const std::vector<std::string>& harness_suites();

/// Runs one verification suite. Throws std::invalid_argument for unknown
/// names and BudgetExceeded when an enumeration exceeds options.budget.
///
///   optimum-5se     optima of connected graphs n <= 6, k in {2,3} are 5-SE
///   optimum-lse     same corpus, optima are LSE
///   optimum-3se     optima of unweighted and weighted graphs are 3-SE
///   containments    all colorings, n <= 5, k = 3: k-SE => LSE => 2-SE
///   k2-lse-eq-2se   all colorings, n <= 6, k = 2: LSE == 2-SE
///   degree-se       n <= 7 with maxdeg <= 2k - 1, k in {2,3}: optima are SE
///   girth-se        cycles C3..C8 and trees n <= 7: optima are SE
///   lemmas          structural lemmas on every minimal or clique deviation
///   dynamics        unilateral and strong-minimal(5) runs keep the cut monotone
///   minimal-cycle   search and replay of a cycling weighted instance
///   cut-decrease    the unweighted cut-decreasing minimal improvement
///   separations     witnesses for all four proper inclusions
HarnessResult verify_theorems(const std::string& suite, const HarnessOptions& options = {});

json harness_to_json(const HarnessResult& r);

}  // namespace kcut
