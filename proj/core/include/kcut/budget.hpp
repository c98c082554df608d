#pragma once

#include <cstdint>

namespace kcut {

/// Built-in cap on any single exhaustive enumeration (colorings visited,
/// joint moves examined).
inline constexpr std::uint64_t kDefaultBudget = 100'000'000;

/// kDefaultBudget, unless the KCUT_BUDGET environment variable holds a
/// positive integer, which then wins. Read once per process.
std::uint64_t default_budget();

/// a * b saturating at UINT64_MAX.
std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b);
std::uint64_t saturating_add(std::uint64_t a, std::uint64_t b);

/// Independent seed for the index-th sub-stream of `seed` (splitmix64
/// finalizer), so per-instance randomness does not depend on iteration
/// order.
std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t index);

}  // namespace kcut
