#include "kcut/budget.hpp"

#include <cstdlib>
#include <limits>
#include <string>

namespace kcut {

std::uint64_t default_budget() {
    static const std::uint64_t value = [] {
        const char* env = std::getenv("KCUT_BUDGET");
        if (env == nullptr) return kDefaultBudget;
        try {
            std::size_t pos = 0;
            unsigned long long v = std::stoull(env, &pos);
            if (pos == std::string(env).size() && v > 0) return static_cast<std::uint64_t>(v);
        } catch (const std::exception&) {
        }
        return kDefaultBudget;
    }();
    return value;
}

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
    std::uint64_t out = 0;
    if (__builtin_mul_overflow(a, b, &out)) return std::numeric_limits<std::uint64_t>::max();
    return out;
}

std::uint64_t saturating_add(std::uint64_t a, std::uint64_t b) {
    std::uint64_t out = 0;
    if (__builtin_add_overflow(a, b, &out)) return std::numeric_limits<std::uint64_t>::max();
    return out;
}

std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ull * (index + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

}  // namespace kcut
