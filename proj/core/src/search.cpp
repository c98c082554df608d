#include "kcut/search.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <random>
#include <stdexcept>

#include "kcut/corpus.hpp"
#include "kcut/dynamics.hpp"

namespace kcut {

std::string to_string(SeparationKind kind) {
    switch (kind) {
        case SeparationKind::NashNotTwoStrong: return "ne-not-2se";
        case SeparationKind::TwoStrongNotLocal: return "2se-not-lse";
        case SeparationKind::LocalNotKStrong: return "lse-not-kse";
        case SeparationKind::TwoStrongNotStrong: return "2se-not-se";
    }
    return "?";
}

SeparationKind parse_separation_kind(const std::string& text) {
    for (auto kind : {SeparationKind::NashNotTwoStrong, SeparationKind::TwoStrongNotLocal,
                      SeparationKind::LocalNotKStrong, SeparationKind::TwoStrongNotStrong}) {
        if (to_string(kind) == text) return kind;
    }
    throw std::invalid_argument("unknown separation kind '" + text +
                                "' (expected ne-not-2se, 2se-not-lse, lse-not-kse or 2se-not-se)");
}

Concept inner_concept(SeparationKind kind, int) {
    switch (kind) {
        case SeparationKind::NashNotTwoStrong: return Concept::nash();
        case SeparationKind::TwoStrongNotLocal:
        case SeparationKind::TwoStrongNotStrong: return Concept::q_strong(2);
        case SeparationKind::LocalNotKStrong: return Concept::local_strong(1);
    }
    throw std::invalid_argument("unknown separation kind");
}

Concept outer_concept(SeparationKind kind, int k) {
    switch (kind) {
        case SeparationKind::NashNotTwoStrong: return Concept::q_strong(2);
        case SeparationKind::TwoStrongNotLocal: return Concept::local_strong(1);
        case SeparationKind::LocalNotKStrong: return Concept::q_strong(k);
        case SeparationKind::TwoStrongNotStrong: return Concept::strong();
    }
    throw std::invalid_argument("unknown separation kind");
}

namespace {

// q-SE checks need q <= n; a graph smaller than q cannot separate.
std::optional<EquilibriumReport> evaluate(const GameSpec& spec, const Coloring& sigma, const Concept& c) {
    if (c.kind == ConceptKind::QStrong && c.param > spec.n()) return std::nullopt;
    return check_concept(spec, sigma, c);
}

std::optional<SeparationWitness> as_witness(SeparationKind kind, const GameSpec& spec, const Coloring& sigma) {
    auto inner = evaluate(spec, sigma, inner_concept(kind, spec.k()));
    if (!inner || !inner->verdict) return std::nullopt;
    auto outer = evaluate(spec, sigma, outer_concept(kind, spec.k()));
    if (!outer || outer->verdict) return std::nullopt;
    return SeparationWitness{kind, spec, sigma, *inner, *outer};
}

Policy inner_dynamics(SeparationKind kind) {
    switch (kind) {
        case SeparationKind::NashNotTwoStrong: return Policy::unilateral();
        case SeparationKind::TwoStrongNotLocal:
        case SeparationKind::TwoStrongNotStrong: return Policy::strong_minimal(2);
        case SeparationKind::LocalNotKStrong: return Policy::clique_only();
    }
    return Policy::unilateral();
}

GameSpec without_node(const GameSpec& spec, NodeId drop) {
    std::vector<Edge> edges;
    for (auto e : spec.graph().edges()) {
        if (e.u == drop || e.v == drop) continue;
        if (e.u > drop) --e.u;
        if (e.v > drop) --e.v;
        edges.push_back(e);
    }
    return GameSpec(Graph(spec.n() - 1, std::move(edges)), spec.k());
}

Coloring without_entry(const Coloring& sigma, NodeId drop) {
    std::vector<Color> colors(sigma.colors().begin(), sigma.colors().end());
    colors.erase(colors.begin() + drop);
    return Coloring(std::move(colors));
}

SeparationWitness shrink(SeparationWitness w) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (NodeId v = 0; v < w.spec.n() && w.spec.n() > 1; ++v) {
            auto smaller = as_witness(w.kind, without_node(w.spec, v), without_entry(w.coloring, v));
            if (smaller) {
                w = std::move(*smaller);
                changed = true;
                --v;
            }
        }
        const auto edges = w.spec.graph().edges();
        for (std::size_t i = 0; i < edges.size(); ++i) {
            std::vector<Edge> kept;
            for (std::size_t j = 0; j < edges.size(); ++j) {
                if (j != i) kept.push_back(edges[j]);
            }
            auto smaller = as_witness(w.kind, GameSpec(Graph(w.spec.n(), std::move(kept)), w.spec.k()), w.coloring);
            if (smaller) {
                w = std::move(*smaller);
                changed = true;
                break;
            }
        }
    }
    return w;
}

}  // namespace

std::optional<SeparationWitness> search_separation(SeparationKind kind, int n_max, int k, std::uint64_t seed,
                                                   std::uint64_t budget) {
    if (k < 2) throw std::invalid_argument("k must be at least 2");
    if ((kind == SeparationKind::TwoStrongNotLocal || kind == SeparationKind::LocalNotKStrong) && k < 3) {
        throw std::invalid_argument(to_string(kind) + " needs k >= 3: for k = 2 the two concepts coincide");
    }
    if (n_max < 2) throw std::invalid_argument("n_max must be at least 2");
    const Policy dynamics = inner_dynamics(kind);
    for (std::uint64_t attempt = 0; attempt < budget; ++attempt) {
        std::mt19937_64 rng(substream_seed(seed, attempt));
        const int n = std::uniform_int_distribution<int>(2, n_max)(rng);
        const double p = std::uniform_real_distribution<double>(0.25, 0.9)(rng);
        GameSpec spec(random_graph(n, p, rng), k);
        const Coloring start = random_coloring(n, k, rng);
        const auto trace = run(spec, start, dynamics, 4 * static_cast<std::size_t>(spec.graph().edge_count()) + 16);
        if (trace.status != DynamicsStatus::Converged) continue;
        auto w = as_witness(kind, spec, trace.state(trace.steps.size()));
        if (w) return shrink(std::move(*w));
    }
    return std::nullopt;
}

bool revalidate(const SeparationWitness& w) {
    try {
        auto fresh = as_witness(w.kind, w.spec, w.coloring);
        if (!fresh) return false;
        if (!revalidate(w.spec, w.coloring, w.inner) || !revalidate(w.spec, w.coloring, w.outer)) return false;
        if (!(w.inner.criterion == fresh->inner.criterion) || w.inner.verdict != fresh->inner.verdict) return false;
        if (!(w.outer.criterion == fresh->outer.criterion) || w.outer.verdict != fresh->outer.verdict) return false;
        return true;
    } catch (const std::exception&) {
        return false;
    }
}

json separation_to_json(const SeparationWitness& w) {
    return {{"kind", to_string(w.kind)},
            {"game", game_to_json(w.spec)},
            {"coloring", coloring_to_json(w.coloring)},
            {"inner", report_to_json(w.inner)},
            {"outer", report_to_json(w.outer)}};
}

SeparationWitness separation_from_json(const json& j) {
    return SeparationWitness{parse_separation_kind(j.at("kind").get<std::string>()), game_from_json(j.at("game")),
                             coloring_from_json(j.at("coloring")), report_from_json(j.at("inner")),
                             report_from_json(j.at("outer"))};
}

namespace {

// Clique players a, b, d, g and the anchors, which never move.
constexpr int kCore = 4;
constexpr NodeId kAnchor[3] = {4, 5, 6};
constexpr Color kStart[kCore] = {1, 1, 2, 3};
constexpr int kPairs[6][2] = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};

struct ScriptStep {
    std::vector<int> members;
    std::vector<Color> colors;
};

const std::vector<ScriptStep>& cycle_script() {
    static const std::vector<ScriptStep> script{
        {{0, 1, 2, 3}, {2, 3, 1, 1}}, {{0}, {1}}, {{2}, {2}}, {{3}, {3}}, {{1}, {1}},
    };
    return script;
}

std::vector<JointMove> script_moves() {
    std::vector<JointMove> out;
    for (const auto& s : cycle_script()) out.push_back(JointMove{Coalition(s.members), s.colors});
    return out;
}

// Scaled cost of clique player x at color c when the clique is colored
// `core` and x's anchor weights are `anchor` (index c - 1).
std::int64_t core_cost(int x, Color c, const Color* core, const std::int64_t w[kCore][kCore],
                       const std::int64_t* anchor) {
    std::int64_t value = anchor[c - 1];
    for (int y = 0; y < kCore; ++y) {
        if (y != x && core[y] == c) value += w[x][y];
    }
    return value;
}

}  // namespace

std::optional<CycleInstance> search_dynamics_cycle(const std::vector<Rational>& weight_menu, int n_max,
                                                   std::uint64_t seed, std::uint64_t budget) {
    if (n_max < 7 || budget == 0 || weight_menu.empty()) return std::nullopt;
    for (const auto& w : weight_menu) {
        if (w.sign() <= 0) throw std::invalid_argument("menu weights must be positive");
    }
    std::int64_t scale = 1;
    for (const auto& w : weight_menu) scale = checked_lcm(scale, w.den());
    std::vector<std::int64_t> menu;
    for (const auto& w : weight_menu) menu.push_back((w * Rational(scale)).num());
    std::vector<std::int64_t> anchor_menu{0};
    anchor_menu.insert(anchor_menu.end(), menu.begin(), menu.end());

    // Colorings of the clique before each scripted move.
    std::vector<std::array<Color, kCore>> before;
    {
        std::array<Color, kCore> cur{kStart[0], kStart[1], kStart[2], kStart[3]};
        for (const auto& s : cycle_script()) {
            before.push_back(cur);
            for (std::size_t i = 0; i < s.members.size(); ++i) cur[s.members[i]] = s.colors[i];
        }
    }

    const std::uint64_t m = menu.size();
    std::uint64_t total = 1;
    for (int i = 0; i < 6; ++i) total = saturating_mul(total, m);
    std::mt19937_64 rng(seed);
    std::vector<std::uint64_t> order;
    const bool enumerate = total <= 2'000'000;
    if (enumerate) {
        order.resize(total);
        std::iota(order.begin(), order.end(), 0);
        std::shuffle(order.begin(), order.end(), rng);
    }
    const std::uint64_t rounds = enumerate ? std::min<std::uint64_t>(budget, total) : budget;

    for (std::uint64_t r = 0; r < rounds; ++r) {
        std::uint64_t code = enumerate ? order[r] : std::uniform_int_distribution<std::uint64_t>(0, total - 1)(rng);
        std::int64_t w[kCore][kCore] = {};
        std::size_t pair_menu_index[6];
        for (int p = 0; p < 6; ++p) {
            pair_menu_index[p] = code % m;
            code /= m;
            w[kPairs[p][0]][kPairs[p][1]] = w[kPairs[p][1]][kPairs[p][0]] = menu[pair_menu_index[p]];
        }
        // Per player: anchor weight triples under which each of its scripted
        // moves strictly improves and it has no unilateral improvement at
        // the start.
        std::vector<std::array<std::size_t, 3>> options[kCore];
        bool dead = false;
        for (int x = 0; x < kCore && !dead; ++x) {
            const std::size_t am = anchor_menu.size();
            for (std::size_t code3 = 0; code3 < am * am * am; ++code3) {
                const std::array<std::size_t, 3> idx{code3 % am, (code3 / am) % am, code3 / (am * am)};
                const std::int64_t anchor[3] = {anchor_menu[idx[0]], anchor_menu[idx[1]], anchor_menu[idx[2]]};
                bool ok = true;
                for (std::size_t t = 0; t < before.size() && ok; ++t) {
                    const auto& s = cycle_script()[t];
                    auto it = std::find(s.members.begin(), s.members.end(), x);
                    if (it == s.members.end()) continue;
                    std::array<Color, kCore> after = before[t];
                    for (std::size_t i = 0; i < s.members.size(); ++i) after[s.members[i]] = s.colors[i];
                    ok = core_cost(x, after[x], after.data(), w, anchor) <
                         core_cost(x, before[t][x], before[t].data(), w, anchor);
                }
                for (Color c = 1; c <= 3 && ok; ++c) {
                    ok = core_cost(x, c, kStart, w, anchor) >= core_cost(x, kStart[x], kStart, w, anchor);
                }
                if (ok) options[x].push_back(idx);
            }
            if (options[x].empty()) dead = true;
        }
        if (dead) continue;

        for (int attempt = 0; attempt < 64; ++attempt) {
            std::vector<Edge> edges;
            for (int p = 0; p < 6; ++p) edges.push_back(Edge{kPairs[p][0], kPairs[p][1], weight_menu[pair_menu_index[p]]});
            for (int x = 0; x < kCore; ++x) {
                const auto& pick = options[x][std::uniform_int_distribution<std::size_t>(0, options[x].size() - 1)(rng)];
                for (int c = 0; c < 3; ++c) {
                    if (pick[c] == 0) continue;
                    edges.push_back(Edge{x, kAnchor[c], weight_menu[pick[c] - 1]});
                }
            }
            GameSpec spec(Graph(7, std::move(edges)), 3);
            const Coloring start({kStart[0], kStart[1], kStart[2], kStart[3], 1, 2, 3});
            auto trace = run(spec, start, Policy::scripted(script_moves()), 10);
            if (trace.status != DynamicsStatus::Cycle || trace.potential_decreases.empty()) continue;
            if (!revalidate(spec, trace)) continue;
            return CycleInstance{std::move(spec), start, std::move(trace), r + 1};
        }
    }
    return std::nullopt;
}

json cycle_to_json(const CycleInstance& c) {
    return {{"game", game_to_json(c.spec)},
            {"start", coloring_to_json(c.start)},
            {"trace", trace_to_json(c.trace)},
            {"assignments_examined", c.assignments_examined}};
}

OptimumProbe search_optimum_not_strong(int n_max, int k, std::uint64_t seed, std::uint64_t budget) {
    if (k < 2) throw std::invalid_argument("k must be at least 2");
    if (n_max < 2) throw std::invalid_argument("n_max must be at least 2");
    std::uint64_t colorings = 1;
    for (int i = 0; i < n_max; ++i) colorings = saturating_mul(colorings, static_cast<std::uint64_t>(k));
    if (colorings > 1000000) throw std::invalid_argument("k^n_max must not exceed 10^6");
    OptimumProbe probe;
    for (std::uint64_t attempt = 0; attempt < budget && !probe.counterexample; ++attempt) {
        std::mt19937_64 rng(substream_seed(seed, attempt));
        const int n = std::uniform_int_distribution<int>(2, n_max)(rng);
        const double p = std::uniform_real_distribution<double>(0.2, 0.9)(rng);
        const GameSpec spec(random_connected_graph(n, p, rng), k);
        const Rational best = optimal_coloring_exact(spec).cut;
        ++probe.graphs_examined;
        for_each_coloring(n, k, [&](const Coloring& sigma) {
            if (cut_value(spec, sigma) != best) return true;
            ++probe.optima_examined;
            auto report = is_strong(spec, sigma);
            if (report.verdict) return true;
            probe.counterexample = OptimumNotStrong{spec, sigma, std::move(report)};
            return false;
        });
    }
    return probe;
}

}  // namespace kcut
