#include "kcut/game.hpp"

#include <algorithm>
#include <limits>
#include <random>
#include <sstream>
#include <stdexcept>

#include "kcut/errors.hpp"

namespace kcut {

std::string Coloring::to_string() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < colors_.size(); ++i) {
        if (i) os << ' ';
        os << colors_[i];
    }
    return os.str();
}

GameSpec::GameSpec(Graph graph, int k) : graph_(std::move(graph)), k_(k) {
    if (k < 2) throw std::invalid_argument("k must be >= 2, got " + std::to_string(k));
}

void GameSpec::check_color(Color c) const {
    if (c < 1 || c > k_) {
        throw std::invalid_argument("color " + std::to_string(c) + " outside 1.." + std::to_string(k_));
    }
}

void GameSpec::validate(const Coloring& sigma) const {
    if (static_cast<int>(sigma.size()) != n()) {
        throw std::invalid_argument("coloring has " + std::to_string(sigma.size()) + " entries, graph has " +
                                    std::to_string(n()) + " nodes");
    }
    for (auto c : sigma.colors()) check_color(c);
}

namespace {

std::int64_t scaled_color_degree(const Graph& g, const Coloring& sigma, NodeId u, Color i) {
    std::int64_t total = 0;
    for (const auto& nb : g.neighbors(u)) {
        if (sigma[nb.node] == i) total += g.scaled_weight(u, nb.node);
    }
    return total;
}

}  // namespace

Rational color_degree(const GameSpec& spec, const Coloring& sigma, NodeId u, Color i) {
    spec.validate(sigma);
    spec.graph().check_node(u);
    spec.check_color(i);
    return spec.graph().from_scaled(scaled_color_degree(spec.graph(), sigma, u, i));
}

Rational cost(const GameSpec& spec, const Coloring& sigma, NodeId u) {
    spec.validate(sigma);
    spec.graph().check_node(u);
    return spec.graph().from_scaled(scaled_color_degree(spec.graph(), sigma, u, sigma[u]));
}

Rational utility(const GameSpec& spec, const Coloring& sigma, NodeId u) {
    spec.validate(sigma);
    spec.graph().check_node(u);
    const Graph& g = spec.graph();
    return g.from_scaled(g.scaled_degree(u) - scaled_color_degree(g, sigma, u, sigma[u]));
}

Rational cut_value(const GameSpec& spec, const Coloring& sigma) {
    spec.validate(sigma);
    const Graph& g = spec.graph();
    std::int64_t total = 0;
    for (const auto& e : g.edges()) {
        if (sigma[e.u] != sigma[e.v]) total += g.scaled_weight(e.u, e.v);
    }
    return g.from_scaled(total);
}

Rational social_welfare(const GameSpec& spec, const Coloring& sigma) {
    Rational total;
    for (NodeId u = 0; u < spec.n(); ++u) total += utility(spec, sigma, u);
    return total;
}

std::vector<Color> coalition_colors(const Coloring& sigma, const Coalition& c) {
    std::vector<Color> out;
    for (auto v : c) out.push_back(sigma[v]);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<NodeId> color_class(const Coloring& sigma, const Coalition& c, Color i) {
    std::vector<NodeId> out;
    for (auto v : c) {
        if (sigma[v] == i) out.push_back(v);
    }
    return out;
}

Rational coalition_cost(const GameSpec& spec, const Coloring& sigma, NodeId u, const Coalition& c) {
    spec.validate(sigma);
    c.validate_for(spec.graph());
    const Graph& g = spec.graph();
    g.check_node(u);
    std::int64_t total = 0;
    for (auto v : c) {
        if (v != u && sigma[v] == sigma[u]) total += g.scaled_weight(u, v);
    }
    return g.from_scaled(total);
}

std::uint64_t canonical_coloring_count(int n, int k) {
    if (n <= 0) return 1;
    // stirling[j] = S(i, j) for the current row i.
    std::vector<std::uint64_t> stirling(static_cast<std::size_t>(k) + 1, 0);
    stirling[0] = 1;
    for (int i = 1; i <= n; ++i) {
        for (int j = std::min(i, k); j >= 1; --j) {
            stirling[j] = saturating_add(saturating_mul(static_cast<std::uint64_t>(j), stirling[j]), stirling[j - 1]);
        }
        stirling[0] = 0;
    }
    std::uint64_t total = 0;
    for (int j = 1; j <= k; ++j) total = saturating_add(total, stirling[j]);
    return total;
}

namespace {

class ExactSolver {
public:
    explicit ExactSolver(const GameSpec& spec)
        : g_(spec.graph()), n_(spec.n()), k_(spec.k()), colors_(n_, 0), best_colors_(n_, 1), before_(n_, 0),
          remaining_(n_ + 1, 0) {
        for (NodeId i = 0; i < n_; ++i) {
            for (const auto& nb : g_.neighbors(i)) {
                if (nb.node < i) before_[i] += g_.scaled_weight(i, nb.node);
            }
        }
        for (NodeId i = n_ - 1; i >= 0; --i) remaining_[i] = remaining_[i + 1] + before_[i];
    }

    OptimalColoring solve() {
        if (n_ > 0) descend(0, 0, 0);
        return OptimalColoring{Coloring(best_colors_), g_.from_scaled(std::max<std::int64_t>(best_, 0)), nodes_};
    }

private:
    void descend(NodeId i, Color used, std::int64_t current) {
        ++nodes_;
        if (i == n_) {
            if (current > best_) {
                best_ = current;
                best_colors_ = colors_;
            }
            return;
        }
        if (current + remaining_[i] <= best_) return;
        const Color limit = std::min<Color>(used + 1, k_);
        for (Color c = 1; c <= limit; ++c) {
            std::int64_t same = 0;
            for (const auto& nb : g_.neighbors(i)) {
                if (nb.node < i && colors_[nb.node] == c) same += g_.scaled_weight(i, nb.node);
            }
            colors_[i] = c;
            descend(i + 1, std::max(used, c), current + before_[i] - same);
        }
        colors_[i] = 0;
    }

    const Graph& g_;
    int n_;
    int k_;
    std::vector<Color> colors_;
    std::vector<Color> best_colors_;
    std::vector<std::int64_t> before_;
    std::vector<std::int64_t> remaining_;
    std::int64_t best_ = -1;
    std::uint64_t nodes_ = 0;
};

}  // namespace

OptimalColoring optimal_coloring_exact(const GameSpec& spec, std::uint64_t budget) {
    std::uint64_t size = canonical_coloring_count(spec.n(), spec.k());
    if (size > budget) {
        throw BudgetExceeded("exact max-k-cut search needs " + std::to_string(size) +
                             " canonical colorings, budget is " + std::to_string(budget));
    }
    return ExactSolver(spec).solve();
}

Coloring local_search_coloring(const GameSpec& spec, std::uint64_t seed) {
    const Graph& g = spec.graph();
    const int n = spec.n();
    const int k = spec.k();
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<Color> pick(1, k);
    std::vector<Color> colors(n);
    for (auto& c : colors) c = pick(rng);

    std::vector<std::int64_t> colw(static_cast<std::size_t>(n) * (k + 1), 0);
    auto at = [&](NodeId u, Color c) -> std::int64_t& { return colw[static_cast<std::size_t>(u) * (k + 1) + c]; };
    for (const auto& e : g.edges()) {
        at(e.u, colors[e.v]) += g.scaled_weight(e.u, e.v);
        at(e.v, colors[e.u]) += g.scaled_weight(e.u, e.v);
    }
    bool improved = true;
    while (improved) {
        improved = false;
        for (NodeId u = 0; u < n; ++u) {
            Color best = colors[u];
            for (Color c = 1; c <= k; ++c) {
                if (at(u, c) < at(u, best)) best = c;
            }
            if (best == colors[u]) continue;
            for (const auto& nb : g.neighbors(u)) {
                std::int64_t w = g.scaled_weight(u, nb.node);
                at(nb.node, colors[u]) -= w;
                at(nb.node, best) += w;
            }
            colors[u] = best;
            improved = true;
        }
    }
    return Coloring(std::move(colors));
}

}  // namespace kcut
