#include "oracles.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <functional>

namespace oracle {

Rational utility(const GameSpec& spec, const std::vector<Color>& sigma, NodeId u) {
    Rational total;
    for (const auto& e : spec.graph().edges()) {
        if (e.u != u && e.v != u) continue;
        if (sigma[e.u] != sigma[e.v]) total += e.weight;
    }
    return total;
}

Rational cut(const GameSpec& spec, const std::vector<Color>& sigma) {
    Rational total;
    for (const auto& e : spec.graph().edges()) {
        if (sigma[e.u] != sigma[e.v]) total += e.weight;
    }
    return total;
}

namespace {

// Calls f on every vector in {1..k}^n in lexicographic order; stops when f
// returns true and reports whether it did.
bool any_assignment(int n, int k, const std::function<bool(const std::vector<Color>&)>& f) {
    std::vector<Color> c(n, 1);
    while (true) {
        if (f(c)) return true;
        int i = n - 1;
        while (i >= 0 && c[i] == k) c[i--] = 1;
        if (i < 0) return false;
        ++c[i];
    }
}

}  // namespace

MaxCut max_cut(const GameSpec& spec) {
    MaxCut best{Rational(-1), {}};
    any_assignment(spec.n(), spec.k(), [&](const std::vector<Color>& c) {
        const Rational v = cut(spec, c);
        if (v > best.value) best = {v, c};
        return false;
    });
    return best;
}

bool subset_can_improve(const GameSpec& spec, const std::vector<Color>& sigma, std::uint32_t mask) {
    std::vector<NodeId> members;
    for (int v = 0; v < spec.n(); ++v) {
        if (mask & (1u << v)) members.push_back(v);
    }
    std::vector<Rational> before;
    for (auto v : members) before.push_back(utility(spec, sigma, v));
    const int s = static_cast<int>(members.size());
    return any_assignment(s, spec.k(), [&](const std::vector<Color>& colors) {
        std::vector<Color> next = sigma;
        for (int i = 0; i < s; ++i) next[members[i]] = colors[i];
        for (int i = 0; i < s; ++i) {
            if (utility(spec, next, members[i]) <= before[i]) return false;
        }
        return true;
    });
}

bool is_q_strong(const GameSpec& spec, const std::vector<Color>& sigma, int q) {
    const std::uint32_t full = 1u << spec.n();
    for (std::uint32_t mask = 1; mask < full; ++mask) {
        if (std::popcount(mask) > q) continue;
        if (subset_can_improve(spec, sigma, mask)) return false;
    }
    return true;
}

bool is_local_strong(const GameSpec& spec, const std::vector<Color>& sigma) {
    const auto& g = spec.graph();
    for (const auto& c : cliques(g, spec.n())) {
        std::uint32_t mask = 0;
        for (auto v : c) mask |= 1u << v;
        if (subset_can_improve(spec, sigma, mask)) return false;
    }
    return true;
}

std::vector<std::vector<NodeId>> cliques(const kcut::Graph& g, int max_size) {
    const int n = g.node_count();
    std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
    for (const auto& e : g.edges()) adj[e.u][e.v] = adj[e.v][e.u] = true;
    std::vector<std::vector<NodeId>> out;
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        if (std::popcount(mask) > max_size) continue;
        std::vector<NodeId> members;
        for (int v = 0; v < n; ++v) {
            if (mask & (1u << v)) members.push_back(v);
        }
        bool ok = true;
        for (std::size_t i = 0; i < members.size() && ok; ++i) {
            for (std::size_t j = i + 1; j < members.size() && ok; ++j) ok = adj[members[i]][members[j]];
        }
        if (ok) out.push_back(members);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::optional<int> girth(const kcut::Graph& g) {
    const int n = g.node_count();
    std::optional<int> best;
    const auto& edges = g.edges();
    for (std::size_t skip = 0; skip < edges.size(); ++skip) {
        std::vector<std::vector<int>> adj(n);
        for (std::size_t i = 0; i < edges.size(); ++i) {
            if (i == skip) continue;
            adj[edges[i].u].push_back(edges[i].v);
            adj[edges[i].v].push_back(edges[i].u);
        }
        std::vector<int> dist(n, -1);
        std::deque<int> queue{edges[skip].u};
        dist[edges[skip].u] = 0;
        while (!queue.empty()) {
            const int x = queue.front();
            queue.pop_front();
            for (int y : adj[x]) {
                if (dist[y] < 0) {
                    dist[y] = dist[x] + 1;
                    queue.push_back(y);
                }
            }
        }
        const int d = dist[edges[skip].v];
        if (d > 0 && (!best || d + 1 < *best)) best = d + 1;
    }
    return best;
}

std::vector<std::vector<int>> hop_distances(const kcut::Graph& g) {
    const int n = g.node_count();
    const int inf = n + 1;
    std::vector<std::vector<int>> d(n, std::vector<int>(n, inf));
    for (int v = 0; v < n; ++v) d[v][v] = 0;
    for (const auto& e : g.edges()) d[e.u][e.v] = d[e.v][e.u] = 1;
    for (int m = 0; m < n; ++m) {
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][m] + d[m][j]);
        }
    }
    for (auto& row : d) {
        for (auto& x : row) {
            if (x >= inf) x = -1;
        }
    }
    return d;
}

bool is_minimal(const GameSpec& spec, const std::vector<Color>& sigma, const std::vector<NodeId>& coalition) {
    std::uint32_t full = 0;
    for (auto v : coalition) full |= 1u << v;
    for (std::uint32_t sub = (full - 1) & full; sub != 0; sub = (sub - 1) & full) {
        if (subset_can_improve(spec, sigma, sub)) return false;
    }
    return true;
}

std::vector<Color> colors_of(const Coloring& sigma) { return {sigma.colors().begin(), sigma.colors().end()}; }

}  // namespace oracle
