#include "kcut/corpus.hpp"

#include <stdexcept>

namespace kcut {

std::uint64_t for_each_connected_graph(int n, const std::function<bool(const Graph&)>& visit) {
    if (n < 1 || n > 7) throw std::invalid_argument("connected graph enumeration supports 1 <= n <= 7");
    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    }
    const std::uint32_t limit = 1u << pairs.size();
    std::uint64_t count = 0;
    std::vector<std::uint32_t> adj(static_cast<std::size_t>(n));
    for (std::uint32_t mask = 0; mask < limit; ++mask) {
        std::fill(adj.begin(), adj.end(), 0u);
        for (std::size_t i = 0; i < pairs.size(); ++i) {
            if (mask & (1u << i)) {
                adj[pairs[i].first] |= 1u << pairs[i].second;
                adj[pairs[i].second] |= 1u << pairs[i].first;
            }
        }
        std::uint32_t reached = 1, frontier = 1;
        while (frontier) {
            std::uint32_t next = 0;
            for (int v = 0; v < n; ++v) {
                if (frontier & (1u << v)) next |= adj[v];
            }
            frontier = next & ~reached;
            reached |= next;
        }
        if (reached != (1u << n) - 1) continue;
        std::vector<Edge> edges;
        for (std::size_t i = 0; i < pairs.size(); ++i) {
            if (mask & (1u << i)) edges.push_back(Edge{pairs[i].first, pairs[i].second, Rational(1)});
        }
        ++count;
        if (!visit(Graph(n, std::move(edges)))) break;
    }
    return count;
}

std::uint64_t for_each_labeled_tree(int n, const std::function<bool(const Graph&)>& visit) {
    if (n < 1) throw std::invalid_argument("trees need at least one node");
    if (n == 1) {
        visit(Graph(1));
        return 1;
    }
    if (n == 2) {
        visit(Graph(2, {Edge{0, 1, Rational(1)}}));
        return 1;
    }
    std::vector<int> seq(static_cast<std::size_t>(n - 2), 0);
    std::uint64_t count = 0;
    while (true) {
        std::vector<int> deg(static_cast<std::size_t>(n), 1);
        for (int x : seq) ++deg[x];
        std::vector<Edge> edges;
        std::vector<int> d = deg;
        for (int x : seq) {
            int leaf = 0;
            while (d[leaf] != 1) ++leaf;
            edges.push_back(Edge{leaf, x, Rational(1)});
            --d[leaf];
            --d[x];
        }
        int a = -1;
        for (int v = 0; v < n; ++v) {
            if (d[v] == 1) {
                if (a < 0) {
                    a = v;
                } else {
                    edges.push_back(Edge{a, v, Rational(1)});
                    break;
                }
            }
        }
        ++count;
        if (!visit(Graph(n, std::move(edges)))) return count;
        std::size_t i = seq.size();
        while (i > 0) {
            --i;
            if (++seq[i] < n) break;
            seq[i] = 0;
            if (i == 0) return count;
        }
    }
}

std::uint64_t for_each_coloring(int n, int k, const std::function<bool(const Coloring&)>& visit) {
    if (n < 0 || k < 1) throw std::invalid_argument("invalid coloring enumeration bounds");
    std::vector<Color> colors(static_cast<std::size_t>(n), 1);
    std::uint64_t count = 0;
    while (true) {
        ++count;
        if (!visit(Coloring(colors))) return count;
        int i = n;
        while (true) {
            if (i == 0) return count;
            --i;
            if (++colors[i] <= k) break;
            colors[i] = 1;
        }
    }
}

Graph path_graph(int n) {
    std::vector<Edge> edges;
    for (int v = 0; v + 1 < n; ++v) edges.push_back(Edge{v, v + 1, Rational(1)});
    return Graph(n, std::move(edges));
}

Graph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("cycles need at least 3 nodes");
    std::vector<Edge> edges;
    for (int v = 0; v < n; ++v) edges.push_back(Edge{v, (v + 1) % n, Rational(1)});
    return Graph(n, std::move(edges));
}

Graph complete_graph(int n) {
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) edges.push_back(Edge{u, v, Rational(1)});
    }
    return Graph(n, std::move(edges));
}

Graph star_graph(int leaves) {
    std::vector<Edge> edges;
    for (int v = 1; v <= leaves; ++v) edges.push_back(Edge{0, v, Rational(1)});
    return Graph(leaves + 1, std::move(edges));
}

Graph petersen_graph() {
    std::vector<Edge> edges;
    for (int i = 0; i < 5; ++i) {
        edges.push_back(Edge{i, (i + 1) % 5, Rational(1)});
        edges.push_back(Edge{i, i + 5, Rational(1)});
        edges.push_back(Edge{5 + i, 5 + (i + 2) % 5, Rational(1)});
    }
    return Graph(10, std::move(edges));
}

std::vector<Rational> default_weight_menu() {
    return {Rational(1, 2), Rational(1), Rational(2), Rational(3), Rational(4), Rational(1, 100), Rational(100)};
}

Graph random_graph(int n, double p, std::mt19937_64& rng, const std::vector<Rational>& menu) {
    std::bernoulli_distribution coin(p);
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            if (!coin(rng)) continue;
            Rational w(1);
            if (!menu.empty()) w = menu[std::uniform_int_distribution<std::size_t>(0, menu.size() - 1)(rng)];
            edges.push_back(Edge{u, v, w});
        }
    }
    return Graph(n, std::move(edges));
}

Graph random_connected_graph(int n, double p, std::mt19937_64& rng, const std::vector<Rational>& menu) {
    if (n < 1) throw std::invalid_argument("need at least one node");
    if (n > 1 && p <= 0.0) throw std::invalid_argument("p must be positive for a connected graph");
    while (true) {
        Graph g = random_graph(n, p, rng, menu);
        if (is_connected(g)) return g;
    }
}

Coloring random_coloring(int n, int k, std::mt19937_64& rng) {
    std::uniform_int_distribution<Color> pick(1, k);
    std::vector<Color> colors(static_cast<std::size_t>(n));
    for (auto& c : colors) c = pick(rng);
    return Coloring(std::move(colors));
}

}  // namespace kcut
