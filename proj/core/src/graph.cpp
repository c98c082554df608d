#include "kcut/graph.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <stdexcept>
#include <string>
#include <tuple>

namespace kcut {

Graph::Graph(int node_count, std::vector<Edge> edges) : n_(node_count) {
    if (node_count < 0) throw std::invalid_argument("negative node count");
    for (auto& e : edges) {
        if (e.u < 0 || e.v < 0 || e.u >= n_ || e.v >= n_) {
            throw std::invalid_argument("edge {" + std::to_string(e.u) + "," + std::to_string(e.v) +
                                        "} references a node outside 0.." + std::to_string(n_ - 1));
        }
        if (e.u == e.v) throw std::invalid_argument("self-loop on node " + std::to_string(e.u));
        if (e.weight.sign() <= 0) {
            throw std::invalid_argument("edge {" + std::to_string(e.u) + "," + std::to_string(e.v) +
                                        "} has non-positive weight " + e.weight.to_string());
        }
        if (e.u > e.v) std::swap(e.u, e.v);
    }
    std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) {
        return std::tie(a.u, a.v) < std::tie(b.u, b.v);
    });
    for (std::size_t i = 1; i < edges.size(); ++i) {
        if (edges[i].u == edges[i - 1].u && edges[i].v == edges[i - 1].v) {
            throw std::invalid_argument("duplicate edge {" + std::to_string(edges[i].u) + "," +
                                        std::to_string(edges[i].v) + "}");
        }
    }
    edges_ = std::move(edges);

    for (const auto& e : edges_) {
        scale_ = checked_lcm(scale_, e.weight.den());
        if (e.weight != Rational(1)) unweighted_ = false;
    }

    std::vector<std::size_t> deg(n_, 0);
    for (const auto& e : edges_) {
        ++deg[e.u];
        ++deg[e.v];
    }
    offsets_.assign(n_ + 1, 0);
    for (int v = 0; v < n_; ++v) offsets_[v + 1] = offsets_[v] + deg[v];
    adjacency_.resize(offsets_[n_]);
    std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
    scaled_.assign(static_cast<std::size_t>(n_) * n_, 0);
    scaled_degree_.assign(n_, 0);
    for (const auto& e : edges_) {
        adjacency_[fill[e.u]++] = Neighbor{e.v, e.weight};
        adjacency_[fill[e.v]++] = Neighbor{e.u, e.weight};
        Rational scaled = e.weight * Rational(scale_);
        scaled_[static_cast<std::size_t>(e.u) * n_ + e.v] = scaled.num();
        scaled_[static_cast<std::size_t>(e.v) * n_ + e.u] = scaled.num();
        scaled_degree_[e.u] += scaled.num();
        scaled_degree_[e.v] += scaled.num();
    }
    for (int v = 0; v < n_; ++v) {
        std::sort(adjacency_.begin() + offsets_[v], adjacency_.begin() + offsets_[v + 1],
                  [](const Neighbor& a, const Neighbor& b) { return a.node < b.node; });
    }
}

void Graph::check_node(NodeId v) const {
    if (v < 0 || v >= n_) {
        throw std::out_of_range("node id " + std::to_string(v) + " out of range for graph with " +
                                std::to_string(n_) + " nodes");
    }
}

std::span<const Neighbor> Graph::neighbors(NodeId u) const {
    check_node(u);
    return {adjacency_.data() + offsets_[u], adjacency_.data() + offsets_[u + 1]};
}

bool Graph::adjacent(NodeId u, NodeId v) const {
    check_node(u);
    check_node(v);
    return scaled_weight(u, v) != 0;
}

Rational Graph::weight(NodeId u, NodeId v) const {
    check_node(u);
    check_node(v);
    return from_scaled(scaled_weight(u, v));
}

Rational Graph::total_weight() const {
    Rational total;
    for (const auto& e : edges_) total += e.weight;
    return total;
}

Coalition::Coalition(std::vector<NodeId> members) : members_(std::move(members)) {
    if (members_.empty()) throw std::invalid_argument("coalition must be non-empty");
    if (members_.front() < 0) throw std::invalid_argument("negative node id in coalition");
    for (std::size_t i = 1; i < members_.size(); ++i) {
        if (members_[i] <= members_[i - 1]) {
            throw std::invalid_argument("coalition members must be strictly ascending");
        }
    }
}

Coalition Coalition::from_unsorted(std::vector<NodeId> members) {
    std::sort(members.begin(), members.end());
    return Coalition(std::move(members));
}

bool Coalition::contains(NodeId v) const { return std::binary_search(members_.begin(), members_.end(), v); }

int Coalition::index_of(NodeId v) const {
    auto it = std::lower_bound(members_.begin(), members_.end(), v);
    if (it == members_.end() || *it != v) return -1;
    return static_cast<int>(it - members_.begin());
}

void Coalition::validate_for(const Graph& g) const {
    for (auto v : members_) g.check_node(v);
}

Rational degree(const Graph& g, NodeId v) {
    g.check_node(v);
    return g.from_scaled(g.scaled_degree(v));
}

Rational max_degree(const Graph& g) {
    if (g.node_count() == 0) throw std::invalid_argument("max_degree of an empty graph");
    std::int64_t best = 0;
    for (NodeId v = 0; v < g.node_count(); ++v) best = std::max(best, g.scaled_degree(v));
    return g.from_scaled(best);
}

namespace {

std::vector<int> bfs_from(const Graph& g, NodeId src) {
    std::vector<int> dist(g.node_count(), -1);
    std::deque<NodeId> queue{src};
    dist[src] = 0;
    while (!queue.empty()) {
        NodeId u = queue.front();
        queue.pop_front();
        for (const auto& nb : g.neighbors(u)) {
            if (dist[nb.node] < 0) {
                dist[nb.node] = dist[u] + 1;
                queue.push_back(nb.node);
            }
        }
    }
    return dist;
}

}  // namespace

std::optional<int> hop_distance(const Graph& g, NodeId u, NodeId v) {
    g.check_node(u);
    g.check_node(v);
    int d = bfs_from(g, u)[v];
    if (d < 0) return std::nullopt;
    return d;
}

std::vector<int> hop_distance_matrix(const Graph& g) {
    const int n = g.node_count();
    std::vector<int> out(static_cast<std::size_t>(n) * n);
    for (NodeId s = 0; s < n; ++s) {
        auto row = bfs_from(g, s);
        std::copy(row.begin(), row.end(), out.begin() + static_cast<std::ptrdiff_t>(s) * n);
    }
    return out;
}

std::optional<int> girth(const Graph& g) {
    const int n = g.node_count();
    int best = -1;
    std::vector<int> dist(n);
    std::vector<NodeId> parent(n);
    for (NodeId root = 0; root < n; ++root) {
        std::fill(dist.begin(), dist.end(), -1);
        std::deque<NodeId> queue{root};
        dist[root] = 0;
        parent[root] = -1;
        while (!queue.empty()) {
            NodeId u = queue.front();
            queue.pop_front();
            if (best >= 0 && 2 * dist[u] >= best) break;
            for (const auto& nb : g.neighbors(u)) {
                if (dist[nb.node] < 0) {
                    dist[nb.node] = dist[u] + 1;
                    parent[nb.node] = u;
                    queue.push_back(nb.node);
                } else if (parent[u] != nb.node) {
                    int len = dist[u] + dist[nb.node] + 1;
                    if (best < 0 || len < best) best = len;
                }
            }
        }
    }
    if (best < 0) return std::nullopt;
    return best;
}

bool is_acyclic(const Graph& g) {
    std::vector<NodeId> parent(g.node_count());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](NodeId v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    };
    for (const auto& e : g.edges()) {
        NodeId a = find(e.u), b = find(e.v);
        if (a == b) return false;
        parent[a] = b;
    }
    return true;
}

bool is_connected(const Graph& g) {
    if (g.node_count() <= 1) return true;
    auto dist = bfs_from(g, 0);
    return std::none_of(dist.begin(), dist.end(), [](int d) { return d < 0; });
}

Graph induced_subgraph(const Graph& g, const Coalition& c) {
    c.validate_for(g);
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < c.size(); ++i) {
        for (std::size_t j = i + 1; j < c.size(); ++j) {
            if (g.scaled_weight(c[i], c[j]) != 0) {
                edges.push_back(Edge{static_cast<NodeId>(i), static_cast<NodeId>(j), g.weight(c[i], c[j])});
            }
        }
    }
    return Graph(static_cast<int>(c.size()), std::move(edges));
}

namespace {

// Preorder DFS over ascending extensions yields lexicographic order.
template <typename Compatible>
bool grow(int n, int max_size, std::vector<NodeId>& current, std::uint64_t& count, const Compatible& compatible,
          const CoalitionVisitor& visit) {
    NodeId start = current.empty() ? 0 : current.back() + 1;
    for (NodeId v = start; v < n; ++v) {
        bool ok = true;
        for (auto m : current) {
            if (!compatible(m, v)) {
                ok = false;
                break;
            }
        }
        if (!ok) continue;
        current.push_back(v);
        ++count;
        if (!visit(Coalition(current))) return false;
        if (static_cast<int>(current.size()) < max_size && !grow(n, max_size, current, count, compatible, visit)) {
            return false;
        }
        current.pop_back();
    }
    return true;
}

}  // namespace

std::uint64_t for_each_x_local_coalition(const Graph& g, int x, int max_size, const CoalitionVisitor& visit) {
    if (x < 1) throw std::invalid_argument("locality x must be >= 1");
    if (max_size < 1) throw std::invalid_argument("max_size must be >= 1");
    const int n = g.node_count();
    std::vector<int> dist = x == 1 ? std::vector<int>{} : hop_distance_matrix(g);
    auto compatible = [&](NodeId a, NodeId b) {
        if (x == 1) return g.scaled_weight(a, b) != 0;
        int d = dist[static_cast<std::size_t>(a) * n + b];
        return d >= 0 && d <= x;
    };
    std::vector<NodeId> current;
    std::uint64_t count = 0;
    grow(n, max_size, current, count, compatible, visit);
    return count;
}

std::vector<Coalition> enumerate_x_local_coalitions(const Graph& g, int x, int max_size) {
    std::vector<Coalition> out;
    for_each_x_local_coalition(g, x, max_size, [&](const Coalition& c) {
        out.push_back(c);
        return true;
    });
    return out;
}

std::uint64_t for_each_coalition(const Graph& g, int max_size, const CoalitionVisitor& visit) {
    if (max_size < 1) throw std::invalid_argument("max_size must be >= 1");
    std::vector<NodeId> current;
    std::uint64_t count = 0;
    grow(g.node_count(), max_size, current, count, [](NodeId, NodeId) { return true; }, visit);
    return count;
}

std::vector<Coalition> enumerate_coalitions(const Graph& g, int max_size) {
    std::vector<Coalition> out;
    for_each_coalition(g, max_size, [&](const Coalition& c) {
        out.push_back(c);
        return true;
    });
    return out;
}

bool is_clique(const Graph& g, std::span<const NodeId> nodes) {
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        for (std::size_t j = i + 1; j < nodes.size(); ++j) {
            if (g.scaled_weight(nodes[i], nodes[j]) == 0) return false;
        }
    }
    return true;
}

}  // namespace kcut
