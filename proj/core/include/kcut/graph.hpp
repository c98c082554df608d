#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "kcut/rational.hpp"

namespace kcut {

using NodeId = int;

struct Edge {
    NodeId u = 0;
    NodeId v = 0;
    Rational weight{1};

    friend bool operator==(const Edge&, const Edge&) = default;
};

struct Neighbor {
    NodeId node = 0;
    Rational weight{1};
};

/// Immutable undirected graph on nodes 0..n-1 with strictly positive exact
/// weights.
///
/// Besides the rational view, every weight is also available as an integer
/// scaled by `scale()` (the lcm of all denominators). Game code compares
/// utilities in that integer domain; the two views are exactly equivalent.
class Graph {
public:
    Graph() = default;

    /// Throws std::invalid_argument on self-loops, duplicate pairs,
    /// out-of-range ids or non-positive weights. Edges are stored with
    /// u < v, sorted.
    explicit Graph(int node_count, std::vector<Edge> edges = {});

    int node_count() const noexcept { return n_; }
    std::size_t edge_count() const noexcept { return edges_.size(); }
    const std::vector<Edge>& edges() const noexcept { return edges_; }

    std::span<const Neighbor> neighbors(NodeId u) const;

    /// True iff every weight equals 1.
    bool unweighted() const noexcept { return unweighted_; }

    bool adjacent(NodeId u, NodeId v) const;
    /// Zero when {u,v} is not an edge.
    Rational weight(NodeId u, NodeId v) const;

    std::int64_t scale() const noexcept { return scale_; }
    std::int64_t scaled_weight(NodeId u, NodeId v) const noexcept {
        return scaled_[static_cast<std::size_t>(u) * n_ + v];
    }
    std::int64_t scaled_degree(NodeId u) const noexcept { return scaled_degree_[u]; }
    Rational from_scaled(std::int64_t value) const { return Rational(value, scale_); }

    Rational total_weight() const;

    void check_node(NodeId v) const;

private:
    int n_ = 0;
    bool unweighted_ = true;
    std::int64_t scale_ = 1;
    std::vector<Edge> edges_;
    std::vector<std::size_t> offsets_;
    std::vector<Neighbor> adjacency_;
    std::vector<std::int64_t> scaled_;
    std::vector<std::int64_t> scaled_degree_;
};

/// Non-empty, strictly ascending set of node ids.
class Coalition {
public:
    /// Throws std::invalid_argument if `members` is empty, unsorted or has
    /// duplicates or negative ids.
    explicit Coalition(std::vector<NodeId> members);

    static Coalition from_unsorted(std::vector<NodeId> members);

    std::span<const NodeId> members() const noexcept { return members_; }
    std::size_t size() const noexcept { return members_.size(); }
    NodeId operator[](std::size_t i) const { return members_[i]; }
    auto begin() const noexcept { return members_.begin(); }
    auto end() const noexcept { return members_.end(); }

    bool contains(NodeId v) const;
    /// Position of v in the member list, or -1.
    int index_of(NodeId v) const;

    /// Throws std::out_of_range if any member is not a node of g.
    void validate_for(const Graph& g) const;

    friend bool operator==(const Coalition&, const Coalition&) = default;
    friend auto operator<=>(const Coalition&, const Coalition&) = default;

private:
    std::vector<NodeId> members_;
};

Rational degree(const Graph& g, NodeId v);
Rational max_degree(const Graph& g);

/// Hop distance; nullopt stands for infinity (different components).
std::optional<int> hop_distance(const Graph& g, NodeId u, NodeId v);

/// All-pairs hop distances, row-major n*n, -1 for unreachable.
std::vector<int> hop_distance_matrix(const Graph& g);

/// Shortest cycle length; nullopt on forests.
std::optional<int> girth(const Graph& g);

bool is_acyclic(const Graph& g);
bool is_connected(const Graph& g);

/// Nodes relabeled 0..|C|-1 in member order, original weights kept.
Graph induced_subgraph(const Graph& g, const Coalition& c);

/// Visitor returns false to stop the enumeration early.
using CoalitionVisitor = std::function<bool(const Coalition&)>;

/// Every coalition with 1 <= |C| <= max_size whose members are pairwise
/// within hop distance x, each once, in lexicographic order of member
/// lists. For x = 1 these are the non-empty cliques. Returns the number
/// visited.
std::uint64_t for_each_x_local_coalition(const Graph& g, int x, int max_size, const CoalitionVisitor& visit);
std::vector<Coalition> enumerate_x_local_coalitions(const Graph& g, int x, int max_size);

/// Every non-empty subset of V with size <= max_size, lexicographic.
std::uint64_t for_each_coalition(const Graph& g, int max_size, const CoalitionVisitor& visit);
std::vector<Coalition> enumerate_coalitions(const Graph& g, int max_size);

bool is_clique(const Graph& g, std::span<const NodeId> nodes);

}  // namespace kcut

template <>
struct std::hash<kcut::Coalition> {
    std::size_t operator()(const kcut::Coalition& c) const noexcept {
        std::size_t h = 1469598103934665603ull;
        for (auto v : c) h = (h ^ static_cast<std::size_t>(v)) * 1099511628211ull;
        return h;
    }
};
