#include <stdexcept>

#include "kcut/search.hpp"

namespace kcut {

namespace {

// Clique a..g, then h, i, l, m, n, o, then the pads, one private helper per
// attached player, and a single node colored 1 that the helpers lean on.
struct Layout {
    int pads;
    NodeId clique(int i) const { return i; }
    NodeId attached(int i) const { return 7 + i; }
    NodeId pad(Color c, int j) const { return 13 + (c - 2) * pads + j; }
    NodeId helper(int i) const { return 13 + 6 * pads + i; }
    NodeId anchor() const { return 13 + 6 * pads + 6; }
    int size() const { return anchor() + 1; }
};

std::optional<CutDecreaseInstance> build(int pads) {
    const Layout at{pads};
    std::vector<Edge> edges;
    auto link = [&](NodeId u, NodeId v) { edges.push_back(Edge{u, v, Rational(1)}); };
    std::vector<Color> colors(static_cast<std::size_t>(at.size()), 1);

    for (int i = 0; i < 7; ++i) {
        for (int j = i + 1; j < 7; ++j) link(at.clique(i), at.clique(j));
    }
    for (Color c = 2; c <= 7; ++c) {
        for (int j = 0; j < pads; ++j) colors[at.pad(c, j)] = c;
    }
    for (int i = 0; i < 6; ++i) {
        // Attached player i sits in color i + 2 between clique members i and
        // i + 1 (the last one closes the ring back to a).
        const Color own = i + 2;
        const NodeId x = at.attached(i);
        colors[x] = own;
        colors[at.helper(i)] = own;
        link(x, at.clique(i));
        link(x, at.clique((i + 1) % 6));
        link(x, at.helper(i));
        link(at.helper(i), at.anchor());
        for (Color c = 2; c <= 7; ++c) {
            if (c == own) continue;
            link(x, at.pad(c, 1));
            link(at.helper(i), at.pad(c, 0));
        }
        // Clique member i targets color i + 2: it sees one pad fewer there,
        // so it only gains once the attached player of that color leaves.
        for (Color c = 2; c <= 7; ++c) {
            const int count = c == own ? pads - 1 : pads;
            for (int j = 0; j < count; ++j) link(at.clique(i), at.pad(c, j));
        }
    }
    for (Color c = 2; c <= 7; ++c) {
        for (int j = 0; j < pads; ++j) link(at.clique(6), at.pad(c, j));
    }

    GameSpec spec(Graph(at.size(), std::move(edges)), 7);
    Coloring sigma(std::move(colors));
    std::vector<NodeId> members;
    std::vector<Color> targets;
    for (int i = 0; i < 6; ++i) {
        members.push_back(at.clique(i));
        targets.push_back(i + 2);
    }
    for (int i = 0; i < 6; ++i) {
        members.push_back(at.attached(i));
        targets.push_back(1);
    }
    JointMove move{Coalition(std::move(members)), std::move(targets)};
    if (!is_nash(spec, sigma).verdict) return std::nullopt;
    if (!is_strong_improvement(spec, sigma, move) || !is_minimal(spec, sigma, move)) return std::nullopt;
    if (cut_value(spec, apply_move(sigma, move)) - cut_value(spec, sigma) != Rational(-3)) return std::nullopt;
    return CutDecreaseInstance{std::move(spec), std::move(sigma), std::move(move), pads};
}

}  // namespace

CutDecreaseInstance reconstruct_cut_decrease_instance() {
    for (int pads = 2; pads <= 12; ++pads) {
        if (auto found = build(pads)) return std::move(*found);
    }
    throw std::runtime_error("no pad count up to 12 yields a validated cut-decreasing minimal improvement");
}

}  // namespace kcut
