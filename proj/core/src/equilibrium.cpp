#include "kcut/equilibrium.hpp"

#include <charconv>
#include <stdexcept>

#include "detail/scan.hpp"
#include "kcut/errors.hpp"
#include "kcut/report_json.hpp"

namespace kcut {

std::string Concept::to_string() const {
    switch (kind) {
        case ConceptKind::Nash: return "ne";
        case ConceptKind::QStrong: return "qse:" + std::to_string(param);
        case ConceptKind::LocalStrong: return "lse:" + std::to_string(param);
        case ConceptKind::Strong: return "se";
    }
    return "?";
}

Concept Concept::parse(const std::string& text) {
    if (text == "ne") return nash();
    if (text == "se") return strong();
    if (text == "lse") return local_strong(1);
    auto colon = text.find(':');
    if (colon != std::string::npos) {
        const std::string head = text.substr(0, colon);
        const std::string tail = text.substr(colon + 1);
        int value = 0;
        auto [ptr, ec] = std::from_chars(tail.data(), tail.data() + tail.size(), value);
        if (ec == std::errc{} && ptr == tail.data() + tail.size() && value >= 1) {
            if (head == "qse") return q_strong(value);
            if (head == "lse") return local_strong(value);
        }
    }
    throw std::invalid_argument("unknown concept '" + text + "' (expected ne, qse:Q, lse:X or se)");
}

namespace {

EquilibriumReport scan_report(const GameSpec& spec, const Coloring& sigma, const Concept& criterion, int max_size,
                              auto&& compatible) {
    detail::CostTable table(spec, sigma);
    const auto candidates = detail::improvable_nodes(spec, table);
    EquilibriumReport report{criterion, true, std::nullopt, 0};
    std::optional<JointMove> found;
    auto stats = detail::scan_strong_improvements(
        spec, sigma, table, candidates, max_size, compatible,
        [&](std::span<const NodeId> members, std::span<const Color> colors) {
            found = JointMove{Coalition(std::vector<NodeId>(members.begin(), members.end())),
                              std::vector<Color>(colors.begin(), colors.end())};
            return false;
        });
    report.coalitions_examined = stats.coalitions;
    if (found) {
        report.verdict = false;
        report.witness = make_witness(spec, sigma, *found);
    }
    return report;
}

std::uint64_t binomial(int n, int r) {
    std::uint64_t out = 1;
    for (int i = 1; i <= r; ++i) out = out * static_cast<std::uint64_t>(n - r + i) / static_cast<std::uint64_t>(i);
    return out;
}

std::uint64_t move_count(int n, int k, int q) {
    std::uint64_t total = 0;
    std::uint64_t power = 1;
    for (int s = 1; s <= q; ++s) {
        power = saturating_mul(power, static_cast<std::uint64_t>(k - 1));
        total = saturating_add(total, saturating_mul(binomial(n, s), power));
    }
    return total;
}

}  // namespace

EquilibriumReport is_nash(const GameSpec& spec, const Coloring& sigma) {
    spec.validate(sigma);
    return scan_report(spec, sigma, Concept::nash(), 1, detail::any_coalition());
}

EquilibriumReport is_q_strong(const GameSpec& spec, const Coloring& sigma, int q, std::uint64_t budget) {
    spec.validate(sigma);
    if (q < 1 || q > spec.n()) {
        throw std::invalid_argument("q = " + std::to_string(q) + " outside 1.." + std::to_string(spec.n()));
    }
    const std::uint64_t moves = move_count(spec.n(), spec.k(), q);
    if (moves > budget) {
        throw BudgetExceeded("q-SE check needs " + std::to_string(moves) + " joint moves, budget is " +
                             std::to_string(budget));
    }
    return scan_report(spec, sigma, Concept::q_strong(q), q, detail::any_coalition());
}

EquilibriumReport is_local_strong(const GameSpec& spec, const Coloring& sigma, int x) {
    spec.validate(sigma);
    if (x < 1) throw std::invalid_argument("locality x must be >= 1");
    const Graph& g = spec.graph();
    const int n = spec.n();
    if (x == 1) {
        return scan_report(spec, sigma, Concept::local_strong(1), n,
                           [&](std::span<const NodeId> prefix, NodeId v) {
                               for (auto u : prefix) {
                                   if (g.scaled_weight(u, v) == 0) return false;
                               }
                               return true;
                           });
    }
    const auto dist = hop_distance_matrix(g);
    return scan_report(spec, sigma, Concept::local_strong(x), n, [&](std::span<const NodeId> prefix, NodeId v) {
        for (auto u : prefix) {
            const int d = dist[static_cast<std::size_t>(u) * n + v];
            if (d < 0 || d > x) return false;
        }
        return true;
    });
}

EquilibriumReport is_strong(const GameSpec& spec, const Coloring& sigma, std::uint64_t budget) {
    spec.validate(sigma);
    if (spec.n() == 0) return EquilibriumReport{Concept::strong(), true, std::nullopt, 0};
    auto report = is_q_strong(spec, sigma, spec.n(), budget);
    report.criterion = Concept::strong();
    return report;
}

EquilibriumReport check_concept(const GameSpec& spec, const Coloring& sigma, const Concept& wanted,
                                std::uint64_t budget) {
    switch (wanted.kind) {
        case ConceptKind::Nash: return is_nash(spec, sigma);
        case ConceptKind::QStrong: return is_q_strong(spec, sigma, wanted.param, budget);
        case ConceptKind::LocalStrong: return is_local_strong(spec, sigma, wanted.param);
        case ConceptKind::Strong: return is_strong(spec, sigma, budget);
    }
    throw std::invalid_argument("unknown concept kind");
}

bool revalidate(const GameSpec& spec, const Coloring& sigma, const EquilibriumReport& report) {
    if (report.verdict) return !report.witness.has_value();
    if (!report.witness || !revalidate(spec, sigma, *report.witness)) return false;
    const Coalition& c = report.witness->move.coalition;
    const int size = static_cast<int>(c.size());
    switch (report.criterion.kind) {
        case ConceptKind::Nash: return size == 1;
        case ConceptKind::QStrong: return size <= report.criterion.param;
        case ConceptKind::Strong: return size <= spec.n();
        case ConceptKind::LocalStrong:
            for (std::size_t i = 0; i < c.size(); ++i) {
                for (std::size_t j = i + 1; j < c.size(); ++j) {
                    auto d = hop_distance(spec.graph(), c[i], c[j]);
                    if (!d || *d > report.criterion.param) return false;
                }
            }
            return true;
    }
    return false;
}

std::string to_string(Region r) {
    switch (r) {
        case Region::NotNash: return "not-NE";
        case Region::Nash: return "NE";
        case Region::TwoStrong: return "2-SE";
        case Region::LocalStrong: return "LSE";
        case Region::KStrong: return "k-SE";
        case Region::Strong: return "SE";
    }
    return "?";
}

Classification classify(const GameSpec& spec, const Coloring& sigma, std::uint64_t budget) {
    spec.validate(sigma);
    Classification out;
    const int n = spec.n();
    if (n == 0) {
        out = {Region::Strong, true, true, true, true, true};
        return out;
    }
    const auto ne = is_nash(spec, sigma);
    const auto two = is_q_strong(spec, sigma, std::min(2, n), budget);
    const auto lse = is_local_strong(spec, sigma, 1);
    const auto kse = is_q_strong(spec, sigma, std::min(spec.k(), n), budget);
    const auto se = is_strong(spec, sigma, budget);
    out.nash = ne.verdict;
    out.two_strong = two.verdict;
    out.local_strong = lse.verdict;
    out.k_strong = kse.verdict;
    out.strong = se.verdict;

    auto falsified = [&](const std::string& what, const EquilibriumReport& failing) {
        throw FalsificationError(what, falsification_witness_json(spec, sigma, failing.witness->move));
    };
    if (out.local_strong && !out.two_strong) falsified("an LSE that is not a 2-SE", two);
    if (spec.graph().unweighted() && out.k_strong && !out.local_strong) falsified("a k-SE that is not an LSE", lse);

    const bool chain[] = {out.nash, out.two_strong, out.local_strong, out.k_strong, out.strong};
    out.region = Region::NotNash;
    for (int level = 0; level < 5 && chain[level]; ++level) out.region = static_cast<Region>(level + 1);
    return out;
}

bool degree_condition_guarantees_se(const GameSpec& spec) {
    if (!spec.graph().unweighted()) throw PreconditionError("the degree condition is stated for unweighted graphs");
    const std::int64_t max_deg = max_degree(spec.graph()).num();
    return 2 * static_cast<std::int64_t>(spec.k()) >= max_deg + 1;
}

GirthGuarantee girth_guarantee(const GameSpec& spec) {
    if (!spec.graph().unweighted()) throw PreconditionError("the girth guarantee is stated for unweighted graphs");
    GirthGuarantee out;
    out.girth = girth(spec.graph());
    if (!out.girth) {
        out.q_guaranteed = spec.n();
        out.se_guaranteed = true;
    } else {
        out.q_guaranteed = 2 * *out.girth - 3;
        out.se_guaranteed = 2 * *out.girth >= spec.n() + 3;
    }
    return out;
}

}  // namespace kcut
