#include "kcut/report_json.hpp"

#include <stdexcept>

namespace kcut {

json rational_to_json(const Rational& r) { return r.to_string(); }

Rational rational_from_json(const json& j) {
    if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
    return Rational::parse(j.get<std::string>());
}

json game_to_json(const GameSpec& spec) {
    json edges = json::array();
    for (const auto& e : spec.graph().edges()) edges.push_back(json::array({e.u, e.v, rational_to_json(e.weight)}));
    return {{"n", spec.n()}, {"k", spec.k()}, {"edges", std::move(edges)}};
}

GameSpec game_from_json(const json& j) {
    std::vector<Edge> edges;
    for (const auto& e : j.at("edges")) {
        if (!e.is_array() || e.size() < 2 || e.size() > 3) throw std::invalid_argument("edge must be [u, v, w?]");
        edges.push_back(Edge{e[0].get<int>(), e[1].get<int>(), e.size() == 3 ? rational_from_json(e[2]) : Rational(1)});
    }
    return GameSpec(Graph(j.at("n").get<int>(), std::move(edges)), j.at("k").get<int>());
}

json coloring_to_json(const Coloring& sigma) { return json(std::vector<Color>(sigma.colors().begin(), sigma.colors().end())); }

Coloring coloring_from_json(const json& j) { return Coloring(j.get<std::vector<Color>>()); }

json move_to_json(const JointMove& m) {
    return {{"coalition", std::vector<NodeId>(m.coalition.begin(), m.coalition.end())}, {"new_colors", m.new_colors}};
}

JointMove move_from_json(const json& j) {
    return JointMove{Coalition(j.at("coalition").get<std::vector<NodeId>>()), j.at("new_colors").get<std::vector<Color>>()};
}

namespace {

json rationals(const std::vector<Rational>& values) {
    json out = json::array();
    for (const auto& v : values) out.push_back(rational_to_json(v));
    return out;
}

std::vector<Rational> rationals_from(const json& j) {
    std::vector<Rational> out;
    for (const auto& v : j) out.push_back(rational_from_json(v));
    return out;
}

}  // namespace

json witness_to_json(const DeviationWitness& w) {
    return {{"move", move_to_json(w.move)},
            {"utilities_before", rationals(w.utilities_before)},
            {"utilities_after", rationals(w.utilities_after)},
            {"cut_before", rational_to_json(w.cut_before)},
            {"cut_after", rational_to_json(w.cut_after)},
            {"cut_delta", rational_to_json(w.cut_delta())}};
}

DeviationWitness witness_from_json(const json& j) {
    return DeviationWitness{move_from_json(j.at("move")), rationals_from(j.at("utilities_before")),
                            rationals_from(j.at("utilities_after")), rational_from_json(j.at("cut_before")),
                            rational_from_json(j.at("cut_after"))};
}

json concept_to_json(const Concept& c) { return c.to_string(); }

Concept concept_from_json(const json& j) { return Concept::parse(j.get<std::string>()); }

json report_to_json(const EquilibriumReport& r) {
    json out{{"concept", concept_to_json(r.criterion)},
             {"verdict", r.verdict},
             {"counts", {{"coalitions_examined", r.coalitions_examined}}}};
    if (r.witness) out["witness"] = witness_to_json(*r.witness);
    return out;
}

EquilibriumReport report_from_json(const json& j) {
    EquilibriumReport r;
    r.criterion = concept_from_json(j.at("concept"));
    r.verdict = j.at("verdict").get<bool>();
    r.coalitions_examined = j.at("counts").at("coalitions_examined").get<std::uint64_t>();
    if (j.contains("witness")) r.witness = witness_from_json(j.at("witness"));
    return r;
}

namespace {

DynamicsStatus status_from(const std::string& s) {
    for (auto st : {DynamicsStatus::Converged, DynamicsStatus::Cycle, DynamicsStatus::BudgetExhausted,
                    DynamicsStatus::ScriptExhausted, DynamicsStatus::ScriptRejected}) {
        if (to_string(st) == s) return st;
    }
    throw std::invalid_argument("unknown dynamics status '" + s + "'");
}

}  // namespace

json trace_to_json(const DynamicsTrace& t) {
    json policy{{"mode", t.policy.to_string()},
                {"selection", t.policy.selection == Selection::Lexicographic ? "lexicographic" : "seeded-random"},
                {"seed", t.policy.seed}};
    if (t.policy.mode == PolicyMode::Scripted) {
        json script = json::array();
        for (const auto& m : t.policy.script) script.push_back(move_to_json(m));
        policy["script"] = std::move(script);
    }
    json steps = json::array();
    for (const auto& s : t.steps) {
        steps.push_back({{"move", move_to_json(s.move)},
                         {"coloring", coloring_to_json(s.coloring)},
                         {"cut", rational_to_json(s.cut)}});
    }
    json out{{"policy", std::move(policy)},
             {"initial", coloring_to_json(t.initial)},
             {"initial_cut", rational_to_json(t.initial_cut)},
             {"steps", std::move(steps)},
             {"status", to_string(t.status)},
             {"potential_decreases", t.potential_decreases}};
    if (t.first_repeat_index) out["first_repeat_index"] = *t.first_repeat_index;
    return out;
}

DynamicsTrace trace_from_json(const json& j) {
    DynamicsTrace t;
    const json& p = j.at("policy");
    const std::string mode = p.at("mode").get<std::string>();
    if (mode == "scripted") {
        std::vector<JointMove> script;
        for (const auto& m : p.at("script")) script.push_back(move_from_json(m));
        t.policy = Policy::scripted(std::move(script));
    } else {
        t.policy = Policy::parse(mode);
    }
    if (p.at("selection").get<std::string>() == "seeded-random") t.policy = t.policy.with_random(p.at("seed"));
    t.initial = coloring_from_json(j.at("initial"));
    t.initial_cut = rational_from_json(j.at("initial_cut"));
    for (const auto& s : j.at("steps")) {
        t.steps.push_back(TraceStep{move_from_json(s.at("move")), coloring_from_json(s.at("coloring")),
                                    rational_from_json(s.at("cut"))});
    }
    t.status = status_from(j.at("status").get<std::string>());
    t.potential_decreases = j.at("potential_decreases").get<std::vector<std::size_t>>();
    if (j.contains("first_repeat_index")) t.first_repeat_index = j.at("first_repeat_index").get<std::size_t>();
    return t;
}

std::string falsification_witness_json(const GameSpec& spec, const Coloring& sigma, const JointMove& m) {
    json out{{"game", game_to_json(spec)}, {"coloring", coloring_to_json(sigma)}, {"move", move_to_json(m)}};
    return out.dump();
}

}  // namespace kcut
