#include "kcut/io.hpp"

#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>
#include <vector>

#include "kcut/errors.hpp"

namespace kcut {

namespace {

std::vector<std::string_view> tokens(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
        if (j > i) out.push_back(line.substr(i, j - i));
        i = j;
    }
    return out;
}

// Calls f(line_number, tokens) for each non-blank, non-comment line.
template <typename F>
void for_each_line(std::string_view text, F&& f) {
    int number = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        ++number;
        std::string_view line = text.substr(start, end - start);
        if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        auto toks = tokens(line);
        if (!toks.empty()) f(number, toks);
        if (end == text.size()) break;
        start = end + 1;
    }
}

int parse_int(std::string_view tok, int line, const char* what) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
        throw ParseError(line, std::string("expected integer ") + what + ", got '" + std::string(tok) + "'");
    }
    return value;
}

}  // namespace

GameSpec parse_game(std::string_view text) {
    std::optional<std::pair<int, int>> header;
    std::vector<Edge> edges;
    std::vector<int> edge_lines;
    for_each_line(text, [&](int line, const std::vector<std::string_view>& t) {
        if (t[0] == "kcut") {
            if (header) throw ParseError(line, "duplicate header");
            if (t.size() != 3) throw ParseError(line, "header must be 'kcut <n> <k>'");
            int n = parse_int(t[1], line, "node count");
            int k = parse_int(t[2], line, "color count");
            if (n < 0) throw ParseError(line, "node count must be non-negative");
            if (k < 2) throw ParseError(line, "k must be at least 2");
            header.emplace(n, k);
        } else if (t[0] == "edge") {
            if (!header) throw ParseError(line, "edge before 'kcut <n> <k>' header");
            if (t.size() != 3 && t.size() != 4) throw ParseError(line, "edge must be 'edge <u> <v> [<w>]'");
            Edge e{parse_int(t[1], line, "node id"), parse_int(t[2], line, "node id"), Rational(1)};
            if (e.u < 0 || e.u >= header->first || e.v < 0 || e.v >= header->first) {
                throw ParseError(line, "node id out of range 0.." + std::to_string(header->first - 1));
            }
            if (e.u == e.v) throw ParseError(line, "self-loop");
            if (t.size() == 4) {
                try {
                    e.weight = Rational::parse(std::string(t[3]));
                } catch (const std::exception& ex) {
                    throw ParseError(line, "bad weight '" + std::string(t[3]) + "': " + ex.what());
                }
                if (e.weight.sign() <= 0) throw ParseError(line, "weight must be positive");
            }
            for (std::size_t i = 0; i < edges.size(); ++i) {
                if ((edges[i].u == e.u && edges[i].v == e.v) || (edges[i].u == e.v && edges[i].v == e.u)) {
                    throw ParseError(line, "duplicate edge (first on line " + std::to_string(edge_lines[i]) + ")");
                }
            }
            edges.push_back(e);
            edge_lines.push_back(line);
        } else {
            throw ParseError(line, "unknown directive '" + std::string(t[0]) + "'");
        }
    });
    if (!header) throw ParseError(0, "missing 'kcut <n> <k>' header");
    return GameSpec(Graph(header->first, std::move(edges)), header->second);
}

std::string format_game(const GameSpec& spec) {
    std::ostringstream out;
    out << "kcut " << spec.n() << ' ' << spec.k() << '\n';
    for (const auto& e : spec.graph().edges()) {
        out << "edge " << e.u << ' ' << e.v;
        if (e.weight != Rational(1)) out << ' ' << e.weight;
        out << '\n';
    }
    return out.str();
}

Coloring parse_coloring(std::string_view text, const GameSpec& spec) {
    std::vector<Color> colors(static_cast<std::size_t>(spec.n()), 0);
    for_each_line(text, [&](int line, const std::vector<std::string_view>& t) {
        if (t[0] != "color" || t.size() != 3) throw ParseError(line, "expected 'color <u> <c>'");
        int u = parse_int(t[1], line, "node id");
        int c = parse_int(t[2], line, "color");
        if (u < 0 || u >= spec.n()) throw ParseError(line, "node id out of range 0.." + std::to_string(spec.n() - 1));
        if (c < 1 || c > spec.k()) throw ParseError(line, "color out of range 1.." + std::to_string(spec.k()));
        if (colors[u] != 0) throw ParseError(line, "node " + std::to_string(u) + " colored twice");
        colors[u] = c;
    });
    for (NodeId u = 0; u < spec.n(); ++u) {
        if (colors[u] == 0) throw ParseError(0, "node " + std::to_string(u) + " has no color");
    }
    return Coloring(std::move(colors));
}

std::string format_coloring(const Coloring& sigma) {
    std::ostringstream out;
    for (std::size_t u = 0; u < sigma.size(); ++u) out << "color " << u << ' ' << sigma[static_cast<NodeId>(u)] << '\n';
    return out.str();
}

std::string read_text_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

GameSpec read_game_file(const std::filesystem::path& path) { return parse_game(read_text_file(path)); }

Coloring read_coloring_file(const std::filesystem::path& path, const GameSpec& spec) {
    return parse_coloring(read_text_file(path), spec);
}

std::string format_trace(const DynamicsTrace& trace) {
    std::ostringstream out;
    out << "# policy " << trace.policy.to_string() << '\n';
    out << "0 start cut=" << trace.initial_cut << " coloring=" << trace.initial.to_string() << '\n';
    for (std::size_t t = 0; t < trace.steps.size(); ++t) {
        const auto& s = trace.steps[t];
        out << t + 1 << " move {";
        for (std::size_t i = 0; i < s.move.coalition.size(); ++i) {
            out << (i ? " " : "") << s.move.coalition[i] << "->" << s.move.new_colors[i];
        }
        out << "} cut=" << s.cut << " coloring=" << s.coloring.to_string() << '\n';
    }
    out << "# status " << to_string(trace.status);
    if (trace.first_repeat_index) out << " repeats state " << *trace.first_repeat_index;
    out << '\n';
    return out.str();
}

}  // namespace kcut
