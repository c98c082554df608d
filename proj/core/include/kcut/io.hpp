#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "kcut/dynamics.hpp"

namespace kcut {

// Graph files:
//
//   # comment
//   kcut <n> <k>
//   edge <u> <v> [<w>]      w is an integer or p/q, default 1
//
// Coloring files hold one `color <u> <c>` line per node. Both formats
// accept blank lines and `#` comments anywhere.

/// Throws ParseError with the offending 1-based line number.
GameSpec parse_game(std::string_view text);
std::string format_game(const GameSpec& spec);

/// Every node must be assigned exactly once. Throws ParseError.
Coloring parse_coloring(std::string_view text, const GameSpec& spec);
std::string format_coloring(const Coloring& sigma);

/// Throws std::runtime_error when the file cannot be read.
std::string read_text_file(const std::filesystem::path& path);
GameSpec read_game_file(const std::filesystem::path& path);
Coloring read_coloring_file(const std::filesystem::path& path, const GameSpec& spec);

/// One line per step: index, coalition, new colors, cut after, coloring.
std::string format_trace(const DynamicsTrace& trace);

}  // namespace kcut
