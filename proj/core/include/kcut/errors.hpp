#pragma once

#include <stdexcept>
#include <string>

namespace kcut {

/// A caller broke an operation's documented precondition (e.g. a lemma
/// checker fed a non-NE profile or a weighted graph).
class PreconditionError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// An enumeration would exceed its configured search-size guard.
class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A proven result failed on a concrete instance. Carries the serialized
/// witness so the harness can surface it verbatim.
class FalsificationError : public std::runtime_error {
public:
    FalsificationError(const std::string& what, std::string witness_json)
        : std::runtime_error(what), witness_json_(std::move(witness_json)) {}

    const std::string& witness_json() const noexcept { return witness_json_; }

private:
    std::string witness_json_;
};

/// Malformed graph or coloring text; `line` is 1-based (0 when unknown).
class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& msg)
        : std::runtime_error("line " + std::to_string(line) + ": " + msg), line_(line) {}

    int line() const noexcept { return line_; }

private:
    int line_;
};

}  // namespace kcut
