#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace dicol {

using Vertex = int;

/// Malformed input text. Carries the 1-based line number when known.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, int line = 0)
        : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
          line_(line)
    {
    }

    int line() const noexcept { return line_; }

private:
    int line_;
};

/// An algorithm was handed an instance outside its domain, e.g. a
/// non-chordal underlying graph. The witness certifies the violation.
class PreconditionError : public std::runtime_error {
public:
    PreconditionError(const std::string& what, std::vector<Vertex> witness = {})
        : std::runtime_error(what), witness_(std::move(witness))
    {
    }

    const std::vector<Vertex>& witness() const noexcept { return witness_; }

private:
    std::vector<Vertex> witness_;
};

} // namespace dicol
