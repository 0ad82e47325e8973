#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace specnet {

enum class Errc {
    SelfLoop,
    DuplicateEdge,
    OutOfRange,
    MissingEdge,
    EmptyGraph,
    ZeroMeanDegree,
    ParseError,
    NotConverged,
    TooFewNodes,
    ZeroDegreeSum,
    NoCandidate,
    LengthMismatch,
    ConstantSeries,
    StepMismatch,
    InvalidConfig,
};

std::string_view to_string(Errc code) noexcept;

/// Base of every error raised by the library. `code()` identifies the failure
/// kind so callers can branch without string matching.
class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

/// Edge-list ingestion failure. `code()` is ParseError for malformed text, or
/// the graph error (SelfLoop, DuplicateEdge, OutOfRange) raised while
/// building the graph. `line()` is 1-based.
class ParseError : public Error {
public:
    ParseError(Errc code, std::size_t line, const std::string& what)
        : Error(code, "line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

}  // namespace specnet
