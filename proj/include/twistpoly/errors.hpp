#pragma once

#include <stdexcept>
#include <string>

namespace twistpoly {

// Base class for everything this library throws on bad input or misuse.
// Internal logic errors use assert, not exceptions.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed token text. Positions are 1-based; column points at the first
// character of the offending token.
struct SyntaxError : Error {
  int line;
  int column;
  SyntaxError(int line_, int column_, const std::string& what_)
      : Error("line " + std::to_string(line_) + ", column " + std::to_string(column_) + ": " + what_),
        line(line_),
        column(column_) {}
};

// Structurally well-formed input that violates a Gauss-code invariant
// (crossing id multiplicity, duplicate role, sign mismatch).
struct ValidationError : Error {
  using Error::Error;
};

// A move site that does not match the code it is applied to.
struct InvalidSite : Error {
  using Error::Error;
};

// A smoothing state missing a choice for some crossing.
struct IncompleteState : Error {
  using Error::Error;
};

// A circle word with an odd number of cusps; state tracing never produces one.
struct OddCuspCount : Error {
  using Error::Error;
};

// State-sum size guard tripped (see max_crossings arguments).
struct TooManyCrossings : Error {
  using Error::Error;
};

// A cut-point operation applied to a diagram that already carries bars.
struct HasBars : Error {
  using Error::Error;
};

struct UnknownCrossing : Error {
  using Error::Error;
};

struct TooFewCutPoints : Error {
  using Error::Error;
};

// Framing-graph search exceeded its node budget.
struct SearchBudgetExceeded : Error {
  using Error::Error;
};

// A framing that does not belong to the given diagram.
struct NotAFraming : Error {
  using Error::Error;
};

// A braid relation that does not match the word at the given position.
struct NoMatch : Error {
  using Error::Error;
};

// A braid letter index outside the strand range.
struct IndexOutOfRange : Error {
  using Error::Error;
};

}  // namespace twistpoly
