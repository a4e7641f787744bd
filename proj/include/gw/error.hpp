#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace gw {

/// Parameter out of range, unknown vertex, self-loop and similar misuse.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Malformed serialized graph. line/column are 1-based; 0 means unknown.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : std::runtime_error(what + " (line " + std::to_string(line) + ", column " +
                           std::to_string(column) + ")"),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// A tower cannot supply the requested number of spread vertices.
class CapacityError : public std::runtime_error {
 public:
  CapacityError(std::size_t requested, std::size_t achieved)
      : std::runtime_error("spread selection supplied " + std::to_string(achieved) + " of " +
                           std::to_string(requested) + " requested vertices"),
        requested_(requested),
        achieved_(achieved) {}

  std::size_t requested() const noexcept { return requested_; }
  std::size_t achieved() const noexcept { return achieved_; }

 private:
  std::size_t requested_;
  std::size_t achieved_;
};

/// Input is not a chain of the expected shape; step names where decoding stopped.
class DecodeError : public std::runtime_error {
 public:
  DecodeError(std::string step, const std::string& detail)
      : std::runtime_error("decode failed at " + step + ": " + detail), step_(std::move(step)) {}

  const std::string& step() const noexcept { return step_; }

 private:
  std::string step_;
};

/// A verification precondition does not hold on the given input.
class PreconditionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace gw
