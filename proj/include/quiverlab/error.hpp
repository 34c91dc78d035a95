#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace quiverlab {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Carrier sets of two maps (or a map and a quiver) do not line up.
class DomainMismatch : public Error {
public:
  using Error::Error;
};

/// A value violates a structural invariant: duplicate or malformed label,
/// a function that is not total, an edge naming an undeclared vertex.
class ConstraintError : public Error {
public:
  using Error::Error;
};

enum class Side { Source, Target };

inline const char* to_string(Side side) noexcept {
  return side == Side::Source ? "source" : "target";
}

/// One of the two commuting squares of a quiver map fails at `edge`:
/// `lhs` is vertex_map(side(edge)), `rhs` is side'(edge_map(edge)).
class SquareViolation : public Error {
public:
  SquareViolation(std::string edge, Side side, std::string lhs, std::string rhs)
      : Error("square violation at edge '" + edge + "' (" + to_string(side) + "): vertex map sends " +
              to_string(side) + "(" + edge + ") to '" + lhs + "' but " + to_string(side) +
              "(edge map(" + edge + ")) is '" + rhs + "'"),
        edge_(std::move(edge)), side_(side), lhs_(std::move(lhs)), rhs_(std::move(rhs)) {}

  const std::string& edge() const noexcept { return edge_; }
  Side side() const noexcept { return side_; }
  const std::string& lhs() const noexcept { return lhs_; }
  const std::string& rhs() const noexcept { return rhs_; }

private:
  std::string edge_;
  Side side_;
  std::string lhs_;
  std::string rhs_;
};

/// A brute-force search would exceed the configured size caps.
class CapExceeded : public Error {
public:
  CapExceeded(std::string what_cap, std::uint64_t size, std::uint64_t cap)
      : Error("search space of " + std::to_string(size) + " exceeds " + what_cap + " cap of " +
              std::to_string(cap)),
        size_(size), cap_(cap) {}

  std::uint64_t size() const noexcept { return size_; }
  std::uint64_t cap() const noexcept { return cap_; }

private:
  std::uint64_t size_;
  std::uint64_t cap_;
};

/// A categorical law failed on a concrete instance.
class LawViolation : public Error {
public:
  LawViolation(std::string law, std::string witnesses, std::string lhs, std::string rhs)
      : Error("law '" + law + "' violated for " + witnesses + ": " + lhs + " != " + rhs),
        law_(std::move(law)), witnesses_(std::move(witnesses)), lhs_(std::move(lhs)),
        rhs_(std::move(rhs)) {}

  const std::string& law() const noexcept { return law_; }
  const std::string& witnesses() const noexcept { return witnesses_; }
  const std::string& lhs() const noexcept { return lhs_; }
  const std::string& rhs() const noexcept { return rhs_; }

private:
  std::string law_;
  std::string witnesses_;
  std::string lhs_;
  std::string rhs_;
};

/// Malformed quiver or morphism document. Line and column are 1-based;
/// `source` names the file when known.
class ParseError : public Error {
public:
  ParseError(std::size_t line, std::size_t column, const std::string& message, const std::string& source = {})
      : Error((source.empty() ? "" : source + ":") + std::to_string(line) + ":" + std::to_string(column) + ": " +
              message),
        line_(line), column_(column), message_(message) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }
  const std::string& message() const noexcept { return message_; }

private:
  std::size_t line_;
  std::size_t column_;
  std::string message_;
};

/// A file could not be read.
class IoError : public Error {
public:
  using Error::Error;
};

}  // namespace quiverlab
