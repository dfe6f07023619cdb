#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace fracdef {

enum class ParseErrorKind {
  BadHeader,
  BadToken,
  EndpointRange,
  SelfLoop,
  DuplicateEdge,
  EdgeCount,
  ColumnCount,
  NegativeEntry,
  RowSum,
  BadRational,
};

class ParseError : public std::runtime_error {
public:
  ParseError(ParseErrorKind kind, int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        kind_(kind),
        line_(line) {}

  ParseErrorKind kind() const { return kind_; }
  int line() const { return line_; }

private:
  ParseErrorKind kind_;
  int line_;
};

// Thrown when an instance exceeds a configured work cap. Always names the cap.
class CapError : public std::runtime_error {
public:
  CapError(std::uint64_t cap, const std::string& what)
      : std::runtime_error(what), cap_(cap) {}

  std::uint64_t cap() const { return cap_; }

private:
  std::uint64_t cap_;
};

}  // namespace fracdef
