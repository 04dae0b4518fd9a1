#pragma once

#include <stdexcept>
#include <string>

namespace boolcomm {

// Malformed textual input (function specs, matrix files). Carries the
// offset of the first offending character.
class parse_error : public std::runtime_error {
 public:
  parse_error(const std::string& msg, std::size_t position)
      : std::runtime_error(msg + " (at position " + std::to_string(position) + ")"),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// A requested enumeration exceeds the configured state-space cap.
class budget_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An internal contract was violated (decode mismatch, Kraft failure on a
// generated profile, schedule desync). Always a bug, never bad user input.
class invariant_error : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace boolcomm
