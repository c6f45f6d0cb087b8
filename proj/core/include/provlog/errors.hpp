#pragma once

#include <stdexcept>
#include <string>

namespace provlog {

// Malformed input text. `position` is the 0-based byte offset of the first
// offending character in `input`.
struct ParseError : std::runtime_error {
  ParseError(const std::string& what, std::string input_text, std::size_t pos)
      : std::runtime_error(what), input(std::move(input_text)), position(pos) {}

  std::string input;
  std::size_t position;

  // Two-line rendering with a caret under the offending character.
  std::string caret_message() const {
    std::string out = std::string(what()) + "\n  " + input + "\n  ";
    out.append(position, ' ');
    out += '^';
    return out;
  }
};

// A configured cap was exceeded (literal count, sequent budget, search fuel).
struct ResourceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// The requested logic or parameter triple is known but not decidable here.
struct UnsupportedError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace provlog
