#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fvkit {

// Bad user input: malformed text, unknown names, inconsistent files.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public InputError {
 public:
  ParseError(const std::string& msg, std::size_t pos)
      : InputError(msg + " at offset " + std::to_string(pos)), pos_(pos) {}
  std::size_t position() const { return pos_; }

 private:
  std::size_t pos_;
};

// A configured work or size cap was hit; the answer is unknown, not wrong.
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace fvkit
