#ifndef FORGE_ERROR_HPP
#define FORGE_ERROR_HPP

#include <stdexcept>
#include <string>

namespace forge {

// All recoverable failures (bad input, cap exceeded, mismatched domains)
// surface as Error; internal invariant breaks use assert.
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct ParseError : Error {
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " (at position " + std::to_string(position) + ")"), pos(position) {}
  std::size_t pos;
};

}  // namespace forge

#endif
