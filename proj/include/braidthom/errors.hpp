#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace braidthom {

/// Error raised by any of the text-format parsers. Carries the byte offset
/// of the first offending character.
class ParseError : public std::runtime_error {
public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " (at position " + std::to_string(position) + ")"),
        position_(position) {}

  std::size_t position() const { return position_; }

private:
  std::size_t position_;
};

}  // namespace braidthom
