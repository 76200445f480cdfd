#pragma once

#include <stdexcept>
#include <string>

namespace berge {

// Malformed input file: carries the 1-based line number of the offending line.
struct ParseError : std::runtime_error {
  int line;
  ParseError(int line_, const std::string& what_)
      : std::runtime_error("line " + std::to_string(line_) + ": " + what_),
        line(line_) {}
};

}  // namespace berge
