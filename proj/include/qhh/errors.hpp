#pragma once

#include <stdexcept>
#include <string>

namespace qhh {

// Input-file problems: bad grammar, unknown names, invalid bounds.
class ParseError : public std::runtime_error {
public:
  ParseError(std::string msg, int line = 0)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + std::move(msg)
                                    : std::move(msg)),
        line_(line) {}
  int line() const { return line_; }

private:
  int line_;
};

// Semantic problems: mismatched compositions, non-posets, failed verifications.
class ModelError : public std::runtime_error {
public:
  explicit ModelError(std::string msg) : std::runtime_error(std::move(msg)) {}
};

}  // namespace qhh
