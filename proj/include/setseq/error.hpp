#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "setseq/gf2.hpp"

namespace setseq {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed text input. `line` is 1-based; 0 means "not tied to a line".
class ParseError : public Error {
 public:
  ParseError(int line, const std::string& what)
      : Error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

class PreconditionError : public Error {
 public:
  using Error::Error;
};

class NoLabelingError : public Error {
 public:
  using Error::Error;
};

class ResourceLimitError : public Error {
 public:
  using Error::Error;
};

class CacheError : public Error {
 public:
  using Error::Error;
};

// Raised when a construction produces a labeling that reuses a vector.
class LabelCollisionError : public Error {
 public:
  LabelCollisionError(const std::string& what, std::vector<GF2Vector> repeated)
      : Error(what), repeated_(std::move(repeated)) {}
  // Every vector that appears more than once, in increasing order.
  const std::vector<GF2Vector>& repeated() const { return repeated_; }

 private:
  std::vector<GF2Vector> repeated_;
};

}  // namespace setseq
