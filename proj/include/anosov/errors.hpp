#pragma once

#include <stdexcept>
#include <string>

namespace anosov {

// Input or precondition problem: bad parameters, malformed words, characters
// that do not vanish on relators, and so on. The CLI maps this to exit code 2.
class ValidationError : public std::invalid_argument {
 public:
  explicit ValidationError(const std::string& what) : std::invalid_argument(what) {}
};

// A configured resource ceiling was hit (ball entry limits, BFS node limits).
class LimitError : public std::runtime_error {
 public:
  explicit LimitError(const std::string& what) : std::runtime_error(what) {}
};

// Numerical backend failure: singular input where invertibility is required,
// eigensolver non-convergence.
class NumericError : public std::runtime_error {
 public:
  explicit NumericError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace anosov
