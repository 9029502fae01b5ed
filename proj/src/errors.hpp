#pragma once

#include <stdexcept>
#include <string>

namespace graphclust {

// Input that violates a precondition or the edge-list grammar.
struct ValidationError : std::runtime_error {
  explicit ValidationError(const std::string& msg) : std::runtime_error(msg) {}
};

// Requested coefficient has a zero denominator (0/0 is not "no clustering").
struct UndefinedCoefficientError : std::runtime_error {
  explicit UndefinedCoefficientError(const std::string& msg)
      : std::runtime_error(msg) {}
};

// A configurable cap was exceeded (e.g. maximal-clique enumeration).
struct ResourceError : std::runtime_error {
  explicit ResourceError(const std::string& msg) : std::runtime_error(msg) {}
};

// Rejection sampling exhausted its retry budget.
struct SamplingError : ResourceError {
  explicit SamplingError(const std::string& msg) : ResourceError(msg) {}
};

struct IoError : std::runtime_error {
  explicit IoError(const std::string& msg) : std::runtime_error(msg) {}
};

// A count no longer fits the 128-bit representation. Never wraps silently.
struct OverflowError : std::runtime_error {
  explicit OverflowError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace graphclust
