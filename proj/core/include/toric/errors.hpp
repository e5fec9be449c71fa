#pragma once

#include <stdexcept>
#include <string>

namespace toric {

// Malformed input document (graph file, matrix JSON, report JSON).
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// A configured enumeration cap was hit. Results are never silently
// truncated; the caller either raises the cap or treats this as failure.
class CapExceeded : public std::runtime_error {
 public:
  explicit CapExceeded(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace toric
