#pragma once

#include <stdexcept>
#include <string>

namespace mgonal {

// Bad input values: m < 3, l > m - 4, odd rank for a density formula, ...
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A configured cap (bitset bound, node count, enumeration box, residue ring) was exceeded.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed tree document. path() is a JSON pointer to the offending element.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::string path, const std::string& what)
      : std::runtime_error(path + ": " + what), path_(std::move(path)) {}
  const std::string& path() const noexcept { return path_; }

 private:
  std::string path_;
};

// A density routine was called for a prime it does not handle (p | N vs p not dividing N).
class DispatchError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Two independent computations disagreed. Always a bug, never an input fault.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace mgonal
