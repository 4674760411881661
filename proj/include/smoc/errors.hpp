#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace smoc {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A tree whose colours do not fit together. vertex() is the pre-order index
// of the offending node.
class ColorError : public Error {
 public:
  ColorError(int vertex, const std::string& what)
      : Error("vertex " + std::to_string(vertex) + ": " + what), vertex_(vertex) {}
  int vertex() const { return vertex_; }

 private:
  int vertex_;
};

class EdgeError : public Error {
 public:
  using Error::Error;
};

// Raised instead of silently truncating an enumeration that is too large.
class ResourceLimitError : public Error {
 public:
  ResourceLimitError(std::size_t requested, std::size_t limit)
      : Error("universe of " + std::to_string(requested) + " elements exceeds the limit of " +
              std::to_string(limit)),
        requested_(requested),
        limit_(limit) {}
  std::size_t requested() const { return requested_; }
  std::size_t limit() const { return limit_; }

 private:
  std::size_t requested_;
  std::size_t limit_;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t offset, const std::string& what)
      : Error("at byte " + std::to_string(offset) + ": " + what), offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

class ValidationError : public Error {
 public:
  using Error::Error;
};

}  // namespace smoc
