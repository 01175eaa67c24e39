#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace netres {

// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed textual input. line() is 1-based.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& detail)
      : Error("line " + std::to_string(line) + ": " + detail),
        line_(line),
        detail_(detail) {}
  // Message prefixed with "path:line:".
  ParseError(const std::string& path, std::size_t line, const std::string& detail)
      : Error(path + ":" + std::to_string(line) + ": " + detail),
        line_(line),
        detail_(detail) {}
  std::size_t line() const noexcept { return line_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  std::size_t line_;
  std::string detail_;
};

// A precondition or structural invariant was violated by the caller.
class ValidationError : public Error {
 public:
  using Error::Error;
};

// A hard resource cap (simplex count, enumeration size) would be exceeded.
class ResourceError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace netres
