#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace groupgraphs {

enum class ErrorCode {
  Domain,       // argument outside an operation's domain
  Parse,        // malformed group spec string or input file
  OrderCap,     // group order exceeds the configured cap
  Io,           // file could not be read
  Unsupported,  // operation not defined for this input (e.g. non-abelian)
  Refused,      // input too large for an exhaustive routine
};

const char* to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t position, const std::string& what)
      : Error(ErrorCode::Parse, what + " (at position " + std::to_string(position) + ")"),
        position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// A theorem's side conditions do not hold for the given group.
class HypothesisNotMet : public Error {
 public:
  explicit HypothesisNotMet(const std::string& what) : Error(ErrorCode::Domain, what) {}
};

}  // namespace groupgraphs
