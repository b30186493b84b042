#pragma once

#include <stdexcept>
#include <string>

namespace tamb {

// Malformed input: bad tables, non-equivariant maps, mismatched ports,
// parse errors. The code() names the failure (e.g. "NotAssociative").
class InputError : public std::runtime_error {
 public:
  InputError(std::string code, const std::string& message)
      : std::runtime_error(code + ": " + message), code_(std::move(code)) {}

  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

// A configured enumeration cap was exceeded. Never silently truncated.
class ResourceBound : public std::runtime_error {
 public:
  ResourceBound(std::string cap, const std::string& message)
      : std::runtime_error("ResourceBound(" + cap + "): " + message), cap_(std::move(cap)) {}

  const std::string& cap() const noexcept { return cap_; }

 private:
  std::string cap_;
};

// Raised when a construction the theory guarantees cannot be found
// (e.g. an isomorphism that must exist). Indicates a bug, not bad input.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace tamb
