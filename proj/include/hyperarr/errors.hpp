#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace hyperarr {

/// Malformed or out-of-contract input (unknown color, bad vertex, bad file).
class InputError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A configured computational budget would be exceeded.
class ResourceError : public std::runtime_error {
public:
  ResourceError(const std::string& what, std::uint64_t bound)
      : std::runtime_error(what + " (bound " + std::to_string(bound) + ")"), bound_(bound) {}
  std::uint64_t bound() const { return bound_; }

private:
  std::uint64_t bound_;
};

/// An internal algebraic identity failed; indicates a bug, not bad input.
class ConsistencyError : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

} // namespace hyperarr
