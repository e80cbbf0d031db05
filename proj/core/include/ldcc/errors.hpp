#pragma once

#include <stdexcept>
#include <string>

namespace ldcc {

/// Thrown when an exact computation would exceed a configured width or size
/// cap (e.g. a tensor-network boundary wider than the bit cap, or a brute
/// force enumeration over too many generators). Never downgraded to an
/// approximation.
class ResourceError : public std::runtime_error {
 public:
  explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace ldcc
