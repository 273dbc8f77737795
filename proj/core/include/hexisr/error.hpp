#pragma once

#include <stdexcept>
#include <string>

namespace hexisr {

/// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A truncated series hit its term cap before reaching the requested tolerance.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A user location coincides with a site, so angles or pathloss are undefined.
class GeometryError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Malformed mask table or scenario file.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace hexisr
