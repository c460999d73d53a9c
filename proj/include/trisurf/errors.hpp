#pragma once

#include <stdexcept>
#include <string>

namespace trisurf {

// Structurally invalid map, walk or boundary data.
class MapError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Mathematical domain violation (zero denominators, empty strata, ...).
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Request outside the sizes an exhaustive routine is willing to handle.
class RangeRefusal : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace trisurf
