#pragma once

#include <stdexcept>
#include <string>

namespace edp {

// Malformed input: bad shapes, non-closed subgroups, inconsistent actions.
class ValidationError : public std::invalid_argument {
 public:
  explicit ValidationError(const std::string& what) : std::invalid_argument(what) {}
};

// A quotient or coinvariant module has torsion that is not a power of the working prime.
class MixedTorsionError : public ValidationError {
 public:
  explicit MixedTorsionError(const std::string& what) : ValidationError("mixed torsion: " + what) {}
};

class NotPGroupError : public ValidationError {
 public:
  explicit NotPGroupError(const std::string& what) : ValidationError("not a p-group: " + what) {}
};

}  // namespace edp
