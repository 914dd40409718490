#pragma once

#include <stdexcept>
#include <string>

namespace hecke {

// Raised when an input lies outside the domain of an operation (bad partition,
// out-of-range parameter, non-field modulus, ...). The CLI maps it to exit code 2.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline void require(bool cond, const std::string& what) {
  if (!cond) throw DomainError(what);
}

}  // namespace hecke
