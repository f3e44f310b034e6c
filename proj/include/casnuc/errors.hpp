#pragma once

#include <stdexcept>
#include <string>

namespace casnuc {

// Input outside the domain of a physical formula (non-positive length,
// negative density, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A numerical procedure failed to reach its tolerance within budget, or
// produced a non-finite value.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

inline void require(bool ok, const char* what) {
  if (!ok) throw DomainError(what);
}

}  // namespace detail
}  // namespace casnuc
