#pragma once

#include <stdexcept>
#include <string>

namespace relsyl {

// A configured search or enumeration cap was exceeded.
class BudgetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The input lies outside the fragment an operation accepts.
class FragmentError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A certificate produced by this library failed its own check.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace relsyl
