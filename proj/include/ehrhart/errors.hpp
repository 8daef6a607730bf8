#pragma once

#include <stdexcept>
#include <string>

namespace ehrhart {

/// Thrown when an enumeration or subset walk would exceed its node budget.
/// A partial count is never returned.
class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(const std::string& what, unsigned long long nodes)
      : std::runtime_error(what), nodes_expanded(nodes) {}

  unsigned long long nodes_expanded;
};

/// Thrown when an interpolated polynomial disagrees with its counter at the
/// over-sample point (wrong degree or wrong counter).
class InterpolationMismatch : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace ehrhart
