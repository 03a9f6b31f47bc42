#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace lcinv {

/// Thrown when an operation would exceed its enumeration/search budget.
/// Budgets are never raised silently; callers opt in to larger limits.
class budget_error : public std::runtime_error {
public:
  budget_error(const std::string& what, std::uint64_t requested, std::uint64_t limit)
      : std::runtime_error(what), requested_(requested), limit_(limit) {}

  std::uint64_t requested() const noexcept { return requested_; }
  std::uint64_t limit() const noexcept { return limit_; }

private:
  std::uint64_t requested_;
  std::uint64_t limit_;
};

/// Thrown on malformed text input (stabilizer files, omega specs, matrices).
class parse_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

}  // namespace lcinv
