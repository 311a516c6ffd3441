#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace coxabs {

/// An enumeration or search would exceed a configured size cap.
class CapExceeded : public std::runtime_error {
 public:
  CapExceeded(const std::string& what_cap, std::size_t limit)
      : std::runtime_error(what_cap + " exceeds the cap of " + std::to_string(limit) +
                           " (raise it with COXABS_MAX_GROUP)"),
        limit_(limit) {}

  std::size_t limit() const { return limit_; }

 private:
  std::size_t limit_;
};

/// Default group-size cap: 100,000, overridden by COXABS_MAX_GROUP.
std::size_t group_size_cap();

/// Hard ceiling for explicit opt-in enumeration: 5,000,000, or
/// COXABS_MAX_GROUP when that is larger.
std::size_t group_size_hard_cap();

}  // namespace coxabs
