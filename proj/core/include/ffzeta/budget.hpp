#ifndef FFZETA_BUDGET_HPP
#define FFZETA_BUDGET_HPP

#include <cstdint>
#include <string>

#include "ffzeta/errors.hpp"

namespace ffzeta {

// Step counter for brute-force enumerations. Exceeding the limit throws
// instead of hanging; 1e8 elementary steps is the default everywhere.
class Budget {
 public:
  static constexpr std::uint64_t kDefaultLimit = 100'000'000;

  explicit Budget(std::uint64_t limit = kDefaultLimit) : limit_(limit) {}

  void charge(std::uint64_t steps, const char* what) {
    used_ += steps;
    if (used_ > limit_) {
      throw BudgetExceeded(std::string(what) + ": budget of " +
                           std::to_string(limit_) + " steps exceeded");
    }
  }

  std::uint64_t limit() const { return limit_; }
  std::uint64_t used() const { return used_; }

 private:
  std::uint64_t limit_;
  std::uint64_t used_ = 0;
};

}  // namespace ffzeta

#endif
