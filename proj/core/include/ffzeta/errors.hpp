#ifndef FFZETA_ERRORS_HPP
#define FFZETA_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <vector>

namespace ffzeta {

// Enumeration or tuple budget exhausted. Maps to CLI exit code 3.
class BudgetExceeded : public std::runtime_error {
 public:
  explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

// Curve data failed a consistency check (negative place counts, broken
// functional equation, ...). Maps to CLI exit code 4.
class CurveDataError : public std::runtime_error {
 public:
  explicit CurveDataError(const std::string& what) : std::runtime_error(what) {}
};

// Configuration rejected; carries one message per schema violation.
// Maps to CLI exit code 2.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(std::vector<std::string> messages)
      : std::runtime_error(join(messages)), messages_(std::move(messages)) {}
  explicit ConfigError(const std::string& message)
      : ConfigError(std::vector<std::string>{message}) {}

  const std::vector<std::string>& messages() const { return messages_; }

 private:
  static std::string join(const std::vector<std::string>& ms) {
    std::string out;
    for (const auto& m : ms) {
      if (!out.empty()) out += "; ";
      out += m;
    }
    return out;
  }
  std::vector<std::string> messages_;
};

}  // namespace ffzeta

#endif
