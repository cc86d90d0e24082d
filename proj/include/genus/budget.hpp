#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace genus {

class BudgetExceeded : public std::runtime_error {
public:
  explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

// Wall-clock cap for long-running checks. A default-constructed Deadline never
// expires.
class Deadline {
public:
  using clock = std::chrono::steady_clock;

  Deadline() = default;

  static Deadline after_ms(std::int64_t ms) {
    Deadline d;
    d.end_ = clock::now() + std::chrono::milliseconds(ms);
    return d;
  }

  bool unlimited() const noexcept { return !end_.has_value(); }

  bool expired() const { return end_ && clock::now() >= *end_; }

  void check(const char* where) const {
    if (expired()) throw BudgetExceeded(std::string("budget exhausted in ") + where);
  }

private:
  std::optional<clock::time_point> end_;
};

}  // namespace genus
