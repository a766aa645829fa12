#pragma once

#include <chrono>
#include <compare>
#include <optional>
#include <string>
#include <string_view>

namespace factortree {

/// Calendar day. Totally ordered, cheap to copy; invalid dates are rejected
/// at construction time.
class Date {
 public:
  Date() = default;

  static std::optional<Date> from_ymd(int year, unsigned month, unsigned day);
  static std::optional<Date> parse_iso(std::string_view text);      // YYYY-MM-DD
  static std::optional<Date> parse_compact(std::string_view text);  // YYYYMMDD

  std::string to_iso() const;

  auto operator<=>(const Date&) const = default;

 private:
  explicit Date(std::chrono::sys_days d) : days_(d) {}
  std::chrono::sys_days days_{};
};

}  // namespace factortree
