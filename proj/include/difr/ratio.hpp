#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <string>
#include <string_view>

#include "difr/error.hpp"

namespace difr {

/// Exact rational threshold in [0, 1]. Stored in lowest terms.
class Ratio {
 public:
  constexpr Ratio() = default;
  Ratio(std::int64_t num, std::int64_t den) : num_(num), den_(den) {
    if (den <= 0) fail(ErrorCode::InvalidInput, "ratio denominator must be positive");
    if (num < 0 || num > den)
      fail(ErrorCode::InvalidInput,
           "ratio must lie in [0,1], got " + std::to_string(num) + "/" + std::to_string(den));
    const auto g = std::gcd(num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
    if (num_ == 0) den_ = 1;
  }

  /// Parses "a/b" or a bare integer "0" / "1".
  static Ratio parse(std::string_view text) {
    const auto slash = text.find('/');
    auto to_int = [&](std::string_view s) -> std::int64_t {
      if (s.empty()) fail(ErrorCode::InvalidInput, "malformed ratio '" + std::string(text) + "'");
      std::int64_t v = 0;
      for (char c : s) {
        if (c < '0' || c > '9')
          fail(ErrorCode::InvalidInput, "malformed ratio '" + std::string(text) + "'");
        v = v * 10 + (c - '0');
        if (v > (std::int64_t{1} << 40))
          fail(ErrorCode::InvalidInput, "ratio component too large in '" + std::string(text) + "'");
      }
      return v;
    };
    if (slash == std::string_view::npos) return Ratio(to_int(text), 1);
    return Ratio(to_int(text.substr(0, slash)), to_int(text.substr(slash + 1)));
  }

  constexpr std::int64_t num() const { return num_; }
  constexpr std::int64_t den() const { return den_; }

  /// ceil(p * d) in integer arithmetic.
  constexpr std::int64_t ceil_times(std::int64_t d) const {
    return (num_ * d + den_ - 1) / den_;
  }

  constexpr bool is_zero() const { return num_ == 0; }
  constexpr bool above_half() const { return 2 * num_ > den_; }

  std::string str() const { return std::to_string(num_) + "/" + std::to_string(den_); }

  friend constexpr bool operator==(const Ratio& a, const Ratio& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend constexpr std::strong_ordering operator<=>(const Ratio& a, const Ratio& b) {
    return a.num_ * b.den_ <=> b.num_ * a.den_;
  }

 private:
  std::int64_t num_ = 1;
  std::int64_t den_ = 2;
};

inline const Ratio kHalf{1, 2};

}  // namespace difr
