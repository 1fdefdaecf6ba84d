#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>

namespace critdg {

/// Length of a shortest directed path, or infinity when no path exists.
/// Ordering is total with infinity above every finite value, and addition
/// saturates at infinity.
class Distance {
 public:
  constexpr Distance() = default;
  constexpr explicit Distance(std::uint32_t arcs) : finite_(true), value_(arcs) {}

  static constexpr Distance infinity() {
    Distance d;
    d.finite_ = false;
    return d;
  }

  constexpr bool is_finite() const { return finite_; }
  constexpr bool is_infinite() const { return !finite_; }

  /// Precondition: is_finite().
  constexpr std::uint32_t value() const { return value_; }

  constexpr Distance operator+(Distance other) const {
    if (!finite_ || !other.finite_) return infinity();
    return Distance(value_ + other.value_);
  }

  constexpr std::strong_ordering operator<=>(const Distance& other) const {
    if (finite_ != other.finite_) {
      return finite_ ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    if (!finite_) return std::strong_ordering::equal;
    return value_ <=> other.value_;
  }
  constexpr bool operator==(const Distance& other) const {
    return (*this <=> other) == std::strong_ordering::equal;
  }

  std::string to_string() const { return finite_ ? std::to_string(value_) : "INF"; }

 private:
  // Default-constructed distance is 0, the distance from a vertex to itself.
  bool finite_ = true;
  std::uint32_t value_ = 0;
};

inline std::ostream& operator<<(std::ostream& os, Distance d) { return os << d.to_string(); }

}  // namespace critdg
