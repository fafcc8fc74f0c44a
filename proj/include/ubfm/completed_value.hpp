#pragma once

#include <cmath>
#include <cstdint>
#include <string>

namespace ubfm {

// Resolution class of a node value. Proved classes dominate any heuristic
// number in the value ordering, which is what lets the search prefer a
// proved win over an arbitrarily optimistic estimate and shun proved losses.
enum class Resolution : int8_t {
  ProvedLoss = -1,
  Open = 0,
  ProvedWin = +1,
};

enum class Ordering : int8_t { Less = -1, Equal = 0, Greater = +1 };

// Value of a node from the perspective of its player to move, augmented with
// a resolution class and a resolved flag. Ordered lexicographically by
// (resolution, value); the resolved flag does not participate in the ordering
// but does count for change detection during backpropagation.
struct CompletedValue {
  Resolution resolution{Resolution::Open};
  double value{0.0};
  bool resolved{false};

  static constexpr CompletedValue proved_win() {
    return {Resolution::ProvedWin, +1.0, true};
  }
  static constexpr CompletedValue proved_loss() {
    return {Resolution::ProvedLoss, -1.0, true};
  }
  static constexpr CompletedValue resolved_draw() {
    return {Resolution::Open, 0.0, true};
  }
  static constexpr CompletedValue heuristic(double v) {
    return {Resolution::Open, v, false};
  }

  friend constexpr bool operator==(const CompletedValue& a,
                                   const CompletedValue& b) {
    return a.resolution == b.resolution && a.value == b.value &&
           a.resolved == b.resolved;
  }
  friend constexpr bool operator!=(const CompletedValue& a,
                                   const CompletedValue& b) {
    return !(a == b);
  }
};

constexpr Ordering completed_compare(const CompletedValue& a,
                                     const CompletedValue& b) {
  if (static_cast<int>(a.resolution) != static_cast<int>(b.resolution)) {
    return static_cast<int>(a.resolution) < static_cast<int>(b.resolution)
               ? Ordering::Less
               : Ordering::Greater;
  }
  if (a.value != b.value) {
    return a.value < b.value ? Ordering::Less : Ordering::Greater;
  }
  return Ordering::Equal;
}

constexpr bool completed_less(const CompletedValue& a,
                              const CompletedValue& b) {
  return completed_compare(a, b) == Ordering::Less;
}

// Perspective flip: proved win and loss swap, Open stays, the numeric value
// negates and the resolved flag is preserved. Involution by construction.
constexpr CompletedValue negate(const CompletedValue& a) {
  return {static_cast<Resolution>(-static_cast<int>(a.resolution)), -a.value,
          a.resolved};
}

// Structural validity. The strict-interior constraint on unresolved values
// applies to heuristic sources; exact terminal values stored without
// resolution tracking may sit on the closed bounds, hence `allow_saturated`.
constexpr bool valid_completed_value(const CompletedValue& cv,
                                     bool allow_saturated_unresolved = true) {
  if (!(cv.value >= -1.0 && cv.value <= +1.0)) return false;
  switch (cv.resolution) {
    case Resolution::ProvedWin:
      return cv.resolved && cv.value == +1.0;
    case Resolution::ProvedLoss:
      return cv.resolved && cv.value == -1.0;
    case Resolution::Open:
      if (cv.resolved) return true;
      if (allow_saturated_unresolved) return true;
      return cv.value > -1.0 && cv.value < +1.0;
  }
  return false;
}

inline std::string to_string(const CompletedValue& cv) {
  char buf[64];
  const char cls = cv.resolution == Resolution::ProvedWin    ? 'W'
                   : cv.resolution == Resolution::ProvedLoss ? 'L'
                                                             : 'O';
  std::snprintf(buf, sizeof(buf), "%c:%.17g:%c", cls, cv.value,
                cv.resolved ? 'r' : 'u');
  return buf;
}

}  // namespace ubfm
