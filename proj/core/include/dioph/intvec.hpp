#pragma once

#include <string>

#include "dioph/numbers.hpp"

namespace dioph {

struct IntVec3 {
  Integer x0;
  Integer x1;
  Integer x2;

  bool is_zero() const { return x0 == 0 && x1 == 0 && x2 == 0; }
  friend bool operator==(const IntVec3& a, const IntVec3& b) {
    return a.x0 == b.x0 && a.x1 == b.x1 && a.x2 == b.x2;
  }
};

inline IntVec3 operator+(const IntVec3& a, const IntVec3& b) {
  return {a.x0 + b.x0, a.x1 + b.x1, a.x2 + b.x2};
}

inline IntVec3 operator*(const Integer& c, const IntVec3& v) { return {c * v.x0, c * v.x1, c * v.x2}; }

inline Integer dot(const IntVec3& a, const IntVec3& b) { return a.x0 * b.x0 + a.x1 * b.x1 + a.x2 * b.x2; }

inline Integer norm_sq(const IntVec3& v) { return dot(v, v); }

inline Integer content(const IntVec3& v) { return gcd(gcd(v.x0, v.x1), v.x2); }

inline std::string to_string(const IntVec3& v) {
  return "(" + v.x0.get_str() + "," + v.x1.get_str() + "," + v.x2.get_str() + ")";
}

}  // namespace dioph
