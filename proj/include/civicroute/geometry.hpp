#pragma once

#include <cmath>

namespace civicroute {

struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Vec2&, const Vec2&) = default;
};

inline double squared_distance(Vec2 a, Vec2 b) {
  const double dx = a.x - b.x;
  const double dy = a.y - b.y;
  return dx * dx + dy * dy;
}

inline double distance(Vec2 a, Vec2 b) { return std::sqrt(squared_distance(a, b)); }

// Point at parameter t in [0, 1] along the straight line a -> b.
inline Vec2 lerp(Vec2 a, Vec2 b, double t) {
  return {a.x + t * (b.x - a.x), a.y + t * (b.y - a.y)};
}

}  // namespace civicroute
