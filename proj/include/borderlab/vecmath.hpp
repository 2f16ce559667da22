#pragma once
#include <cmath>
#include <cstddef>
#include <vector>

namespace borderlab {

using Point = std::vector<double>;

inline double dot(const Point& a, const Point& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline double norm2(const Point& a) { return std::sqrt(dot(a, a)); }

inline double dist2(const Point& a, const Point& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double d = a[i] - b[i];
    s += d * d;
  }
  return std::sqrt(s);
}

// y += c * x
inline void axpy(double c, const Point& x, Point& y) {
  for (std::size_t i = 0; i < x.size(); ++i) y[i] += c * x[i];
}

inline void scale(Point& x, double c) {
  for (double& v : x) v *= c;
}

inline bool all_finite(const Point& x) {
  for (double v : x)
    if (!std::isfinite(v)) return false;
  return true;
}

}  // namespace borderlab
