#pragma once

namespace dyana {

/// Closed interval [a,b] on the real line, a <= b.
struct RealInterval {
  double a = 0.0;
  double b = 0.0;

  double length() const { return b - a; }
  bool contains(double x) const { return a <= x && x <= b; }
  bool contains(const RealInterval& o) const { return a <= o.a && o.b <= b; }
};

}  // namespace dyana
