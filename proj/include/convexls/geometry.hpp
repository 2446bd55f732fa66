#pragma once

#include <cmath>
#include <limits>
#include <stdexcept>

namespace convexls {

struct Point {
  double x{};
  double y{};
};

// A line in anchored affine form a*(x - x0) + y0. The anchored form is kept
// throughout; evaluation at the anchor is exact.
struct Line {
  double slope{};
  Point anchor{};

  double at(double x) const { return slope * (x - anchor.x) + anchor.y; }
};

inline Line secant(Point p1, Point p2) {
  if (p1.x == p2.x) throw std::invalid_argument("vertical secant");
  return Line{(p1.y - p2.y) / (p1.x - p2.x), p1};
}

inline double line_value(const Line& l, double x) { return l.at(x); }

struct Intersection {
  Point point{};
  double residual{};
  bool degenerate{false};
};

// Line-line intersection by anchored iterative refinement: start at the first
// line's anchor, apply x <- x + (f12(x) - f34(x))/(a34 - a12) three times, and
// take y conservatively as the lower of the two line values.
inline Intersection intersect(const Line& l12, const Line& l34) {
  constexpr double kInf = std::numeric_limits<double>::infinity();
  const double den = l34.slope - l12.slope;
  Intersection degen{{std::numeric_limits<double>::quiet_NaN(), -kInf}, kInf, true};
  if (den == 0.0 || !std::isfinite(den)) return degen;
  double xh = l12.anchor.x;
  for (int i = 0; i < 3; ++i) {
    const double xc = xh + (l12.at(xh) - l34.at(xh)) / den;
    if (!std::isfinite(xc)) return degen;
    xh = xc;
  }
  const double y12 = l12.at(xh);
  const double y34 = l34.at(xh);
  return Intersection{{xh, y12 < y34 ? y12 : y34}, std::fabs(y12 - y34), false};
}

}  // namespace convexls
