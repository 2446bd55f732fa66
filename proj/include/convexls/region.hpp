#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <optional>
#include <stdexcept>
#include <vector>

#include "convexls/geometry.hpp"

namespace convexls {

constexpr double kInfinity = std::numeric_limits<double>::infinity();

// Certified optimality region: the minimizer (x*, f(x*)) lies in
// [x_lo, x_hi] x [y_lo, y_hi]. y_lo may be -inf when fewer than three
// informative points are known.
struct Region {
  double x_lo{};
  double x_hi{};
  double y_lo{};
  double y_hi{};

  double width_x() const { return x_hi - x_lo; }
  double width_y() const { return y_hi - y_lo; }
};

struct TangentPair {
  Point left{};
  double left_slope{};
  Point right{};
  double right_slope{};
};

// Sorted set of evaluated points. Infinite objective values are recorded as
// "walls": abscissae known to exceed the minimum, carrying no finite value.
// Pinned abscissae (the original search bounds) survive pruning so the
// bracket property is never lost.
class PointSet {
 public:
  PointSet() = default;

  void insert(double x, double y) {
    if (std::isnan(x) || !std::isfinite(x)) throw std::runtime_error("objective not finite");
    if (std::isnan(y) || y == -kInfinity) throw std::runtime_error("objective not finite");
    if (y == kInfinity) {
      if (pts_.empty()) throw std::runtime_error("objective not finite");
      if (x <= pts_.front().x) {
        left_wall_ = left_wall_ ? std::max(*left_wall_, x) : x;
      } else if (x >= pts_.back().x) {
        right_wall_ = right_wall_ ? std::min(*right_wall_, x) : x;
      } else {
        throw std::runtime_error("convexity violated");
      }
      return;
    }
    if ((left_wall_ && x <= *left_wall_) || (right_wall_ && x >= *right_wall_))
      throw std::runtime_error("convexity violated");
    auto it = std::lower_bound(pts_.begin(), pts_.end(), x,
                               [](const Point& p, double v) { return p.x < v; });
    if (it != pts_.end() && it->x == x) return;  // duplicate abscissa: keep first
    pts_.insert(it, Point{x, y});
  }

  const std::vector<Point>& points() const { return pts_; }
  std::size_t size() const { return pts_.size(); }

  bool contains_x(double x) const {
    if ((left_wall_ && x == *left_wall_) || (right_wall_ && x == *right_wall_)) return true;
    auto it = std::lower_bound(pts_.begin(), pts_.end(), x,
                               [](const Point& p, double v) { return p.x < v; });
    return it != pts_.end() && it->x == x;
  }

  // leftmost point of minimal y
  std::size_t low_index() const {
    std::size_t k = 0;
    for (std::size_t i = 1; i < pts_.size(); ++i)
      if (pts_[i].y < pts_[k].y) k = i;
    return k;
  }
  Point low() const { return pts_[low_index()]; }
  Point high() const {
    std::size_t k = 0;
    for (std::size_t i = 1; i < pts_.size(); ++i)
      if (pts_[i].y > pts_[k].y) k = i;
    return pts_[k];
  }

  std::optional<double> left_wall() const { return left_wall_; }
  std::optional<double> right_wall() const { return right_wall_; }
  bool left_open() const { return left_wall_.has_value(); }
  bool right_open() const { return right_wall_.has_value(); }
  void set_left_wall(double x) { left_wall_ = x; }
  void set_right_wall(double x) { right_wall_ = x; }

  void pin(double x) { pins_.push_back(x); }
  void clear_pins() { pins_.clear(); }
  void pin_current_bounds() {
    if (pts_.empty()) return;
    pin(pts_.front().x);
    pin(pts_.back().x);
  }

  // Keep the five points around p_low plus all pinned abscissae.
  void prune_to_window() {
    if (pts_.size() <= 5) return;
    const std::size_t k = low_index();
    const std::size_t lo = k >= 2 ? k - 2 : 0;
    const std::size_t hi = std::min(pts_.size() - 1, k + 2);
    std::vector<Point> kept;
    kept.reserve(7);
    for (std::size_t i = 0; i < pts_.size(); ++i) {
      const bool in_window = i >= lo && i <= hi;
      const bool pinned = std::find(pins_.begin(), pins_.end(), pts_[i].x) != pins_.end();
      if (in_window || pinned) kept.push_back(pts_[i]);
    }
    pts_ = std::move(kept);
  }

 private:
  std::vector<Point> pts_;
  std::optional<double> left_wall_;
  std::optional<double> right_wall_;
  std::vector<double> pins_;
};

// The five points centered on p_low; sides lacking real points are marked
// open (virtual padding). Ties in minimal y resolve to the leftmost point.
inline PointSet five_point_window(const PointSet& ps) {
  if (ps.size() < 1) throw std::runtime_error("insufficient points");
  const auto& pts = ps.points();
  const std::size_t k = ps.low_index();
  PointSet out;
  const std::size_t lo = k >= 2 ? k - 2 : 0;
  const std::size_t hi = std::min(pts.size() - 1, k + 2);
  for (std::size_t i = lo; i <= hi; ++i) out.insert(pts[i].x, pts[i].y);
  // mark sides that needed virtual padding; the wall sits at the outermost
  // real point (the remark's eps -> 0 position) unless the source already
  // carried one further out
  if (k < 2)
    out.set_left_wall(ps.left_wall() ? *ps.left_wall() : out.points().front().x);
  if (k + 2 >= pts.size())
    out.set_right_wall(ps.right_wall() ? *ps.right_wall() : out.points().back().x);
  return out;
}

namespace detail {

// One of the four bounding elements around p_low: a secant line, or a
// vertical wall at a known abscissa (the limit of virtual padding).
struct Bound {
  bool is_wall{};
  double wall_x{};
  Line line{};
};

inline Bound wall_at(double x) { return Bound{true, x, {}}; }
inline Bound line_of(Line l) { return Bound{false, 0.0, l}; }

// y-coordinate of the lowest point of the pairing of two bounds.
inline double cross_bottom(const Bound& a, const Bound& b) {
  if (a.is_wall && b.is_wall) return -kInfinity;
  if (a.is_wall) return b.line.at(a.wall_x);
  if (b.is_wall) return a.line.at(b.wall_x);
  const Intersection is = intersect(a.line, b.line);
  return is.degenerate ? -kInfinity : is.point.y;
}

inline void check_convex_witness(const std::vector<Point>& pts) {
  for (std::size_t i = 1; i + 1 < pts.size(); ++i) {
    const double chord = secant(pts[i - 1], pts[i + 1]).at(pts[i].x);
    if (pts[i].y > chord + 1e-9 * (1.0 + std::fabs(pts[i].y)))
      throw std::runtime_error("convexity violated");
  }
}

}  // namespace detail

// Optimality region from evaluated points alone, via the five-point window
// around p_low. Sides lacking two real flanking points contribute the
// neighboring abscissa (or wall position) as x-bound and a vertical wall to
// the y-bottom pairings.
inline Region region_from_points(const PointSet& ps, const Line* lower_bound = nullptr) {
  const auto& pts = ps.points();
  const std::size_t n = pts.size();
  if (n == 0 || (n < 2 && !ps.left_open() && !ps.right_open()))
    throw std::runtime_error("insufficient points");
  detail::check_convex_witness(pts);

  const std::size_t k = ps.low_index();
  const double x2 = pts[k].x;
  const double y2 = pts[k].y;
  const double lwx = ps.left_wall() ? *ps.left_wall() : pts.front().x;
  const double rwx = ps.right_wall() ? *ps.right_wall() : pts.back().x;

  detail::Bound l01 = k >= 2   ? detail::line_of(secant(pts[k - 2], pts[k - 1]))
                      : k == 1 ? detail::wall_at(pts[0].x)
                               : detail::wall_at(lwx);
  detail::Bound l12 = k >= 1 ? detail::line_of(secant(pts[k - 1], pts[k]))
                             : detail::wall_at(lwx);
  detail::Bound l23 = k + 1 < n ? detail::line_of(secant(pts[k], pts[k + 1]))
                                : detail::wall_at(rwx);
  detail::Bound l34 = k + 2 < n    ? detail::line_of(secant(pts[k + 1], pts[k + 2]))
                      : k + 1 < n  ? detail::wall_at(pts[n - 1].x)
                                   : detail::wall_at(rwx);

  double x_lo;
  if (k >= 2) {
    const double a01 = l01.line.slope;
    if (a01 >= 0.0 || !std::isfinite(a01)) {
      x_lo = pts[k - 1].x;
    } else {
      x_lo = pts[k - 1].x + (y2 - pts[k - 1].y) / a01;
      x_lo = std::clamp(x_lo, pts[k - 1].x, x2);
    }
  } else if (k == 1) {
    x_lo = pts[0].x;
  } else {
    x_lo = lwx;
  }

  double x_hi;
  if (k + 2 < n) {
    const double a34 = l34.line.slope;
    const double y3 = pts[k + 1].y;
    if (a34 == 0.0 && y3 == y2) {
      x_hi = pts[k + 2].x;  // flat run: minimum certified up to its far end
    } else if (a34 <= 0.0 || !std::isfinite(a34)) {
      x_hi = pts[k + 1].x;
    } else {
      x_hi = pts[k + 1].x + (y2 - y3) / a34;
      x_hi = std::clamp(x_hi, x2, pts[k + 1].x);
    }
  } else if (k + 1 < n) {
    x_hi = pts[k + 1].x;
  } else {
    x_hi = rwx;
  }

  double y_lo = std::min(detail::cross_bottom(l01, l23), detail::cross_bottom(l12, l34));
  const double y_hi = y2;
  if (lower_bound) {
    // optional lower-bound line (initial-gradient constraint), applied
    // conservatively: it can only raise the floor and advance x_lo.
    y_lo = std::max(y_lo, std::min(lower_bound->at(x_lo), lower_bound->at(x_hi)));
    if (lower_bound->slope < 0.0 && lower_bound->at(x_lo) > y_hi) {
      const double xcut =
          lower_bound->anchor.x + (y_hi - lower_bound->anchor.y) / lower_bound->slope;
      x_lo = std::min(std::max(x_lo, xcut), x_hi);
    }
  }
  return Region{x_lo, x_hi, std::min(y_lo, y_hi), y_hi};
}

// Optimality region from two tangents. A nonnegative left slope or
// nonpositive right slope certifies the minimum at that boundary point
// (zero-width region, the distinguished result).
inline Region region_from_tangents(const TangentPair& t) {
  if (t.left_slope > 0.0) return Region{t.left.x, t.left.x, t.left.y, t.left.y};
  if (t.right_slope < 0.0) return Region{t.right.x, t.right.x, t.right.y, t.right.y};
  const double ylow = std::min(t.left.y, t.right.y);
  double x_lo = t.left.x;
  if (t.left_slope != 0.0 && t.left.y != ylow)
    x_lo = t.left.x + (t.left.y - ylow) / (-t.left_slope);
  double x_hi = t.right.x;
  if (t.right_slope != 0.0 && t.right.y != ylow)
    x_hi = t.right.x - (t.right.y - ylow) / t.right_slope;
  if (t.left_slope == 0.0 || t.right_slope == 0.0)
    return Region{std::min(x_lo, x_hi), std::max(x_lo, x_hi), ylow, ylow};
  const Intersection is =
      intersect(Line{t.left_slope, t.left}, Line{t.right_slope, t.right});
  const double y_lo = is.degenerate ? -kInfinity : std::min(is.point.y, ylow);
  return Region{std::min(x_lo, x_hi), std::max(x_lo, x_hi), y_lo, ylow};
}

}  // namespace convexls
