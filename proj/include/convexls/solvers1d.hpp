#pragma once

#include <cmath>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "convexls/region.hpp"

namespace convexls {

// Counted-query objective handle. A combined value+gradient query bumps both
// counters, matching the benchmark accounting where it counts as two queries.
struct Objective1d {
  std::function<double(double)> f;
  std::function<double(double)> df;
  long long value_queries = 0;
  long long gradient_queries = 0;

  double value(double x) {
    ++value_queries;
    return f(x);
  }
  double gradient(double x) {
    if (!df) throw std::runtime_error("gradient unavailable");
    ++gradient_queries;
    return df(x);
  }
  std::pair<double, double> value_and_gradient(double x) {
    return {value(x), gradient(x)};
  }
  bool has_gradient() const { return static_cast<bool>(df); }
};

struct TraceEntry {
  double query_x{};
  Region region{};
};

struct SolveReport {
  Point best{};
  Region region{};
  long long iterations = 0;  // queries beyond the initial boundary ones
  long long value_queries = 0;
  long long gradient_queries = 0;
  std::vector<TraceEntry> trace;
};

struct SolveOptions {
  double y_tol = 1e-10;
  long long max_iterations = 10000;
  bool keep_trace = false;
};

constexpr double kRepulsionEps = 0.0078125;  // 2^-7

// Probe placement for the core loop. region_mid is the midpoint of the
// certified x*-gap. bracket_mid falls back to the midpoint of the
// neighbor bracket around p_low whenever p_low lacks two real points on
// either side (where the five-point interval cuts are not defined).
enum class ProbePolicy { region_mid, bracket_mid };

struct CoreOptions {
  long long max_iterations = 10000;
  ProbePolicy probe = ProbePolicy::region_mid;
  const Line* lower_bound = nullptr;
  std::vector<TraceEntry>* trace = nullptr;
};

namespace detail {

inline std::pair<double, double> probe_interval(const PointSet& ps, const Region& r,
                                                ProbePolicy policy) {
  if (policy == ProbePolicy::region_mid) return {r.x_lo, r.x_hi};
  const auto& pts = ps.points();
  const std::size_t n = pts.size();
  const std::size_t k = ps.low_index();
  if (k >= 2 && k + 2 < n) return {r.x_lo, r.x_hi};
  const double lwx = ps.left_wall() ? *ps.left_wall() : pts.front().x;
  const double rwx = ps.right_wall() ? *ps.right_wall() : pts.back().x;
  const double lo = k >= 1 ? pts[k - 1].x : lwx;
  const double hi = k + 1 < n ? pts[k + 1].x : rwx;
  return {lo, hi};
}

}  // namespace detail

// Shared refinement loop: query the midpoint of the current x*-gap, nudging
// the query off existing abscissae and away from x_low by eps*|gap| when it
// would collide (exact collisions are nudged downward first).
inline PointSet delta_secant_core(Objective1d& f, PointSet ps,
                                  const std::function<bool(const PointSet&, const Region&)>& stop_when,
                                  const CoreOptions& opt = {}) {
  for (long long t = 0; t < opt.max_iterations; ++t) {
    const Region r = region_from_points(ps, opt.lower_bound);
    if (opt.trace) opt.trace->push_back(TraceEntry{std::numeric_limits<double>::quiet_NaN(), r});
    if (stop_when(ps, r)) return ps;
    const auto [plo, phi] = detail::probe_interval(ps, r, opt.probe);
    const double xm = 0.5 * (plo + phi);
    const double w = phi - plo;
    double xq = xm;
    const double xlow = ps.low().x;
    const bool exact = ps.contains_x(xm);
    if (exact || std::fabs(xlow - xm) < kRepulsionEps * w) {
      const double dir = exact ? -1.0 : (xm >= xlow ? 1.0 : -1.0);
      double cand = xm + dir * kRepulsionEps * w;
      if (ps.contains_x(cand) || !(plo < cand && cand < phi)) cand = 2.0 * xm - cand;
      if (ps.contains_x(cand) || !(plo < cand && cand < phi)) cand = xm;
      xq = cand;
    }
    if (opt.trace) opt.trace->back().query_x = xq;
    ps.insert(xq, f.value(xq));
    ps.prune_to_window();
  }
  throw std::runtime_error("iteration cap exceeded");
}

// --- gradient-based solvers -------------------------------------------------

namespace detail {

struct GradPoint {
  double x{}, y{}, g{};
};

inline GradPoint query_grad(Objective1d& f, double x) {
  const auto [y, g] = f.value_and_gradient(x);
  if (!std::isfinite(y) || !std::isfinite(g)) throw std::runtime_error("objective not finite");
  return {x, y, g};
}

inline Region tangent_region(const GradPoint& a, const GradPoint& b) {
  return region_from_tangents(TangentPair{{a.x, a.y}, a.g, {b.x, b.y}, b.g});
}

template <typename PickQuery>
SolveReport gradient_bisection_loop(Objective1d& f, double x_left, double x_right,
                                    const SolveOptions& opt, PickQuery pick) {
  if (!(x_left < x_right)) throw std::invalid_argument("empty interval");
  GradPoint a = query_grad(f, x_left);
  GradPoint b = query_grad(f, x_right);
  SolveReport rep;
  while (true) {
    const Region r = tangent_region(a, b);
    if (opt.keep_trace) rep.trace.push_back({std::numeric_limits<double>::quiet_NaN(), r});
    if (r.width_y() <= opt.y_tol) {
      rep.best = r.width_x() == 0.0 ? Point{r.x_lo, r.y_hi}
                                    : (a.y <= b.y ? Point{a.x, a.y} : Point{b.x, b.y});
      rep.region = r;
      break;
    }
    if (rep.iterations >= opt.max_iterations) throw std::runtime_error("iteration cap exceeded");
    const double xq = pick(r, a, b);
    GradPoint q = query_grad(f, xq);
    ++rep.iterations;
    if (opt.keep_trace) rep.trace.back().query_x = xq;
    if (q.g == 0.0) {  // zero gradient certifies the global minimum
      rep.best = {q.x, q.y};
      rep.region = Region{q.x, q.x, q.y, q.y};
      if (opt.keep_trace) rep.trace.push_back({q.x, rep.region});
      break;
    }
    (q.g < 0.0 ? a : b) = q;
  }
  rep.value_queries = f.value_queries;
  rep.gradient_queries = f.gradient_queries;
  return rep;
}

}  // namespace detail

// Classic gradient-sign bisection, with the tangent region used for the
// stopping test so the comparison against delta_bisection is like for like.
inline SolveReport bisection(Objective1d& f, double x_left, double x_right,
                             const SolveOptions& opt = {}) {
  return detail::gradient_bisection_loop(
      f, x_left, x_right, opt,
      [](const Region&, const detail::GradPoint& a, const detail::GradPoint& b) {
        return 0.5 * (a.x + b.x);
      });
}

inline SolveReport delta_bisection(Objective1d& f, double x_left, double x_right,
                                   const SolveOptions& opt = {}) {
  return detail::gradient_bisection_loop(
      f, x_left, x_right, opt,
      [](const Region& r, const detail::GradPoint&, const detail::GradPoint&) {
        return 0.5 * (r.x_lo + r.x_hi);
      });
}

// Variant that queries at the lowest point of the region (the tangent
// intersection) instead of the x*-gap midpoint. Kept to demonstrate its
// failure mode: on flat-vs-steep functions it makes only linear progress.
// Infinite values are held as walls; the query then lands just inside.
inline SolveReport tangent_intersection_variant(Objective1d& f, double x_left, double x_right,
                                                const SolveOptions& opt = {}) {
  struct Side {
    double x{}, y{}, g{};
    bool finite{};
  };
  auto query = [&f](double x) {
    Side s;
    s.x = x;
    s.y = f.value(x);
    if (std::isnan(s.y) || s.y == -kInfinity) throw std::runtime_error("objective not finite");
    s.finite = std::isfinite(s.y);
    s.g = s.finite ? f.gradient(x) : kInfinity;
    if (s.finite && !std::isfinite(s.g)) s.finite = false;
    return s;
  };
  Side a = query(x_left);
  Side b = query(x_right);
  SolveReport rep;
  while (true) {
    Region r{a.x, b.x, -kInfinity, kInfinity};
    if (a.finite && b.finite)
      r = detail::tangent_region({a.x, a.y, a.g}, {b.x, b.y, b.g});
    if (opt.keep_trace) rep.trace.push_back({std::numeric_limits<double>::quiet_NaN(), r});
    if (a.finite && b.finite && r.width_y() <= opt.y_tol) {
      rep.best = r.width_x() == 0.0 ? Point{r.x_lo, r.y_hi}
                                    : (a.y <= b.y ? Point{a.x, a.y} : Point{b.x, b.y});
      rep.region = r;
      break;
    }
    if (rep.iterations >= opt.max_iterations) throw std::runtime_error("iteration cap exceeded");
    const double w = r.x_hi - r.x_lo;
    double xq;
    bool have_xq = false;
    if (a.finite && b.finite) {
      const Intersection is = intersect(Line{a.g, {a.x, a.y}}, Line{b.g, {b.x, b.y}});
      if (!is.degenerate) {
        // query at the region's lowest point, repulsed inside the gap when
        // the intersection sits at (or beyond) its boundary
        xq = std::clamp(is.point.x, r.x_lo + kRepulsionEps * w, r.x_hi - kRepulsionEps * w);
        have_xq = true;
      }
    }
    if (!have_xq) {
      // one side is a wall with unbounded depth: the bottom sits at that wall
      xq = b.finite ? r.x_lo + kRepulsionEps * w : r.x_hi - kRepulsionEps * w;
    }
    if (xq == a.x || xq == b.x)
      xq = xq == a.x ? xq + kRepulsionEps * (b.x - a.x) : xq - kRepulsionEps * (b.x - a.x);
    Side q = query(xq);
    ++rep.iterations;
    if (opt.keep_trace) rep.trace.back().query_x = xq;
    if (q.finite && q.g == 0.0) {
      rep.best = {q.x, q.y};
      rep.region = Region{q.x, q.x, q.y, q.y};
      if (opt.keep_trace) rep.trace.push_back({q.x, rep.region});
      break;
    }
    if (!q.finite || q.g > 0.0)
      b = q;
    else
      a = q;
  }
  rep.value_queries = f.value_queries;
  rep.gradient_queries = f.gradient_queries;
  return rep;
}

// --- function-value-only solvers --------------------------------------------

inline SolveReport delta_secant(Objective1d& f, double x_left, double x_right,
                                const SolveOptions& opt = {}) {
  if (!(x_left < x_right)) throw std::invalid_argument("empty interval");
  const long long v0 = f.value_queries;
  PointSet ps;
  ps.insert(x_left, f.value(x_left));
  ps.insert(x_right, f.value(x_right));
  ps.pin_current_bounds();
  SolveReport rep;
  CoreOptions copt;
  copt.max_iterations = opt.max_iterations;
  copt.trace = opt.keep_trace ? &rep.trace : nullptr;
  ps = delta_secant_core(
      f, std::move(ps),
      [&opt](const PointSet&, const Region& r) { return r.width_y() <= opt.y_tol; }, copt);
  rep.best = ps.low();
  rep.region = region_from_points(ps);
  rep.value_queries = f.value_queries;
  rep.gradient_queries = f.gradient_queries;
  rep.iterations = f.value_queries - v0 - 2;
  return rep;
}

// Textbook golden-section bracketing; termination via the five-point y*-gap
// over all queried points. Boundary evaluations are made first so the region
// is defined from the start.
inline SolveReport golden_section(Objective1d& f, double x_left, double x_right,
                                  const SolveOptions& opt = {}) {
  if (!(x_left < x_right)) throw std::invalid_argument("empty interval");
  const long long v0 = f.value_queries;
  const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
  PointSet ps;
  SolveReport rep;
  auto eval = [&](double x) {
    const double y = f.value(x);
    ps.insert(x, y);
    return y;
  };
  auto done = [&]() {
    const Region r = region_from_points(ps);
    if (opt.keep_trace) rep.trace.push_back({std::numeric_limits<double>::quiet_NaN(), r});
    if (r.width_y() <= opt.y_tol) {
      rep.best = ps.low();
      rep.region = r;
      return true;
    }
    return false;
  };
  eval(x_left);
  eval(x_right);
  double a = x_left, b = x_right;
  if (!done()) {
    double c = b - (b - a) / phi;
    double d = a + (b - a) / phi;
    double fc = eval(c);
    if (!done()) {
      double fd = eval(d);
      long long t = 0;
      while (!done()) {
        if (++t > opt.max_iterations) throw std::runtime_error("iteration cap exceeded");
        if (fc < fd) {
          b = d;
          d = c;
          fd = fc;
          c = b - (b - a) / phi;
          fc = eval(c);
        } else {
          a = c;
          c = d;
          fc = fd;
          d = a + (b - a) / phi;
          fd = eval(d);
        }
      }
    }
  }
  rep.value_queries = f.value_queries;
  rep.gradient_queries = f.gradient_queries;
  rep.iterations = f.value_queries - v0 - 2;
  return rep;
}

}  // namespace convexls
