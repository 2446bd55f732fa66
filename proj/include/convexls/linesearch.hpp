#pragma once

#include <cmath>
#include <functional>
#include <optional>
#include <stdexcept>

#include "convexls/solvers1d.hpp"

namespace convexls {

struct QuasiExactParams {
  double c = 1.0;            // gap fraction in the stopping condition
  double alpha_prev = 1.0;   // warm-start step
  bool use_gradient_line = false;
  long long growth_cap = 1024;
  std::optional<double> f0;  // f~(0) when already known; avoids a query
};
// interval growth factor, shared with unbounded backtracking
constexpr double kGrowthFactor = 4.0;

struct BacktrackParams {
  double tau = 0.5;
  double eps = 0.3;
  double alpha_prev = 1.0;
  bool unbounded = true;
  bool strict_pseudocode = false;  // literal grow-on-single-shrink variant
  std::optional<double> f0;
};

struct LineSearchOutcome {
  double alpha = 0.0;
  double value = 0.0;
  double gap = kInfinity;  // certified |y*-gap| at termination (quasi-exact)
  long long queries = 0;
  PointSet points;
};

// Quasi-exact line search: run the secant core on [0, alpha_prev*4^i] with the
// stop "c*|y-gap| <= f~(0) - y_low", growing the range while the best point
// sits at its right end. Returns the abscissa of the best point together with
// its value. An infinite query tightens the right wall instead of aborting,
// so overshooting ranges cost one query each. The stop additionally waits for
// a real point to the right of the best one (unless the best point is the
// range end itself, which triggers growth); this keeps warm restarts from
// returning a step whose far side was never probed.
inline LineSearchOutcome quasi_exact(Objective1d& ftilde, const QuasiExactParams& params,
                                     std::optional<double> gradient_norm_sq = std::nullopt) {
  if (!(params.c > 0.0)) throw std::invalid_argument("c must be positive");
  if (!(params.alpha_prev > 0.0)) throw std::invalid_argument("alpha_prev must be positive");
  const long long v0 = ftilde.value_queries;
  const double f0 = params.f0 ? *params.f0 : ftilde.value(0.0);
  if (!std::isfinite(f0)) throw std::runtime_error("objective not finite");

  PointSet ps;
  ps.insert(0.0, f0);
  Line grad_line{};
  CoreOptions copt;
  copt.probe = ProbePolicy::bracket_mid;
  if (params.use_gradient_line && gradient_norm_sq && *gradient_norm_sq > 0.0 &&
      std::isfinite(*gradient_norm_sq)) {
    grad_line = Line{-*gradient_norm_sq, {0.0, f0}};
    copt.lower_bound = &grad_line;
  }

  double x_right = 0.0;
  const double c = params.c;
  auto stop_when = [&](const PointSet& p, const Region& r) {
    const double gap = r.width_y();
    if (!std::isfinite(gap) || !(c * gap <= f0 - p.low().y)) return false;
    const std::size_t k = p.low_index();
    if (k + 1 < p.size()) return true;       // best point bracketed on the right
    return p.points()[k].x == x_right;       // at the range end: grow instead
  };

  for (long long i = 0; i < params.growth_cap; ++i) {
    x_right = params.alpha_prev * std::pow(kGrowthFactor, static_cast<double>(i));
    if (!std::isfinite(x_right)) break;
    ps.insert(x_right, ftilde.value(x_right));
    ps.clear_pins();
    ps.pin(0.0);
    ps.pin(x_right);
    ps = delta_secant_core(ftilde, std::move(ps), stop_when, copt);
    const Point low = ps.low();
    double effective_right = x_right;
    if (ps.right_wall()) effective_right = std::min(effective_right, *ps.right_wall());
    if (0.0 < low.x && low.x < effective_right) {
      LineSearchOutcome out;
      out.alpha = low.x;
      out.value = low.y;
      out.gap = region_from_points(ps, copt.lower_bound).width_y();
      out.queries = ftilde.value_queries - v0;
      out.points = std::move(ps);
      return out;
    }
    // low.x == 0 means the step scale is still below numerical resolution;
    // keep growing in either case
  }
  throw std::runtime_error("objective not eventually increasing");
}

// Backtracking with Armijo's condition. The step starts from alpha_prev and
// halves until accepted; in unbounded mode an immediately accepted step is
// grown by 4 while it keeps passing, then refined one tau-step back.
inline LineSearchOutcome backtracking(Objective1d& ftilde, double gradient_norm_sq,
                                      const BacktrackParams& params) {
  if (!(params.tau > 0.0 && params.tau < 1.0)) throw std::invalid_argument("tau in (0,1)");
  if (!(params.eps > 0.0 && params.eps < 1.0)) throw std::invalid_argument("eps in (0,1)");
  if (gradient_norm_sq < 0.0) throw std::invalid_argument("negative gradient norm");
  const long long v0 = ftilde.value_queries;
  const double f0 = params.f0 ? *params.f0 : ftilde.value(0.0);
  const double G = gradient_norm_sq;

  double last_value = f0;
  auto accepted = [&](double a) {
    const double fa = ftilde.value(a);
    last_value = fa;
    const double rhs = params.eps * a * G;
    if (!std::isfinite(rhs)) return false;
    return f0 - fa >= rhs;
  };

  double alpha = params.alpha_prev;
  if (params.strict_pseudocode) {
    // literal pseudocode: grow only after exactly one shrink, then re-test
    while (true) {
      int shrinks = 0;
      while (!accepted(alpha)) {
        alpha *= params.tau;
        ++shrinks;
        if (alpha < 1e-300) throw std::runtime_error("Armijo never satisfied");
      }
      if (shrinks == 1)
        alpha *= kGrowthFactor;
      else
        break;
    }
  } else {
    int shrinks = 0;
    double accepted_value;
    while (!accepted(alpha)) {
      alpha *= params.tau;
      ++shrinks;
      if (alpha < 1e-300) throw std::runtime_error("Armijo never satisfied");
    }
    accepted_value = last_value;
    if (params.unbounded && shrinks == 0) {
      while (true) {
        const double grown = kGrowthFactor * alpha;
        if (!std::isfinite(grown) || !accepted(grown)) break;
        alpha = grown;
        accepted_value = last_value;
      }
      const double back = kGrowthFactor * alpha * params.tau;
      if (back > alpha && std::isfinite(back) && accepted(back)) {
        alpha = back;
        accepted_value = last_value;
      }
    }
    last_value = accepted_value;
  }

  LineSearchOutcome out;
  out.alpha = alpha;
  out.value = last_value;
  out.gap = kInfinity;
  out.queries = ftilde.value_queries - v0;
  return out;
}

}  // namespace convexls
