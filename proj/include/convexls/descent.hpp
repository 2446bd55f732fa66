#pragma once

#include <cmath>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "convexls/linesearch.hpp"

namespace convexls {

using Vec = std::vector<double>;

inline double dot(const Vec& a, const Vec& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

struct ObjectiveNd {
  std::function<double(const Vec&)> f;
  std::function<Vec(const Vec&)> grad;
  int dim = 0;
  std::optional<double> optimum_value;
  std::optional<double> strong_convexity_m;
  std::optional<double> smoothness_M;
  long long value_queries = 0;
  long long gradient_queries = 0;

  double value(const Vec& x) {
    ++value_queries;
    return f(x);
  }
  Vec gradient(const Vec& x) {
    ++gradient_queries;
    return grad(x);
  }
};

struct IterateRecord {
  long long k = 0;
  double f_value = 0.0;
  double grad_norm_sq = 0.0;
  double alpha = 0.0;
  long long cumulative_queries = 0;
};

struct DescentReport {
  std::vector<IterateRecord> iterates;
  Vec final_x;
  double final_f = 0.0;
  long long updates = 0;        // number of x_{k+1} = x_k - alpha*grad steps taken
  long long queries = 0;        // value + gradient queries, initial f(x0) included
  bool converged = false;
  bool budget_exhausted = false;
};

enum class SearchKind { quasi_exact, backtracking, fixed };

struct SearchSpec {
  SearchKind kind = SearchKind::quasi_exact;
  QuasiExactParams qe{};
  BacktrackParams bt{};
  double fixed_alpha = 1.0;
};

struct GdOptions {
  double f_gap_tol = 1e-10;
  long long max_iterations = 1000000;
  std::optional<long long> query_budget;  // total value+gradient queries
  bool keep_iterates = true;
};

namespace detail {
struct BudgetExhausted {};
}  // namespace detail

// Gradient descent with a pluggable step-size search. The previously accepted
// step warm-starts the next quasi-exact search; backtracking restarts from
// its configured alpha_prev every iteration (the benchmark convention).
// The f-gap stop needs optimum_value; without it the driver runs to
// max_iterations or the query budget.
inline DescentReport gd(ObjectiveNd& obj, Vec x0, const SearchSpec& search,
                        const GdOptions& opt = {}) {
  DescentReport rep;
  Vec x = std::move(x0);
  long long queries = 0;
  auto charge = [&](long long n) {
    queries += n;
    if (opt.query_budget && queries > *opt.query_budget) throw detail::BudgetExhausted{};
  };

  double alpha_prev = search.qe.alpha_prev;
  const double fstar = obj.optimum_value.value_or(-kInfinity);
  double fx = std::numeric_limits<double>::quiet_NaN();
  try {
    charge(1);
    fx = obj.value(x);
    if (opt.keep_iterates) rep.iterates.push_back({0, fx, 0.0, 0.0, queries});
    while (rep.updates < opt.max_iterations) {
      if (obj.optimum_value && fx - fstar <= opt.f_gap_tol) {
        rep.converged = true;
        break;
      }
      charge(1);
      const Vec g = obj.gradient(x);
      const double G = dot(g, g);
      if (G == 0.0) {
        rep.converged = true;  // stationary point of a convex objective
        break;
      }
      Objective1d ftilde;
      ftilde.f = [&](double a) {
        charge(1);
        Vec xa(x.size());
        for (std::size_t i = 0; i < x.size(); ++i) xa[i] = x[i] - a * g[i];
        return obj.value(xa);
      };
      double alpha, value;
      try {
        if (search.kind == SearchKind::quasi_exact) {
          QuasiExactParams p = search.qe;
          p.alpha_prev = alpha_prev;
          p.f0 = fx;
          const LineSearchOutcome out = quasi_exact(ftilde, p, G);
          alpha = out.alpha;
          value = out.value;
          alpha_prev = alpha;
        } else if (search.kind == SearchKind::backtracking) {
          BacktrackParams p = search.bt;
          p.f0 = fx;
          const LineSearchOutcome out = backtracking(ftilde, G, p);
          alpha = out.alpha;
          value = out.value;
        } else {
          alpha = search.fixed_alpha;
          value = ftilde.value(alpha);
        }
      } catch (const std::runtime_error& e) {
        throw std::runtime_error("gd iteration " + std::to_string(rep.updates + 1) + ": " +
                                 e.what());
      }
      if (alpha == 0.0) break;  // no numerically meaningful step exists
      for (std::size_t i = 0; i < x.size(); ++i) x[i] -= alpha * g[i];
      fx = value;
      ++rep.updates;
      if (opt.keep_iterates) rep.iterates.push_back({rep.updates, fx, G, alpha, queries});
    }
  } catch (const detail::BudgetExhausted&) {
    rep.budget_exhausted = true;
    queries = opt.query_budget.value_or(queries);
  }
  rep.final_x = std::move(x);
  rep.final_f = fx;
  rep.queries = queries;
  return rep;
}

struct LinearMinOracle {
  std::function<Vec(const Vec&)> argmin_linear;  // min <s, g> over the feasible set
  std::function<bool(const Vec&)> feasible;
};

inline LinearMinOracle box_lmo(double lo, double hi, int dim) {
  if (!(lo < hi)) throw std::invalid_argument("empty box");
  LinearMinOracle o;
  o.argmin_linear = [lo, hi, dim](const Vec& g) {
    Vec s(static_cast<std::size_t>(dim));
    for (int i = 0; i < dim; ++i) s[i] = g[i] > 0.0 ? lo : hi;
    return s;
  };
  o.feasible = [lo, hi, dim](const Vec& x) {
    if (static_cast<int>(x.size()) != dim) return false;
    for (double v : x)
      if (v < lo || v > hi) return false;
    return true;
  };
  return o;
}

inline LinearMinOracle simplex_lmo(int dim) {
  LinearMinOracle o;
  o.argmin_linear = [dim](const Vec& g) {
    std::size_t j = 0;
    for (std::size_t i = 1; i < g.size(); ++i)
      if (g[i] < g[j]) j = i;
    Vec s(static_cast<std::size_t>(dim), 0.0);
    s[j] = 1.0;
    return s;
  };
  o.feasible = [dim](const Vec& x) {
    if (static_cast<int>(x.size()) != dim) return false;
    double sum = 0.0;
    for (double v : x) {
      if (v < -1e-12) return false;
      sum += v;
    }
    return std::fabs(sum - 1.0) <= 1e-12;
  };
  return o;
}

// Frank-Wolfe with a quasi-exact search over the fixed range [0, 1]. The
// first interior query of iteration k is forced at 2/(k+2) so the usual
// O(1/k) argument carries over: the accepted point can only be lower.
inline DescentReport frank_wolfe(ObjectiveNd& obj, const LinearMinOracle& lmo, Vec x0,
                                 double c, long long max_k, const GdOptions& opt = {}) {
  if (!lmo.feasible(x0)) throw std::invalid_argument("infeasible start point");
  DescentReport rep;
  Vec x = std::move(x0);
  long long queries = 0;
  auto charge = [&](long long n) {
    queries += n;
    if (opt.query_budget && queries > *opt.query_budget) throw detail::BudgetExhausted{};
  };
  double fx = std::numeric_limits<double>::quiet_NaN();
  try {
    charge(1);
    fx = obj.value(x);
    if (opt.keep_iterates) rep.iterates.push_back({0, fx, 0.0, 0.0, queries});
    for (long long k = 1; k <= max_k; ++k) {
      if (obj.optimum_value && fx - *obj.optimum_value <= opt.f_gap_tol) {
        rep.converged = true;
        break;
      }
      charge(1);
      const Vec g = obj.gradient(x);
      const Vec s = lmo.argmin_linear(g);
      Vec dir(x.size());
      for (std::size_t i = 0; i < x.size(); ++i) dir[i] = s[i] - x[i];
      Objective1d ftilde;
      ftilde.f = [&](double a) {
        charge(1);
        Vec xa(x.size());
        for (std::size_t i = 0; i < x.size(); ++i) xa[i] = x[i] + a * dir[i];
        return obj.value(xa);
      };
      PointSet ps;
      ps.insert(0.0, fx);
      const double forced = 2.0 / (static_cast<double>(k) + 2.0);
      ps.insert(forced, ftilde.value(forced));
      if (forced < 1.0) ps.insert(1.0, ftilde.value(1.0));
      ps.pin(0.0);
      ps.pin(1.0);
      const double f0 = fx;
      auto stop_when = [&](const PointSet& p, const Region& r) {
        const double gap = r.width_y();
        return std::isfinite(gap) && c * gap <= f0 - p.low().y;
      };
      CoreOptions copt;
      copt.probe = ProbePolicy::bracket_mid;
      ps = delta_secant_core(ftilde, std::move(ps), stop_when, copt);
      const Point low = ps.low();
      const double alpha = low.x;
      for (std::size_t i = 0; i < x.size(); ++i) x[i] += alpha * dir[i];
      fx = low.y;
      ++rep.updates;
      const double G = dot(g, g);
      if (opt.keep_iterates) rep.iterates.push_back({rep.updates, fx, G, alpha, queries});
    }
  } catch (const detail::BudgetExhausted&) {
    rep.budget_exhausted = true;
    queries = opt.query_budget.value_or(queries);
  }
  rep.final_x = std::move(x);
  rep.final_f = fx;
  rep.queries = queries;
  return rep;
}

// Checks f(x_{k+1}) - f* <= (f(x_1) - f*) * (1 - c/(c+1) * m/M)^k over a
// recorded run.
inline bool gd_convergence_check(const DescentReport& rep, const ObjectiveNd& obj, double c) {
  if (!obj.strong_convexity_m || !obj.smoothness_M || !obj.optimum_value)
    throw std::runtime_error("metadata required");
  if (rep.iterates.empty()) return true;
  const double fstar = *obj.optimum_value;
  const double rate = 1.0 - (c / (c + 1.0)) * (*obj.strong_convexity_m / *obj.smoothness_M);
  const double base = rep.iterates.front().f_value - fstar;
  double bound = base;
  for (std::size_t i = 1; i < rep.iterates.size(); ++i) {
    bound *= rate;
    const double gap = rep.iterates[i].f_value - fstar;
    if (gap > bound * (1.0 + 1e-9) + 1e-15) return false;
  }
  return true;
}

}  // namespace convexls
