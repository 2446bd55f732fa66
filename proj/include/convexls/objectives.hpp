#pragma once

#include <cmath>
#include <cstdint>
#include <functional>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "convexls/descent.hpp"
#include "convexls/rng.hpp"

namespace convexls {

// A registered 1-d benchmark with analytic subgradient (right derivative at
// kinks) and known minimizer metadata.
struct Benchmark1d {
  std::string name;
  std::function<double(double)> f;
  std::function<double(double)> df;
  double x_left{};
  double x_right{};
  double x_star{};
  double f_star{};
  std::vector<double> kinks;  // abscissae excluded from derivative probes

  Objective1d objective() const { return Objective1d{f, df}; }
};

namespace detail {
inline double exp_clamped(double x) { return std::exp(x); }  // inf on overflow is fine
}

inline const std::vector<Benchmark1d>& benchmark_registry() {
  static const std::vector<Benchmark1d> reg = [] {
    std::vector<Benchmark1d> v;
    v.push_back({"-x", [](double x) { return -x; }, [](double) { return -1.0; }, -20, 7, 7, -7, {}});
    v.push_back({"|x|", [](double x) { return std::fabs(x); },
                 [](double x) { return x >= 0 ? 1.0 : -1.0; }, -20, 7, 0, 0, {0}});
    v.push_back({"max{-x,2x}", [](double x) { return std::max(-x, 2 * x); },
                 [](double x) { return x >= 0 ? 2.0 : -1.0; }, -20, 7, 0, 0, {0}});
    v.push_back({"max{-x,2x}:b", [](double x) { return std::max(-x, 2 * x); },
                 [](double x) { return x >= 0 ? 2.0 : -1.0; }, -0.01, 100, 0, 0, {0}});
    v.push_back({"|x|^1.1", [](double x) { return std::pow(std::fabs(x), 1.1); },
                 [](double x) {
                   if (x == 0.0) return 0.0;
                   return 1.1 * std::pow(std::fabs(x), 0.1) * (x >= 0 ? 1.0 : -1.0);
                 },
                 -20, 7, 0, 0, {0}});
    v.push_back({"x^2", [](double x) { return x * x; }, [](double x) { return 2 * x; }, -20, 7,
                 0, 0, {}});
    v.push_back({"sqrt(1+x^2)", [](double x) { return std::sqrt(1 + x * x); },
                 [](double x) { return x / std::sqrt(1 + x * x); }, -1000, 900, 0, 1, {}});
    v.push_back({"xlogx-x", [](double x) { return x * std::log(x) - x; },
                 [](double x) { return std::log(x); }, 0.001, 20, 1, -1, {}});
    v.push_back({"max{x^2,(x-3)^2}",
                 [](double x) { return std::max(x * x, (x - 3) * (x - 3)); },
                 [](double x) { return x * x >= (x - 3) * (x - 3) ? 2 * x : 2 * (x - 3); }, -5,
                 55, 1.5, 2.25, {1.5}});
    v.push_back({"max{x^2,(x/2-3)^2}",
                 [](double x) {
                   const double b = x / 2 - 3;
                   return std::max(x * x, b * b);
                 },
                 [](double x) {
                   const double b = x / 2 - 3;
                   return x * x >= b * b ? 2 * x : b;
                 },
                 -5, 55, 2, 4, {2}});
    v.push_back({"x^4", [](double x) { return x * x * x * x; },
                 [](double x) { return 4 * x * x * x; }, -20, 7, 0, 0, {}});
    v.push_back({"1/x^2+x^2", [](double x) { return 1 / (x * x) + x * x; },
                 [](double x) { return -2 / (x * x * x) + 2 * x; }, 0.001, 100, 1, 2, {}});
    // the flat-versus-steep composition used for the tangent-intersection
    // counterexample; x_star solves exp(10x) = -x/100
    v.push_back({"max{-x/100,exp(10x)}",
                 [](double x) { return std::max(-x / 100.0, detail::exp_clamped(10.0 * x)); },
                 [](double x) {
                   const double e = detail::exp_clamped(10.0 * x);
                   return e >= -x / 100.0 ? 10.0 * e : -0.01;
                 },
                 -100, 100, -0.52496028524015962, 0.0052496028524015962,
                 {-0.52496028524015962}});
    return v;
  }();
  return reg;
}

inline const Benchmark1d& lookup(const std::string& name) {
  for (const auto& b : benchmark_registry())
    if (b.name == name) return b;
  std::ostringstream msg;
  msg << "unknown benchmark '" << name << "'; available:";
  for (const auto& b : benchmark_registry()) msg << " " << b.name;
  throw std::invalid_argument(msg.str());
}

// Randomized multiclass-logistic-style loss
//   L(x) = exp( sum_i [ logsumexp_j(a_ij x_j) - a_{i,n_i} x_{n_i} ] )
// evaluated in the log domain; the displayed product form overflows at the
// sampled x0 scale.
struct LogisticLossSpec {
  int N = 10;
  int d = 100;
  std::uint64_t seed = 0;
};

struct LogisticLoss {
  ObjectiveNd objective;
  Vec x0;
  std::vector<std::vector<double>> a;
  std::vector<int> labels;
};

inline LogisticLoss make_logistic_loss(const LogisticLossSpec& spec) {
  if (spec.N < 1 || spec.d < 1) throw std::invalid_argument("bad logistic spec");
  LogisticLoss out;
  auto ga = seeded_stream(spec.seed, 0);
  auto gn = seeded_stream(spec.seed, 1);
  auto gx = seeded_stream(spec.seed, 2);
  out.a.assign(spec.N, std::vector<double>(spec.d));
  for (auto& row : out.a)
    for (auto& e : row) e = uniform_in(ga, -1.0, 1.0);
  out.labels.resize(spec.N);
  for (auto& l : out.labels) l = static_cast<int>(uniform_index(gn, spec.d));
  out.x0.resize(spec.d);
  for (auto& e : out.x0) e = uniform_in(gx, -20.0, 20.0);

  const auto a = out.a;
  const auto labels = out.labels;
  const int N = spec.N, d = spec.d;
  auto log_loss = [a, labels, N, d](const Vec& x) {
    double s = 0.0;
    for (int i = 0; i < N; ++i) {
      double mx = -kInfinity;
      for (int j = 0; j < d; ++j) mx = std::max(mx, a[i][j] * x[j]);
      double acc = 0.0;
      for (int j = 0; j < d; ++j) acc += std::exp(a[i][j] * x[j] - mx);
      s += mx + std::log(acc) - a[i][labels[i]] * x[labels[i]];
    }
    return s;
  };
  out.objective.dim = d;
  out.objective.f = [log_loss](const Vec& x) { return std::exp(log_loss(x)); };
  out.objective.grad = [a, labels, N, d, log_loss](const Vec& x) {
    Vec g(d, 0.0);
    for (int i = 0; i < N; ++i) {
      double mx = -kInfinity;
      for (int j = 0; j < d; ++j) mx = std::max(mx, a[i][j] * x[j]);
      double z = 0.0;
      std::vector<double> e(d);
      for (int j = 0; j < d; ++j) {
        e[j] = std::exp(a[i][j] * x[j] - mx);
        z += e[j];
      }
      for (int j = 0; j < d; ++j) g[j] += a[i][j] * (e[j] / z);
      g[labels[i]] -= a[i][labels[i]];
    }
    const double L = std::exp(log_loss(x));
    for (double& v : g) v *= L;
    return g;
  };
  return out;
}

}  // namespace convexls
