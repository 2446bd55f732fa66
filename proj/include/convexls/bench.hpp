#pragma once

#include <cstdint>
#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

#include "convexls/objectives.hpp"

namespace convexls {

struct RunConfig {
  double y_tol = 1e-10;
  std::vector<double> c_list = {100, 10, 4, 2, 1, 0.5, 0.1, 0.01};
  std::vector<double> eps_list = {0.8, 0.5, 0.3, 0.1, 0.01, 0.001};
  double tau = 0.5;
  std::uint64_t seed = 0;
  long long budget = 2000;
  bool trace = false;
  std::string benchmark;
  std::string algo;
};

inline std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

// RFC-4180 quoting for fields holding commas (several benchmark names do)
inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

struct Table3Cell {
  long long iterations = 0;  // convention below
  long long queries = 0;
  bool ok = false;
};

namespace detail {

// The benchmark tables report the zero-based index of the final descent
// iteration and leave the initial objective evaluation out of the query
// totals; both counts therefore sit one below the raw driver counters.
inline Table3Cell table3_cell(const DescentReport& rep) {
  Table3Cell cell;
  cell.iterations = rep.updates > 0 ? rep.updates - 1 : 0;
  cell.queries = rep.queries > 0 ? rep.queries - 1 : 0;
  cell.ok = rep.converged;
  return cell;
}

}  // namespace detail

inline std::string table1_csv(const RunConfig& cfg = {}) {
  std::ostringstream out;
  out << "function,x_left,x_right,bisection_iters,delta_bisection_iters\n";
  for (const auto& b : benchmark_registry()) {
    if (b.name == "max{-x/100,exp(10x)}") continue;  // appendix-only benchmark
    out << csv_field(b.name) << ',' << format_double(b.x_left) << ','
        << format_double(b.x_right) << ',';
    SolveOptions opt;
    opt.y_tol = cfg.y_tol;
    try {
      Objective1d f = b.objective();
      out << bisection(f, b.x_left, b.x_right, opt).iterations << ',';
    } catch (const std::exception&) {
      out << "error,";
    }
    try {
      Objective1d f = b.objective();
      out << delta_bisection(f, b.x_left, b.x_right, opt).iterations;
    } catch (const std::exception&) {
      out << "error";
    }
    out << '\n';
  }
  return out.str();
}

inline std::string table2_csv(const RunConfig& cfg = {}) {
  std::ostringstream out;
  out << "function,x_left,x_right,bisection_queries,delta_bisection_queries,"
         "delta_secant_queries,golden_section_queries\n";
  for (const auto& b : benchmark_registry()) {
    if (b.name == "max{-x/100,exp(10x)}") continue;
    out << csv_field(b.name) << ',' << format_double(b.x_left) << ','
        << format_double(b.x_right);
    SolveOptions opt;
    opt.y_tol = cfg.y_tol;
    auto run = [&](auto&& solver, bool with_gradient) {
      try {
        Objective1d f = b.objective();
        const SolveReport rep = solver(f, opt);
        out << ',' << (with_gradient ? rep.value_queries + rep.gradient_queries
                                     : rep.value_queries);
      } catch (const std::exception&) {
        out << ",error";
      }
    };
    run([&](Objective1d& f, const SolveOptions& o) { return bisection(f, b.x_left, b.x_right, o); },
        true);
    run([&](Objective1d& f, const SolveOptions& o) { return delta_bisection(f, b.x_left, b.x_right, o); },
        true);
    run([&](Objective1d& f, const SolveOptions& o) { return delta_secant(f, b.x_left, b.x_right, o); },
        false);
    run([&](Objective1d& f, const SolveOptions& o) { return golden_section(f, b.x_left, b.x_right, o); },
        false);
    out << '\n';
  }
  return out.str();
}

namespace detail {

inline ObjectiveNd table3_quadratic() {
  ObjectiveNd o;
  o.dim = 1;
  o.f = [](const Vec& v) { return 3.95 * v[0] * v[0]; };
  o.grad = [](const Vec& v) { return Vec{7.9 * v[0]}; };
  o.optimum_value = 0.0;
  o.strong_convexity_m = 7.9;
  o.smoothness_M = 7.9;
  return o;
}

inline ObjectiveNd table3_exponential() {
  ObjectiveNd o;
  o.dim = 1;
  o.f = [](const Vec& v) { return std::exp(3 * v[0]) + std::exp(-3 * v[0]); };
  o.grad = [](const Vec& v) { return Vec{3 * std::exp(3 * v[0]) - 3 * std::exp(-3 * v[0])}; };
  o.optimum_value = 2.0;
  return o;
}

inline ObjectiveNd table3_quartic2d() {
  ObjectiveNd o;
  o.dim = 2;
  o.f = [](const Vec& v) { return v[0] * v[0] * v[0] * v[0] + v[1] * v[1] * v[1] * v[1]; };
  o.grad = [](const Vec& v) {
    return Vec{4 * v[0] * v[0] * v[0], 4 * v[1] * v[1] * v[1]};
  };
  o.optimum_value = 0.0;
  return o;
}

inline Table3Cell run_table3_cell(ObjectiveNd obj, Vec x0, const SearchSpec& spec,
                                  double tol, long long max_iter) {
  GdOptions opt;
  opt.f_gap_tol = tol;
  opt.max_iterations = max_iter;
  opt.keep_iterates = false;
  return table3_cell(gd(obj, std::move(x0), spec, opt));
}

}  // namespace detail

inline std::string table3_csv(const RunConfig& cfg = {}) {
  std::ostringstream out;
  out << "search,param,quadratic_iters,quadratic_queries,exponential_iters,"
         "exponential_queries,quartic2d_iters,quartic2d_queries,"
         "quartic2d_bounded_iters,quartic2d_bounded_queries\n";
  auto emit_row = [&](const std::string& label, double param, const SearchSpec& spec,
                      const SearchSpec* bounded_spec) {
    out << label << ',' << format_double(param);
    const std::pair<ObjectiveNd, Vec> problems[] = {
        {detail::table3_quadratic(), Vec{1000.0}},
        {detail::table3_exponential(), Vec{100.0}},
        {detail::table3_quartic2d(), Vec{0.1, 15.0}},
    };
    for (const auto& [obj, x0] : problems) {
      try {
        const Table3Cell cell = detail::run_table3_cell(obj, x0, spec, cfg.y_tol, 200000);
        out << ',' << cell.iterations << ',' << cell.queries;
      } catch (const std::exception&) {
        out << ",error,error";
      }
    }
    if (bounded_spec) {
      try {
        const Table3Cell cell = detail::run_table3_cell(detail::table3_quartic2d(),
                                                        Vec{0.1, 15.0}, *bounded_spec,
                                                        cfg.y_tol, 200000);
        out << ',' << cell.iterations << ',' << cell.queries;
      } catch (const std::exception&) {
        out << ",error,error";
      }
    } else {
      out << ",,";
    }
    out << '\n';
  };
  for (double c : cfg.c_list) {
    SearchSpec spec;
    spec.kind = SearchKind::quasi_exact;
    spec.qe.c = c;
    emit_row("quasi-exact", c, spec, nullptr);
  }
  for (double eps : cfg.eps_list) {
    SearchSpec spec;
    spec.kind = SearchKind::backtracking;
    spec.bt.eps = eps;
    spec.bt.tau = cfg.tau;
    spec.bt.unbounded = true;
    SearchSpec bounded = spec;
    bounded.bt.unbounded = false;
    emit_row("backtracking", eps, spec, &bounded);
  }
  return out.str();
}

inline std::string logistic_csv(const RunConfig& cfg = {}) {
  std::ostringstream out;
  out << "search,param,queries,best_loss\n";
  LogisticLossSpec spec;
  spec.seed = cfg.seed;
  auto run_curve = [&](const std::string& label, double param, const SearchSpec& search) {
    LogisticLoss ll = make_logistic_loss(spec);
    GdOptions opt;
    opt.f_gap_tol = 0.0;
    opt.query_budget = cfg.budget;
    opt.max_iterations = 1000000;
    const DescentReport rep = gd(ll.objective, ll.x0, search, opt);
    double best = kInfinity;
    for (const auto& it : rep.iterates) {
      best = std::min(best, it.f_value);
      out << label << ',' << format_double(param) << ',' << it.cumulative_queries << ','
          << format_double(best) << '\n';
    }
  };
  for (double c : cfg.c_list) {
    SearchSpec s;
    s.kind = SearchKind::quasi_exact;
    s.qe.c = c;
    run_curve("quasi-exact", c, s);
  }
  for (double eps : cfg.eps_list) {
    SearchSpec s;
    s.kind = SearchKind::backtracking;
    s.bt.eps = eps;
    s.bt.tau = cfg.tau;
    run_curve("backtracking", eps, s);
  }
  return out.str();
}

inline std::string solve_text(const RunConfig& cfg) {
  const Benchmark1d& b = lookup(cfg.benchmark);
  Objective1d f = b.objective();
  SolveOptions opt;
  opt.y_tol = cfg.y_tol;
  opt.keep_trace = cfg.trace;
  SolveReport rep;
  if (cfg.algo == "bisection")
    rep = bisection(f, b.x_left, b.x_right, opt);
  else if (cfg.algo == "delta-bisection")
    rep = delta_bisection(f, b.x_left, b.x_right, opt);
  else if (cfg.algo == "delta-secant")
    rep = delta_secant(f, b.x_left, b.x_right, opt);
  else if (cfg.algo == "golden-section")
    rep = golden_section(f, b.x_left, b.x_right, opt);
  else if (cfg.algo == "tangent-intersection")
    rep = tangent_intersection_variant(f, b.x_left, b.x_right, opt);
  else
    throw std::invalid_argument(
        "unknown algo '" + cfg.algo +
        "'; available: bisection delta-bisection delta-secant golden-section "
        "tangent-intersection");
  std::ostringstream out;
  out << "benchmark: " << b.name << " on [" << format_double(b.x_left) << ", "
      << format_double(b.x_right) << "]\n";
  out << "algorithm: " << cfg.algo << "\n";
  out << "best: x=" << format_double(rep.best.x) << " f=" << format_double(rep.best.y) << "\n";
  out << "x*-gap: [" << format_double(rep.region.x_lo) << ", " << format_double(rep.region.x_hi)
      << "] width=" << format_double(rep.region.width_x()) << "\n";
  out << "y*-gap: [" << format_double(rep.region.y_lo) << ", " << format_double(rep.region.y_hi)
      << "] width=" << format_double(rep.region.width_y()) << "\n";
  out << "iterations: " << rep.iterations << "\n";
  out << "value queries: " << rep.value_queries
      << ", gradient queries: " << rep.gradient_queries << "\n";
  if (cfg.trace) {
    out << "trace:\n";
    for (std::size_t i = 0; i < rep.trace.size(); ++i) {
      const auto& t = rep.trace[i];
      out << "  t=" << i << " query=" << format_double(t.query_x) << " x=["
          << format_double(t.region.x_lo) << ", " << format_double(t.region.x_hi) << "] y=["
          << format_double(t.region.y_lo) << ", " << format_double(t.region.y_hi) << "]\n";
    }
  }
  return out.str();
}

}  // namespace convexls
