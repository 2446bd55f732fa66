#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "convexls/convexls.hpp"

namespace {

int write_output(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return 0;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    std::cerr << "cannot open output file: " << path << "\n";
    return 1;
  }
  out << text;
  return 0;
}

bool has_errors(const std::string& csv) { return csv.find("error") != std::string::npos; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"convexls benchmark harness"};
  app.require_subcommand(1);

  convexls::RunConfig cfg;
  std::string out_path;
  app.add_option("--y-tol", cfg.y_tol, "termination tolerance on the y*-gap");
  app.add_option("--c", cfg.c_list, "quasi-exact gap fractions");
  app.add_option("--eps", cfg.eps_list, "Armijo slack values");
  app.add_option("--tau", cfg.tau, "backtracking decay factor");
  app.add_option("--seed", cfg.seed, "RNG seed");
  app.add_option("--budget", cfg.budget, "query budget for the logistic run");
  app.add_option("--out", out_path, "output file (default stdout)");
  app.add_flag("--trace", cfg.trace, "emit per-iteration trace (solve)");
  app.add_option("--benchmark", cfg.benchmark, "benchmark name (solve)");
  app.add_option("--algo", cfg.algo, "algorithm name (solve)");

  auto* t1 = app.add_subcommand("table1", "iteration counts: bisection vs delta-bisection");
  auto* t2 = app.add_subcommand("table2", "query counts for all four 1-d solvers");
  auto* t3 = app.add_subcommand("table3", "gradient descent with both line searches");
  auto* lg = app.add_subcommand("logistic", "loss-per-query curves on the logistic loss");
  auto* sv = app.add_subcommand("solve", "run one benchmark with one algorithm");
  for (auto* sub : {t1, t2, t3, lg, sv}) sub->fallthrough();

  CLI11_PARSE(app, argc, argv);

  try {
    std::string text;
    if (t1->parsed())
      text = convexls::table1_csv(cfg);
    else if (t2->parsed())
      text = convexls::table2_csv(cfg);
    else if (t3->parsed())
      text = convexls::table3_csv(cfg);
    else if (lg->parsed())
      text = convexls::logistic_csv(cfg);
    else if (sv->parsed())
      text = convexls::solve_text(cfg);
    const int rc = write_output(text, out_path);
    if (rc != 0) return rc;
    return sv->parsed() ? 0 : (has_errors(text) ? 1 : 0);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
