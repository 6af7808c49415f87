#include "simplexmatch/solvers.hpp"

#include <cmath>

namespace simplexmatch {
namespace {

template <typename Step>
SolveReport run_simplex_descent(const EnergyContext& ctx, int iterations, StepSizeRule rule,
                                const SolveOptions& options, Step step, const char* name) {
  if (iterations < 1) throw InvalidArgument(std::string(name) + ": N must be >= 1");
  const int n = ctx.size();
  SimplexMatrix x = SimplexMatrix::barycenter(n);
  EnergyGradient eg = energy_and_gradient(ctx, x.matrix());

  SolveReport report;
  report.energies.reserve(static_cast<std::size_t>(iterations) + 1);
  report.gammas.reserve(static_cast<std::size_t>(iterations));
  report.energies.push_back(eg.energy);
  report.x_best = x;
  report.energy_best = eg.energy;
  if (options.on_iterate) options.on_iterate(0, x);

  for (int k = 0; k < iterations; ++k) {
    if (!eg.gradient.allFinite() || !std::isfinite(eg.energy))
      throw NumericError(std::string(name) + ": non-finite gradient at iteration " + std::to_string(k));
    const double gamma = next_gamma(rule, k, eg.gradient, eg.energy);
    if (!(gamma >= 0.0) || !std::isfinite(gamma))
      throw NumericError(std::string(name) + ": invalid step size at iteration " + std::to_string(k));
    report.gammas.push_back(gamma);
    x = step(x, eg.gradient, gamma);
    if (options.check_invariants) x.check_invariants();
    eg = energy_and_gradient(ctx, x.matrix());
    report.energies.push_back(eg.energy);
    if (eg.energy < report.energy_best) {
      report.energy_best = eg.energy;
      report.x_best = x;
      report.best_iteration = k + 1;
    }
    report.iterations_run = k + 1;
    if (options.on_iterate) options.on_iterate(k + 1, x);
  }
  return report;
}

}  // namespace

SolveReport run_emdgm(const EnergyContext& ctx, int iterations, StepSizeRule rule, const SolveOptions& options) {
  return run_simplex_descent(ctx, iterations, rule, options, emd_step, "run_emdgm");
}

SolveReport run_pgdgm(const EnergyContext& ctx, int iterations, StepSizeRule rule, const SolveOptions& options) {
  return run_simplex_descent(ctx, iterations, rule, options, pgd_step, "run_pgdgm");
}

}  // namespace simplexmatch
