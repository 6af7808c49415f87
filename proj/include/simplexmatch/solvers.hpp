#pragma once

#include "simplexmatch/qap.hpp"
#include "simplexmatch/simplex.hpp"
#include "simplexmatch/step_size.hpp"

#include <functional>
#include <vector>

namespace simplexmatch {

struct SolveReport {
  SimplexMatrix x_best = SimplexMatrix::barycenter(1);
  double energy_best = 0.0;
  std::vector<double> energies;  // E(X⁽⁰⁾) .. E(X⁽ᴺ⁾)
  std::vector<double> gammas;    // γ₀ .. γ_{N−1}
  int iterations_run = 0;
  int best_iteration = 0;
};

struct SolveOptions {
  // Called with (k, X⁽ᵏ⁾) for k = 0..N.
  std::function<void(int, const SimplexMatrix&)> on_iterate;
  bool check_invariants = false;
};

// Both start from J/n² and keep the lowest-energy iterate, X⁽⁰⁾ included.
SolveReport run_emdgm(const EnergyContext& ctx, int iterations, StepSizeRule rule, const SolveOptions& options = {});
SolveReport run_pgdgm(const EnergyContext& ctx, int iterations, StepSizeRule rule, const SolveOptions& options = {});

}  // namespace simplexmatch
