#pragma once

#include "simplexmatch/types.hpp"

#include <string>

namespace simplexmatch {

enum class StepKind { FIXED_MD, FIXED_PGD, DYNAMIC_MD, DYNAMIC_PGD, HEURISTIC_PGD, CONSTANT };

struct StepSizeRule {
  StepKind kind = StepKind::DYNAMIC_MD;
  int horizon = 1;        // N, used by the fixed rules
  double theta = 1.0;     // heuristic scale
  double constant = 0.0;  // CONSTANT γ
  // Fixed rules: use √(2 log n)/(L̂ √(N+1)) instead of √(2 log n)·L̂/√(N+1).
  bool invert_lipschitz = false;
  double running_l = 0.0;  // running max of the gradient norm seen so far

  static StepSizeRule fixed_md(int horizon, bool invert = false);
  static StepSizeRule fixed_pgd(int horizon, bool invert = false);
  static StepSizeRule dynamic_md();
  static StepSizeRule dynamic_pgd();
  static StepSizeRule heuristic_pgd(double theta);
  static StepSizeRule constant_step(double gamma);
};

// γ_k for the current gradient and energy. Fixed rules fold the current norm into running_l first.
double next_gamma(StepSizeRule& rule, int k, const Matrix& g, double energy);

// "fixed", "dynamic", "heuristic:θ", "const:γ"; `md` selects the mirror-descent variant of fixed/dynamic.
StepSizeRule parse_step_rule(const std::string& text, bool md, int horizon, bool invert = false);
std::string describe(const StepSizeRule& rule);

}  // namespace simplexmatch
