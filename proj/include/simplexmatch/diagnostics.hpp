#pragma once

#include "simplexmatch/types.hpp"

#include <string>
#include <vector>

namespace simplexmatch {

// Pair conditions on a similarity matrix, all strict:
//   MAX     C_ii ∨ C_jj > C_ij ∨ C_ji
//   SUM     C_ii + C_jj > 2 C_ij
//   SUMMAX  C_ii + C_jj > C_ij ∨ C_ji
enum class SuffCond { MAX, SUM, SUMMAX };

std::string to_string(SuffCond variant);

// Number of ordered pairs (i, j), i ≠ j, violating the condition. The SUM form is only a sufficient
// condition on symmetric C; pass `asymmetric` to learn whether C was asymmetric.
long long count_suffcond_failures(const Matrix& c, SuffCond variant, bool* asymmetric = nullptr);

// Rows with C_ii ≤ max_{j≠i} C_ij.
long long count_nondominant_rows(const Matrix& c);

struct PropertyReport {
  double frac_suffcond_max = 0.0;
  double frac_suffcond_sum = 0.0;
  double frac_suffcond_summax = 0.0;
  double frac_diag_dominant_rows = 0.0;
  double overlap_after_rounding = 0.0;
};

// Fractions are computed on C = X Πᵀ, i.e. C(i, j) = X(i, π(j)), so the ground truth sits on the diagonal.
PropertyReport property_report(const Matrix& x, const Permutation& p_star);

// Column-permuted view X Πᵀ.
Matrix unpermute(const Matrix& x, const Permutation& p_star);

// Fraction of errors ≤ t for each threshold t in an ascending grid.
std::vector<double> error_cdf(const std::vector<double>& errors, const std::vector<double>& grid);

}  // namespace simplexmatch
