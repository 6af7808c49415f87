#include "simplexmatch/diagnostics.hpp"

#include "simplexmatch/rounding.hpp"

#include <algorithm>
#include <cmath>

namespace simplexmatch {

std::string to_string(SuffCond variant) {
  switch (variant) {
    case SuffCond::MAX: return "MAX";
    case SuffCond::SUM: return "SUM";
    case SuffCond::SUMMAX: return "SUMMAX";
  }
  return "?";
}

long long count_suffcond_failures(const Matrix& c, SuffCond variant, bool* asymmetric) {
  require_square(c, "count_suffcond_failures");
  const Eigen::Index n = c.rows();
  if (asymmetric) *asymmetric = c != c.transpose();
  long long failures = 0;
  for (Eigen::Index j = 0; j < n; ++j)
    for (Eigen::Index i = 0; i < n; ++i) {
      if (i == j) continue;
      const double cii = c(i, i), cjj = c(j, j), cij = c(i, j), cji = c(j, i);
      bool ok = false;
      switch (variant) {
        case SuffCond::MAX: ok = std::max(cii, cjj) > std::max(cij, cji); break;
        case SuffCond::SUM: ok = cii + cjj > 2.0 * cij; break;
        case SuffCond::SUMMAX: ok = cii + cjj > std::max(cij, cji); break;
      }
      failures += !ok;
    }
  return failures;
}

long long count_nondominant_rows(const Matrix& c) {
  require_square(c, "count_nondominant_rows");
  const Eigen::Index n = c.rows();
  long long count = 0;
  for (Eigen::Index i = 0; i < n; ++i) {
    double best = -INFINITY;
    for (Eigen::Index j = 0; j < n; ++j)
      if (j != i) best = std::max(best, c(i, j));
    count += c(i, i) <= best;
  }
  return count;
}

Matrix unpermute(const Matrix& x, const Permutation& p_star) {
  require_square(x, "unpermute");
  if (p_star.size() != x.rows()) throw InvalidArgument("unpermute: permutation size mismatch");
  const int n = p_star.size();
  Matrix out(n, n);
  for (int j = 0; j < n; ++j) out.col(j) = x.col(p_star[j]);
  return out;
}

PropertyReport property_report(const Matrix& x, const Permutation& p_star) {
  const Matrix c = unpermute(x, p_star);
  const double n = static_cast<double>(c.rows());
  const double pairs = n * (n - 1.0);
  auto pair_fraction = [&](SuffCond v) {
    return pairs == 0.0 ? 1.0 : 1.0 - static_cast<double>(count_suffcond_failures(c, v)) / pairs;
  };
  PropertyReport r;
  r.frac_suffcond_max = pair_fraction(SuffCond::MAX);
  r.frac_suffcond_sum = pair_fraction(SuffCond::SUM);
  r.frac_suffcond_summax = pair_fraction(SuffCond::SUMMAX);
  r.frac_diag_dominant_rows = 1.0 - static_cast<double>(count_nondominant_rows(c)) / n;
  r.overlap_after_rounding = overlap(gmwm(x), p_star);
  return r;
}

std::vector<double> error_cdf(const std::vector<double>& errors, const std::vector<double>& grid) {
  if (errors.empty()) throw InvalidArgument("error_cdf: empty error list");
  for (double e : errors)
    if (!(e >= 0.0) || !std::isfinite(e)) throw InvalidArgument("error_cdf: errors must be finite and nonnegative");
  for (std::size_t k = 0; k < grid.size(); ++k) {
    if (std::isnan(grid[k])) throw InvalidArgument("error_cdf: NaN threshold");
    if (k && grid[k] < grid[k - 1]) throw InvalidArgument("error_cdf: grid must be ascending");
  }
  std::vector<double> sorted = errors;
  std::sort(sorted.begin(), sorted.end());
  std::vector<double> out;
  out.reserve(grid.size());
  for (double t : grid) {
    const auto count = std::upper_bound(sorted.begin(), sorted.end(), t) - sorted.begin();
    out.push_back(static_cast<double>(count) / static_cast<double>(sorted.size()));
  }
  return out;
}

}  // namespace simplexmatch
