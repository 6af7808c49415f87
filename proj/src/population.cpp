#include "simplexmatch/population.hpp"

#include "simplexmatch/types.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

namespace simplexmatch {

double a_sigma(int n, double sigma) {
  const double nd = static_cast<double>(n);
  return 2.0 + (nd + 1.0) / nd * sigma * sigma;
}

PopulationState pop_init(int n) {
  if (n < 2) throw InvalidArgument("pop_init: n must be >= 2");
  const double v = 1.0 / (static_cast<double>(n) * n);
  return PopulationState{n, v, v, 0};
}

PopulationState pop_step(const PopulationState& s, double sigma, double gamma) {
  if (!(gamma >= 0.0) || !std::isfinite(gamma)) throw InvalidArgument("pop_step: gamma must be finite and >= 0");
  if (!std::isfinite(sigma)) throw InvalidArgument("pop_step: sigma must be finite");
  PopulationState out = s;
  out.k = s.k + 1;
  if (gamma == 0.0) return out;
  const double a = a_sigma(s.n, sigma);
  // Same shift as emd_step: the smaller exponent is moved to 0.
  const double ed = gamma * (a - 2.0) * s.x_diag;
  const double eo = gamma * a * s.x_off;
  const double shift = std::min(ed, eo);
  const double d = s.x_diag * std::exp(-(ed - shift));
  const double o = s.x_off * std::exp(-(eo - shift));
  const double nd = static_cast<double>(s.n);
  const double total = nd * d + nd * (nd - 1.0) * o;
  if (!(total > 0.0)) throw NumericError("pop_step: weights vanished");
  out.x_diag = d / total;
  out.x_off = o / total;
  return out;
}

std::vector<double> ratio_recursion(int n, double sigma, const std::vector<double>& rates) {
  if (n < 2) throw InvalidArgument("ratio_recursion: n must be >= 2");
  const double a = a_sigma(n, sigma);
  const double nd = static_cast<double>(n);
  std::vector<double> out;
  out.reserve(rates.size());
  double r = 1.0;
  for (double gamma : rates) {
    if (!(gamma >= 0.0) || !std::isfinite(gamma))
      throw InvalidArgument("ratio_recursion: rates must be finite and >= 0");
    r *= std::exp(-gamma * (a * r - (a - 2.0)) / (nd * (nd - 1.0) * r + nd));
    out.push_back(r);
  }
  return out;
}

bool check_multistep_rates(int n, const std::vector<double>& rates) {
  const double total = std::accumulate(rates.begin(), rates.end(), 0.0);
  return total < (static_cast<double>(n) - 1.0) / 4.0 * std::numbers::ln2;
}

double first_rate_for_gap(int n, double sigma, double gap) {
  if (n < 2) throw InvalidArgument("rates_for_gaps: n must be >= 2");
  if (!(sigma > 0.0) || !std::isfinite(sigma)) throw InvalidArgument("rates_for_gaps: sigma must be > 0");
  const double a = a_sigma(n, sigma);
  const double target = (a - 2.0) / a * gap;
  if (!(target > 0.0 && target < 1.0)) throw InvalidArgument("rates_for_gaps: gap outside the admissible range");
  const double nd = static_cast<double>(n);
  return nd * nd / 2.0 * std::log(1.0 / target);
}

std::vector<double> rates_for_gaps(int n, double sigma, const std::vector<double>& gaps) {
  if (gaps.empty()) return {};
  for (double g : gaps)
    if (!(g > 1.0) || !std::isfinite(g)) throw InvalidArgument("rates_for_gaps: every gap must exceed 1");
  std::vector<double> rates;
  rates.reserve(gaps.size());
  rates.push_back(first_rate_for_gap(n, sigma, gaps[0]));
  const double a = a_sigma(n, sigma);
  const double nd = static_cast<double>(n);
  for (std::size_t k = 0; k + 1 < gaps.size(); ++k) {
    const double g = gaps[k], g_next = gaps[k + 1];
    if ((a - 2.0) / a * g_next >= 1.0)
      throw InvalidArgument("rates_for_gaps: gap outside the admissible range");
    if (g_next > g) throw InvalidArgument("rates_for_gaps: increasing gaps would need a negative rate");
    // a·x_off − (a−2)·x_diag at ratio c·g under the sum-1 normalization
    const double delta = a * (a - 2.0) * (g - 1.0) / (nd * (a + (a - 2.0) * (nd - 1.0) * g));
    rates.push_back(std::log(g / g_next) / delta);
  }
  return rates;
}

}  // namespace simplexmatch
