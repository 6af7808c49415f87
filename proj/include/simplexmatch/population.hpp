#pragma once

#include <vector>

namespace simplexmatch {

// Expected-gradient EMD iterate: every diagonal entry equals x_diag, every off-diagonal entry x_off,
// with n·x_diag + n(n−1)·x_off = 1.
struct PopulationState {
  int n = 2;
  double x_diag = 0.25;
  double x_off = 0.25;
  int k = 0;

  double ratio() const { return x_off / x_diag; }
};

// 2 + ((n+1)/n) σ²
double a_sigma(int n, double sigma);

PopulationState pop_init(int n);

// x_diag ∝ x_diag·exp(−γ(a_σ − 2)x_diag), x_off ∝ x_off·exp(−γ a_σ x_off), renormalized.
PopulationState pop_step(const PopulationState& s, double sigma, double gamma);

// x_off/x_diag after each rate, in closed form; r_0 = 1.
std::vector<double> ratio_recursion(int n, double sigma, const std::vector<double>& rates);

// Σγ < ((n−1)/4)·log 2
bool check_multistep_rates(int n, const std::vector<double>& rates);

// Rates γ_0..γ_{K−1} driving x_off/x_diag to c·g_k after step k, where c = (a_σ − 2)/a_σ.
std::vector<double> rates_for_gaps(int n, double sigma, const std::vector<double>& gaps);

// (n²/2)·log(1/(c·g)); the first entry of rates_for_gaps, without the g > 1 requirement.
double first_rate_for_gap(int n, double sigma, double gap);

}  // namespace simplexmatch
