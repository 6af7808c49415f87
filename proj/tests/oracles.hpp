// Independent reference implementations used only by the tests.
#pragma once

#include "simplexmatch/qap.hpp"
#include "simplexmatch/types.hpp"

#include <cstdint>
#include <vector>

namespace oracle {

using simplexmatch::Matrix;

// H = (Id ⊗ A − B ⊗ Id)² acting on column-stacked vec(X). Small n only.
Matrix kronecker_h(const Matrix& a, const Matrix& b);
double quadratic_form_energy(const Matrix& a, const Matrix& b, const Matrix& x);

// Projection onto the simplex by enumerating supports and checking the KKT conditions.
Matrix kkt_projection(const Matrix& y);

// Algorithm 1 as written: n rounds of a masked global argmax, scanning rows then columns.
std::vector<int> greedy_literal(const Matrix& c);

// Central differences of the energy, halved to match the library's gradient scale.
Matrix finite_difference_half_gradient(const simplexmatch::EnergyContext& ctx, const Matrix& x, double h);

// Plain ordered-pair scans, written independently of the library.
long long max_condition_failures(const Matrix& c);
long long sum_condition_failures(const Matrix& c);

// Random matrices for property tests.
Matrix random_matrix(int n, std::uint64_t seed, double scale = 1.0);
Matrix random_symmetric(int n, std::uint64_t seed);
Matrix random_spd(int n, std::uint64_t seed);
Matrix random_simplex_point(int n, std::uint64_t seed);

// Upper tail of the χ² distribution.
double chi_square_sf(double statistic, int dof);

}  // namespace oracle
