#include "simplexmatch/simplex.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <vector>

namespace simplexmatch {

SimplexMatrix SimplexMatrix::barycenter(int n) {
  if (n < 1) throw InvalidArgument("SimplexMatrix::barycenter: n must be >= 1");
  return SimplexMatrix(Matrix::Constant(n, n, 1.0 / (static_cast<double>(n) * n)));
}

SimplexMatrix SimplexMatrix::from_matrix(Matrix m) {
  require_square(m, "SimplexMatrix");
  SimplexMatrix s(std::move(m));
  try {
    s.check_invariants();
  } catch (const NumericError& e) {
    throw InvalidArgument(e.what());
  }
  return s;
}

void SimplexMatrix::check_invariants() const {
  if (!m_.allFinite()) throw NumericError("SimplexMatrix: non-finite entry");
  if (m_.minCoeff() < 0.0) throw NumericError("SimplexMatrix: negative entry");
  const double sum = m_.sum();
  if (std::abs(sum - 1.0) > kSumTolerance)
    throw NumericError("SimplexMatrix: entries sum to " + std::to_string(sum) + ", expected 1");
}

SimplexMatrix project_simplex(const Matrix& y) {
  require_square(y, "project_simplex");
  if (!y.allFinite()) throw InvalidArgument("project_simplex: non-finite input");
  const Eigen::Index total = y.size();
  std::vector<double> u(y.data(), y.data() + total);
  std::sort(u.begin(), u.end(), std::greater<>());
  // Largest ρ with u_ρ − (Σ_{i≤ρ} u_i − 1)/ρ > 0; ν is the threshold on that support.
  double prefix = 0.0, nu = 0.0;
  for (Eigen::Index k = 0; k < total; ++k) {
    prefix += u[static_cast<std::size_t>(k)];
    const double candidate = (prefix - 1.0) / static_cast<double>(k + 1);
    if (u[static_cast<std::size_t>(k)] - candidate > 0.0) nu = candidate;
    else break;
  }
  Matrix out = (y.array() - nu).cwiseMax(0.0).matrix();
  // Rounding in ν leaves the sum a few ulps away from 1; rescale keeps the invariant tight.
  const double sum = out.sum();
  if (!(sum > 0.0)) throw NumericError("project_simplex: empty support");
  out /= sum;
  return SimplexMatrix(std::move(out));
}

SimplexMatrix emd_step(const SimplexMatrix& x, const Matrix& g, double gamma) {
  require_same_size(x.matrix(), g, "emd_step");
  if (!(gamma >= 0.0) || !std::isfinite(gamma)) throw InvalidArgument("emd_step: gamma must be finite and >= 0");
  if (!g.allFinite()) throw NumericError("emd_step: non-finite gradient");
  if (gamma == 0.0) return x;
  const Matrix scaled = gamma * g;
  const double shift = scaled.minCoeff();
  Matrix out = x.matrix().cwiseProduct((-(scaled.array() - shift)).exp().matrix());
  const double sum = out.sum();
  if (!(sum > 0.0) || !std::isfinite(sum)) throw NumericError("emd_step: weights vanished after exponentiation");
  out /= sum;
  return SimplexMatrix(std::move(out));
}

SimplexMatrix pgd_step(const SimplexMatrix& x, const Matrix& g, double gamma) {
  require_same_size(x.matrix(), g, "pgd_step");
  if (!(gamma >= 0.0) || !std::isfinite(gamma)) throw InvalidArgument("pgd_step: gamma must be finite and >= 0");
  if (!g.allFinite()) throw NumericError("pgd_step: non-finite gradient");
  return project_simplex(x.matrix() - gamma * g);
}

}  // namespace simplexmatch
