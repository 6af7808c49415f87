#include "simplexmatch/qap.hpp"

#include "simplexmatch/rng.hpp"

#include <algorithm>
#include <cmath>

namespace simplexmatch {

EnergyContext::EnergyContext(SymMatrix a, SymMatrix b) : a_(std::move(a)), b_(std::move(b)) {
  if (a_.size() != b_.size())
    throw InvalidArgument("EnergyContext: A is " + std::to_string(a_.size()) + "x" + std::to_string(a_.size()) +
                          " but B is " + std::to_string(b_.size()) + "x" + std::to_string(b_.size()));
  if (a_.size() == 0) throw InvalidArgument("EnergyContext: empty matrices");
  a2_.noalias() = a_.matrix() * a_.matrix();
  b2_.noalias() = b_.matrix() * b_.matrix();
}

double energy(const EnergyContext& ctx, const Matrix& x) {
  require_same_size(ctx.a(), x, "energy");
  Matrix r(x.rows(), x.cols());
  r.noalias() = ctx.a() * x;
  r.noalias() -= x * ctx.b();
  return r.squaredNorm();
}

Matrix gradient(const EnergyContext& ctx, const Matrix& x) {
  require_same_size(ctx.a(), x, "gradient");
  Matrix ax(x.rows(), x.cols());
  ax.noalias() = ctx.a() * x;
  Matrix g(x.rows(), x.cols());
  g.noalias() = ctx.a2() * x;
  g.noalias() += x * ctx.b2();
  g.noalias() -= 2.0 * (ax * ctx.b());
  return g;
}

EnergyGradient energy_and_gradient(const EnergyContext& ctx, const Matrix& x) {
  require_same_size(ctx.a(), x, "energy_and_gradient");
  Matrix r(x.rows(), x.cols());
  r.noalias() = ctx.a() * x;
  r.noalias() -= x * ctx.b();
  EnergyGradient out;
  out.energy = r.squaredNorm();
  out.gradient.resize(x.rows(), x.cols());
  out.gradient.noalias() = ctx.a() * r;
  out.gradient.noalias() -= r * ctx.b();
  return out;
}

Matrix population_gradient(const Matrix& x, double sigma) {
  require_square(x, "population_gradient");
  const double n = static_cast<double>(x.rows());
  const double c = (2.0 + sigma * sigma) * (n + 1.0) / n;
  Matrix g = c * x - (2.0 / n) * x.transpose();
  g.diagonal().array() -= (2.0 / n) * x.trace();
  return g;
}

double efficiency_ratio(const EnergyContext& ctx, int samples, std::uint64_t seed) {
  if (samples < 1) throw InvalidArgument("efficiency_ratio: samples must be >= 1");
  const int n = ctx.size();
  Rng rng(seed);
  Matrix x(n, n);
  double max_inf = 0.0, max_fro = 0.0;
  for (int s = 0; s < samples; ++s) {
    for (Eigen::Index k = 0; k < x.size(); ++k) x.data()[k] = rng.exponential();
    x /= x.sum();
    const Matrix g = gradient(ctx, x);
    max_inf = std::max(max_inf, g.cwiseAbs().maxCoeff());
    max_fro = std::max(max_fro, g.norm());
  }
  if (max_fro == 0.0) throw NumericError("efficiency_ratio: gradient vanishes on every sample");
  return std::sqrt(std::log(static_cast<double>(n))) * max_inf / max_fro;
}

}  // namespace simplexmatch
