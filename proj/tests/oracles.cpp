#include "oracles.hpp"

#include <boost/math/special_functions/gamma.hpp>

#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

namespace oracle {

Matrix kronecker_h(const Matrix& a, const Matrix& b) {
  const Eigen::Index n = a.rows();
  const Eigen::Index m = n * n;
  Matrix op = Matrix::Zero(m, m);
  // (Id ⊗ A)[(j,i),(l,k)] = δ_jl A_ik ; (B ⊗ Id)[(j,i),(l,k)] = B_jl δ_ik, with index (col, row) ↦ col*n + row
  for (Eigen::Index j = 0; j < n; ++j)
    for (Eigen::Index i = 0; i < n; ++i)
      for (Eigen::Index l = 0; l < n; ++l)
        for (Eigen::Index k = 0; k < n; ++k) {
          double v = 0.0;
          if (j == l) v += a(i, k);
          if (i == k) v -= b(j, l);
          op(j * n + i, l * n + k) = v;
        }
  return op * op;
}

double quadratic_form_energy(const Matrix& a, const Matrix& b, const Matrix& x) {
  const Matrix h = kronecker_h(a, b);
  const Eigen::Map<const Eigen::VectorXd> v(x.data(), x.size());
  return v.dot(h * v);
}

Matrix kkt_projection(const Matrix& y) {
  const Eigen::Index m = y.size();
  if (m > 20) throw std::invalid_argument("kkt_projection: too many entries");
  const double* v = y.data();
  Matrix best;
  int found = 0;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << m); ++mask) {
    double sum = 0.0;
    int size = 0;
    for (Eigen::Index k = 0; k < m; ++k)
      if (mask >> k & 1) sum += v[k], ++size;
    const double nu = (sum - 1.0) / size;
    bool ok = true;
    for (Eigen::Index k = 0; k < m && ok; ++k) {
      const bool in = mask >> k & 1;
      // support entries strictly positive, the rest at or below the threshold
      ok = in ? v[k] - nu > 0.0 : v[k] - nu <= 0.0;
    }
    if (!ok) continue;
    Matrix x = Matrix::Zero(y.rows(), y.cols());
    for (Eigen::Index k = 0; k < m; ++k)
      if (mask >> k & 1) x.data()[k] = v[k] - nu;
    if (found == 0) best = x;
    ++found;
  }
  if (found != 1) throw std::runtime_error("kkt_projection: expected exactly one KKT point");
  return best;
}

std::vector<int> greedy_literal(const Matrix& c) {
  const Eigen::Index n = c.rows();
  Matrix work = c;
  std::vector<int> map(static_cast<std::size_t>(n), -1);
  const double minus_inf = -std::numeric_limits<double>::infinity();
  for (Eigen::Index round = 0; round < n; ++round) {
    Eigen::Index bi = -1, bj = -1;
    double bv = minus_inf;
    for (Eigen::Index i = 0; i < n; ++i)
      for (Eigen::Index j = 0; j < n; ++j)
        if (work(i, j) != minus_inf && (bi < 0 || work(i, j) > bv)) bi = i, bj = j, bv = work(i, j);
    map[static_cast<std::size_t>(bi)] = static_cast<int>(bj);
    work.row(bi).setConstant(minus_inf);
    work.col(bj).setConstant(minus_inf);
  }
  return map;
}

Matrix finite_difference_half_gradient(const simplexmatch::EnergyContext& ctx, const Matrix& x, double h) {
  Matrix g(x.rows(), x.cols());
  Matrix probe = x;
  for (Eigen::Index j = 0; j < x.cols(); ++j)
    for (Eigen::Index i = 0; i < x.rows(); ++i) {
      probe(i, j) = x(i, j) + h;
      const double up = simplexmatch::energy(ctx, probe);
      probe(i, j) = x(i, j) - h;
      const double down = simplexmatch::energy(ctx, probe);
      probe(i, j) = x(i, j);
      g(i, j) = 0.5 * (up - down) / (2.0 * h);
    }
  return g;
}

long long max_condition_failures(const Matrix& c) {
  long long f = 0;
  for (Eigen::Index i = 0; i < c.rows(); ++i)
    for (Eigen::Index j = 0; j < c.rows(); ++j) {
      if (i == j) continue;
      const double lhs = c(i, i) > c(j, j) ? c(i, i) : c(j, j);
      const double rhs = c(i, j) > c(j, i) ? c(i, j) : c(j, i);
      if (!(lhs > rhs)) ++f;
    }
  return f;
}

long long sum_condition_failures(const Matrix& c) {
  long long f = 0;
  for (Eigen::Index i = 0; i < c.rows(); ++i)
    for (Eigen::Index j = 0; j < c.rows(); ++j)
      if (i != j && !(c(i, i) + c(j, j) > 2.0 * c(i, j))) ++f;
  return f;
}

Matrix random_matrix(int n, std::uint64_t seed, double scale) {
  std::mt19937_64 gen(seed);
  std::normal_distribution<double> d(0.0, scale);
  Matrix m(n, n);
  for (Eigen::Index k = 0; k < m.size(); ++k) m.data()[k] = d(gen);
  return m;
}

Matrix random_symmetric(int n, std::uint64_t seed) {
  const Matrix m = random_matrix(n, seed);
  Matrix s = m + m.transpose();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) s(j, i) = s(i, j);
  return s;
}

Matrix random_spd(int n, std::uint64_t seed) {
  const Matrix m = random_matrix(n, seed);
  Matrix s = m * m.transpose() + 0.1 * Matrix::Identity(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) s(j, i) = s(i, j);
  return s;
}

Matrix random_simplex_point(int n, std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  std::exponential_distribution<double> d(1.0);
  Matrix m(n, n);
  for (Eigen::Index k = 0; k < m.size(); ++k) m.data()[k] = d(gen);
  return m / m.sum();
}

double chi_square_sf(double statistic, int dof) { return boost::math::gamma_q(dof / 2.0, statistic / 2.0); }

}  // namespace oracle
