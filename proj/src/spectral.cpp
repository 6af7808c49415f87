#include "simplexmatch/spectral.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <cmath>
#include <limits>
#include <vector>

namespace simplexmatch {

SortedEigen sorted_eigen(const SymMatrix& a) {
  Eigen::SelfAdjointEigenSolver<Matrix> solver(a.matrix());
  if (solver.info() != Eigen::Success) throw NumericError("eigendecomposition failed to converge");
  SortedEigen out{solver.eigenvalues(), solver.eigenvectors()};
  for (Eigen::Index k = 0; k < out.vectors.cols(); ++k) {
    Eigen::Index arg = 0;
    out.vectors.col(k).cwiseAbs().maxCoeff(&arg);
    if (out.vectors(arg, k) < 0.0) out.vectors.col(k) = -out.vectors.col(k);
  }
  return out;
}

Matrix grampa_similarity(const SymMatrix& a, const SymMatrix& b, double eta) {
  if (a.size() != b.size()) throw InvalidArgument("grampa_similarity: size mismatch");
  if (!std::isfinite(eta)) throw InvalidArgument("grampa_similarity: eta must be finite");
  const SortedEigen ea = sorted_eigen(a);
  const SortedEigen eb = sorted_eigen(b);
  const Eigen::Index n = a.size();
  const Vector c = ea.vectors.colwise().sum().transpose();
  const Vector d = eb.vectors.colwise().sum().transpose();
  const double eta2 = eta * eta;
  Matrix core(n, n);
  for (Eigen::Index j = 0; j < n; ++j)
    for (Eigen::Index i = 0; i < n; ++i) {
      const double gap = ea.values(i) - eb.values(j);
      const double denom = eta2 + gap * gap;
      if (denom == 0.0) throw NumericError("grampa_similarity: eta = 0 with coincident eigenvalues");
      core(i, j) = c(i) * d(j) / denom;
    }
  Matrix tmp(n, n);
  tmp.noalias() = ea.vectors * core;
  Matrix out(n, n);
  out.noalias() = tmp * eb.vectors.transpose();
  return out;
}

Matrix umeyama_similarity(const SymMatrix& a, const SymMatrix& b) {
  if (a.size() != b.size()) throw InvalidArgument("umeyama_similarity: size mismatch");
  const SortedEigen ea = sorted_eigen(a);
  const SortedEigen eb = sorted_eigen(b);
  Matrix out(a.size(), a.size());
  out.noalias() = ea.vectors.cwiseAbs() * eb.vectors.cwiseAbs().transpose();
  return out;
}

namespace {

enum class Verdict { Positive, NotPositive, Inconclusive };

template <unsigned Digits>
Verdict ldl_verdict(const Vector& lambda, const Vector& c, double eta, double& min_pivot, double& log10_min) {
  using Real = boost::multiprecision::number<boost::multiprecision::cpp_bin_float<Digits>,
                                             boost::multiprecision::et_off>;
  const std::size_t n = static_cast<std::size_t>(lambda.size());
  const Real eta2 = Real(eta) * Real(eta);
  // Lower triangle, row-major.
  std::vector<Real> m(n * n);
  Real scale = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j <= i; ++j) {
      const Real gap = Real(lambda(static_cast<Eigen::Index>(i))) - Real(lambda(static_cast<Eigen::Index>(j)));
      m[i * n + j] = Real(c(static_cast<Eigen::Index>(i))) * Real(c(static_cast<Eigen::Index>(j))) / (eta2 + gap * gap);
      scale = std::max(scale, boost::multiprecision::abs(m[i * n + j]));
    }
  const Real tol = scale * Real(4.0 * static_cast<double>(n) * static_cast<double>(n)) *
                   std::numeric_limits<Real>::epsilon();

  Real lowest = std::numeric_limits<Real>::max();
  std::vector<Real> l_col(n);
  for (std::size_t k = 0; k < n; ++k) {
    const Real pivot = m[k * n + k];
    lowest = std::min(lowest, pivot);
    if (pivot <= tol) {
      min_pivot = static_cast<double>(lowest);
      log10_min = lowest > 0 ? static_cast<double>(boost::multiprecision::log10(lowest)) : -INFINITY;
      return pivot < -tol ? Verdict::NotPositive : Verdict::Inconclusive;
    }
    for (std::size_t i = k + 1; i < n; ++i) l_col[i] = m[i * n + k] / pivot;
    for (std::size_t i = k + 1; i < n; ++i) {
      const Real li = l_col[i] * pivot;
      Real* row = &m[i * n];
      for (std::size_t j = k + 1; j <= i; ++j) row[j] -= li * l_col[j];
    }
  }
  min_pivot = static_cast<double>(lowest);
  log10_min = static_cast<double>(boost::multiprecision::log10(lowest));
  return Verdict::Positive;
}

}  // namespace

DefinitenessCertificate certify_grampa_definiteness(const SymMatrix& a, double eta) {
  if (!std::isfinite(eta)) throw InvalidArgument("certify_grampa_definiteness: eta must be finite");
  const SortedEigen ea = sorted_eigen(a);
  const Vector c = ea.vectors.colwise().sum().transpose();
  if (eta == 0.0)
    for (Eigen::Index i = 1; i < ea.values.size(); ++i)
      if (ea.values(i) == ea.values(i - 1))
        throw NumericError("certify_grampa_definiteness: eta = 0 with coincident eigenvalues");
  DefinitenessCertificate cert;
  // A zero weight makes D_c K D_c singular outright.
  if ((c.array() == 0.0).any()) {
    cert.conclusive = true;
    cert.digits = 16;
    return cert;
  }
  Verdict v = ldl_verdict<100>(ea.values, c, eta, cert.min_pivot, cert.log10_min_pivot);
  cert.digits = 100;
  if (v == Verdict::Inconclusive) {
    v = ldl_verdict<300>(ea.values, c, eta, cert.min_pivot, cert.log10_min_pivot);
    cert.digits = 300;
  }
  cert.conclusive = v != Verdict::Inconclusive;
  cert.positive_definite = v == Verdict::Positive;
  return cert;
}

}  // namespace simplexmatch
