#pragma once

#include "simplexmatch/qap.hpp"
#include "simplexmatch/types.hpp"

namespace simplexmatch {

// Nonnegative n×n matrix with entries summing to 1.
class SimplexMatrix {
 public:
  static constexpr double kSumTolerance = 1e-10;

  static SimplexMatrix barycenter(int n);
  // Validates nonnegativity and the unit sum.
  static SimplexMatrix from_matrix(Matrix m);

  int size() const { return static_cast<int>(m_.rows()); }
  const Matrix& matrix() const { return m_; }
  double operator()(int i, int j) const { return m_(i, j); }

  // Throws NumericError if an invariant is broken.
  void check_invariants() const;

 private:
  explicit SimplexMatrix(Matrix m) : m_(std::move(m)) {}
  Matrix m_;

  friend SimplexMatrix project_simplex(const Matrix& y);
  friend SimplexMatrix emd_step(const SimplexMatrix& x, const Matrix& g, double gamma);
};

// Euclidean projection onto {X ≥ 0, ΣX = 1}: (Y − ν)₊ with ν found by sort-and-threshold.
SimplexMatrix project_simplex(const Matrix& y);

// X ⊙ exp(−γ(G − min G)) renormalized to sum 1.
SimplexMatrix emd_step(const SimplexMatrix& x, const Matrix& g, double gamma);

// proj(X − γG)
SimplexMatrix pgd_step(const SimplexMatrix& x, const Matrix& g, double gamma);

}  // namespace simplexmatch
