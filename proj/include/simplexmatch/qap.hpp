#pragma once

#include "simplexmatch/types.hpp"

#include <cstdint>

namespace simplexmatch {

// Holds A, B and their squares. Immutable after construction.
class EnergyContext {
 public:
  EnergyContext(SymMatrix a, SymMatrix b);

  int size() const { return a_.size(); }
  const Matrix& a() const { return a_.matrix(); }
  const Matrix& b() const { return b_.matrix(); }
  const Matrix& a2() const { return a2_; }
  const Matrix& b2() const { return b2_; }
  const SymMatrix& a_sym() const { return a_; }
  const SymMatrix& b_sym() const { return b_; }

 private:
  SymMatrix a_, b_;
  Matrix a2_, b2_;
};

// ‖AX − XB‖²_F
double energy(const EnergyContext& ctx, const Matrix& x);

// A²X + XB² − 2AXB, which is half the Euclidean gradient of energy().
Matrix gradient(const EnergyContext& ctx, const Matrix& x);

struct EnergyGradient {
  double energy = 0.0;
  Matrix gradient;
};

// Residual form used by the solvers: R = AX − XB, gradient = AR − RB.
EnergyGradient energy_and_gradient(const EnergyContext& ctx, const Matrix& x);

// Expected gradient under CGW with ground truth Id:
// (2 + σ²)((n+1)/n) X − (2/n)(Tr(X) Id + Xᵀ)
Matrix population_gradient(const Matrix& x, double sigma);

// √(log n) · max‖∇E‖∞ / max‖∇E‖_F over flat-Dirichlet samples of Δ_{n²}.
double efficiency_ratio(const EnergyContext& ctx, int samples, std::uint64_t seed);

}  // namespace simplexmatch
