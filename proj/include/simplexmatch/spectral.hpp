#pragma once

#include "simplexmatch/types.hpp"

namespace simplexmatch {

struct SortedEigen {
  Vector values;   // ascending
  Matrix vectors;  // column k pairs with values(k); largest-magnitude coordinate positive
};

SortedEigen sorted_eigen(const SymMatrix& a);

// V (K ⊙ (Vᵀ J W)) Wᵀ with K_ij = 1/(η² + (λ_i − μ_j)²).
Matrix grampa_similarity(const SymMatrix& a, const SymMatrix& b, double eta);

// |V| |W|ᵀ
Matrix umeyama_similarity(const SymMatrix& a, const SymMatrix& b);

struct DefinitenessCertificate {
  bool positive_definite = false;
  bool conclusive = false;
  double min_pivot = 0.0;  // smallest LDLᵀ pivot (may underflow to 0 in double)
  double log10_min_pivot = 0.0;
  int digits = 0;          // working precision that settled the question
};

// Decides whether the self-similarity GRAMPA matrix of A (B == A) is positive definite.
// In the eigenbasis of A that matrix is D_c K D_c with c = Vᵀ1, whose smallest eigenvalue can sit far
// below double resolution, so the LDLᵀ runs in extended precision (100 digits, then 300 if inconclusive).
DefinitenessCertificate certify_grampa_definiteness(const SymMatrix& a, double eta);

}  // namespace simplexmatch
