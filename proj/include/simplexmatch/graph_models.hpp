#pragma once

#include "simplexmatch/types.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>

namespace simplexmatch {

enum class ModelKind { CGW, CER, SUBSAMPLE };

struct ModelSpec {
  ModelKind kind = ModelKind::CGW;
  int n = 0;
  double sigma = 0.0;
  double p = 0.5;  // CER only
  double s = 1.0;  // SUBSAMPLE only
  std::uint64_t seed = 0;
};

std::string to_string(ModelKind kind);
ModelKind parse_model_kind(const std::string& name);

using GraphPair = std::pair<SymMatrix, SymMatrix>;

// GOE(n): off-diagonal variance 1/n, diagonal variance 2/n.
SymMatrix sample_goe(int n, std::uint64_t seed);

// B = Πᵀ A Π + σ Z, so that B(π(i), π(j)) = A(i, j) + σ Z(π(i), π(j)).
GraphPair sample_cgw(int n, double sigma, const Permutation& perm, std::uint64_t seed);

// A ~ G(n, p); conditionally on A, edges of Πᵀ B Π kept with rate 1 − σ²(1 − p)
// and non-edges flipped on with rate σ² p.
GraphPair sample_cer(int n, double sigma, double p, const Permutation& perm, std::uint64_t seed);

// (A − p(J − Id)) / (p(1 − p) n)
SymMatrix standardize_cer(const SymMatrix& a, double p);

SymMatrix conjugate(const SymMatrix& a, const Permutation& perm);

Permutation sample_permutation(int n, std::uint64_t seed);

// Two independent edge retentions of a 0/1 parent graph.
GraphPair subsample_pair(const SymMatrix& h, double s, std::uint64_t seed);

// Induced subgraph on m vertices drawn uniformly without replacement (sorted order).
SymMatrix induced_subgraph(const SymMatrix& h, int m, std::uint64_t seed);

SymMatrix load_edge_list(const std::string& path, std::optional<int> n_hint = std::nullopt);

bool is_binary_graph(const SymMatrix& a);

}  // namespace simplexmatch
