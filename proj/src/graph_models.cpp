#include "simplexmatch/graph_models.hpp"

#include "simplexmatch/rng.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <vector>

namespace simplexmatch {

std::string to_string(ModelKind kind) {
  switch (kind) {
    case ModelKind::CGW: return "CGW";
    case ModelKind::CER: return "CER";
    case ModelKind::SUBSAMPLE: return "SUBSAMPLE";
  }
  return "?";
}

ModelKind parse_model_kind(const std::string& name) {
  if (name == "CGW") return ModelKind::CGW;
  if (name == "CER") return ModelKind::CER;
  if (name == "SUBSAMPLE") return ModelKind::SUBSAMPLE;
  throw InvalidArgument("unknown model kind '" + name + "' (expected CGW, CER or SUBSAMPLE)");
}

SymMatrix sample_goe(int n, std::uint64_t seed) {
  if (n < 1) throw InvalidArgument("sample_goe: n must be >= 1");
  Rng rng(seed);
  const double off = std::sqrt(1.0 / n);
  const double diag = std::sqrt(2.0 / n);
  Matrix a(n, n);
  for (int i = 0; i < n; ++i) {
    a(i, i) = diag * rng.normal();
    for (int j = i + 1; j < n; ++j) {
      const double v = off * rng.normal();
      a(i, j) = v;
      a(j, i) = v;
    }
  }
  return SymMatrix(std::move(a));
}

SymMatrix conjugate(const SymMatrix& a, const Permutation& perm) {
  const int n = a.size();
  if (perm.size() != n) throw InvalidArgument("conjugate: permutation size mismatch");
  Matrix out(n, n);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) out(perm[i], perm[j]) = a(i, j);
  return SymMatrix(std::move(out));
}

GraphPair sample_cgw(int n, double sigma, const Permutation& perm, std::uint64_t seed) {
  if (!(sigma >= 0.0) || !std::isfinite(sigma)) throw InvalidArgument("sample_cgw: sigma must be >= 0");
  if (perm.size() != n) throw InvalidArgument("sample_cgw: permutation size mismatch");
  SymMatrix a = sample_goe(n, derive_seed(seed, {0}));
  SymMatrix b = conjugate(a, perm);
  if (sigma > 0.0) {
    SymMatrix z = sample_goe(n, derive_seed(seed, {1}));
    b = SymMatrix(b.matrix() + sigma * z.matrix());
  }
  return {std::move(a), std::move(b)};
}

GraphPair sample_cer(int n, double sigma, double p, const Permutation& perm, std::uint64_t seed) {
  if (n < 1) throw InvalidArgument("sample_cer: n must be >= 1");
  if (!(p >= 0.0 && p <= 1.0)) throw InvalidArgument("sample_cer: p must lie in [0,1]");
  if (!(sigma >= 0.0 && sigma <= 1.0)) throw InvalidArgument("sample_cer: sigma must lie in [0,1]");
  const double s2 = sigma * sigma;
  if (s2 * (1.0 - p) > 1.0 || s2 * p > 1.0) throw InvalidArgument("sample_cer: flip rates exceed 1");
  if (perm.size() != n) throw InvalidArgument("sample_cer: permutation size mismatch");

  const double keep = 1.0 - s2 * (1.0 - p);
  const double spawn = s2 * p;
  Rng rng_a(derive_seed(seed, {0}));
  Rng rng_b(derive_seed(seed, {1}));
  Matrix a = Matrix::Zero(n, n);
  Matrix b0 = Matrix::Zero(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const bool e = rng_a.bernoulli(p);
      const bool f = rng_b.bernoulli(e ? keep : spawn);
      a(i, j) = a(j, i) = e ? 1.0 : 0.0;
      b0(i, j) = b0(j, i) = f ? 1.0 : 0.0;
    }
  return {SymMatrix(std::move(a)), conjugate(SymMatrix(std::move(b0)), perm)};
}

SymMatrix standardize_cer(const SymMatrix& a, double p) {
  if (!(p > 0.0 && p < 1.0)) throw InvalidArgument("standardize_cer: p must lie in (0,1)");
  const int n = a.size();
  const double scale = p * (1.0 - p) * n;
  Matrix out(n, n);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) out(i, j) = (a(i, j) - (i == j ? 0.0 : p)) / scale;
  return SymMatrix(std::move(out));
}

Permutation sample_permutation(int n, std::uint64_t seed) {
  if (n < 1) throw InvalidArgument("sample_permutation: n must be >= 1");
  std::vector<int> m(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) m[static_cast<std::size_t>(i)] = i;
  Rng rng(seed);
  for (int i = n - 1; i > 0; --i) {
    const auto j = rng.below(static_cast<std::uint64_t>(i) + 1);
    std::swap(m[static_cast<std::size_t>(i)], m[j]);
  }
  return Permutation(std::move(m));
}

bool is_binary_graph(const SymMatrix& a) {
  const Matrix& m = a.matrix();
  for (Eigen::Index j = 0; j < m.cols(); ++j)
    for (Eigen::Index i = 0; i < m.rows(); ++i)
      if (m(i, j) != 0.0 && m(i, j) != 1.0) return false;
  return true;
}

GraphPair subsample_pair(const SymMatrix& h, double s, std::uint64_t seed) {
  if (!(s >= 0.0 && s <= 1.0)) throw InvalidArgument("subsample_pair: s must lie in [0,1]");
  if (!is_binary_graph(h)) throw InvalidArgument("subsample_pair: parent graph must be 0/1");
  const int n = h.size();
  Rng rng_a(derive_seed(seed, {0}));
  Rng rng_b(derive_seed(seed, {1}));
  Matrix a = Matrix::Zero(n, n);
  Matrix b = Matrix::Zero(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      if (h(i, j) == 0.0) continue;
      if (rng_a.bernoulli(s)) a(i, j) = a(j, i) = 1.0;
      if (rng_b.bernoulli(s)) b(i, j) = b(j, i) = 1.0;
    }
  return {SymMatrix(std::move(a)), SymMatrix(std::move(b))};
}

SymMatrix induced_subgraph(const SymMatrix& h, int m, std::uint64_t seed) {
  const int n = h.size();
  if (m < 1 || m > n) throw InvalidArgument("induced_subgraph: size must lie in [1, n]");
  if (m == n) return h;
  Permutation shuffle = sample_permutation(n, seed);
  std::vector<int> keep(shuffle.map().begin(), shuffle.map().begin() + m);
  std::sort(keep.begin(), keep.end());
  Matrix out(m, m);
  for (int j = 0; j < m; ++j)
    for (int i = 0; i < m; ++i) out(i, j) = h(keep[static_cast<std::size_t>(i)], keep[static_cast<std::size_t>(j)]);
  return SymMatrix(std::move(out));
}

SymMatrix load_edge_list(const std::string& path, std::optional<int> n_hint) {
  std::ifstream in(path);
  if (!in) throw IoError("load_edge_list: cannot open '" + path + "'");
  if (n_hint && *n_hint < 0) throw InvalidArgument("load_edge_list: negative size hint");
  std::vector<std::pair<long long, long long>> edges;
  long long max_id = -1;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    long long u = 0, v = 0;
    if (!(ls >> u)) continue;  // blank line
    std::string rest;
    if (!(ls >> v) || (ls >> rest))
      throw InvalidArgument("load_edge_list: malformed line " + std::to_string(lineno) + " in '" + path + "'");
    if (u < 0 || v < 0)
      throw InvalidArgument("load_edge_list: negative vertex index on line " + std::to_string(lineno));
    max_id = std::max({max_id, u, v});
    edges.emplace_back(u, v);
  }
  if (max_id > 1'000'000) throw InvalidArgument("load_edge_list: vertex index too large for dense storage");
  const long long n = std::max<long long>(n_hint.value_or(0), max_id + 1);
  if (n < 1) throw InvalidArgument("load_edge_list: empty graph");
  Matrix a = Matrix::Zero(n, n);
  for (auto [u, v] : edges)
    if (u != v) a(u, v) = a(v, u) = 1.0;
  return SymMatrix(std::move(a));
}

}  // namespace simplexmatch
