#include "oracles.hpp"

#include "simplexmatch/graph_models.hpp"

#include <doctest.h>

#include <array>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>

using namespace simplexmatch;

namespace {

std::string write_temp(const std::string& name, const std::string& body) {
  const auto path = std::filesystem::temp_directory_path() / ("sm_edges_" + name);
  std::ofstream(path) << body;
  return path.string();
}

}  // namespace

TEST_CASE("goe is exactly symmetric and reproducible") {
  for (int n : {1, 2, 7, 40}) {
    const SymMatrix a = sample_goe(n, 99);
    CHECK(a.matrix() == a.matrix().transpose());
    CHECK(sample_goe(n, 99) == a);
  }
  CHECK_FALSE(sample_goe(5, 1) == sample_goe(5, 2));
  CHECK_THROWS_AS(sample_goe(0, 1), InvalidArgument);
}

TEST_CASE("goe n=1 is a single N(0,2) draw") {
  const int m = 100000;
  double s = 0.0, s2 = 0.0;
  for (int k = 0; k < m; ++k) {
    const double v = sample_goe(1, static_cast<std::uint64_t>(k))(0, 0);
    s += v;
    s2 += v * v;
  }
  const double var = s2 / m - (s / m) * (s / m);
  CHECK(var >= 1.95);
  CHECK(var <= 2.05);
}

TEST_CASE("goe second moment: mean of A^2 is ((n+1)/n) Id within 5 SE") {
  const int n = 50, m = 5000;
  Matrix sum = Matrix::Zero(n, n), sum_sq = Matrix::Zero(n, n);
  for (int k = 0; k < m; ++k) {
    const Matrix a = sample_goe(n, 1000 + static_cast<std::uint64_t>(k)).matrix();
    const Matrix a2 = a * a;
    sum += a2;
    sum_sq += a2.cwiseProduct(a2);
  }
  const Matrix mean = sum / m;
  const Matrix se = ((sum_sq / m - mean.cwiseProduct(mean)) / (m - 1.0)).cwiseSqrt();
  int bad = 0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const double target = i == j ? (n + 1.0) / n : 0.0;
      bad += std::abs(mean(i, j) - target) > 5.0 * se(i, j);
    }
  CHECK(bad == 0);
}

TEST_CASE("cgw with sigma 0 is an exact conjugate pair") {
  const int n = 12;
  const auto [a, b] = sample_cgw(n, 0.0, Permutation::identity(n), 5);
  CHECK(a == b);
  const Permutation pi = sample_permutation(n, 17);
  const auto [a2, b2] = sample_cgw(n, 0.0, pi, 5);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) CHECK(b2(pi[i], pi[j]) == a2(i, j));
  CHECK(b2.matrix() == pi.matrix().transpose() * a2.matrix() * pi.matrix());
}

TEST_CASE("cgw sigma=1 aligned off-diagonal correlation is 1/sqrt(2)") {
  const int n = 100;
  std::vector<double> x, y;
  for (std::uint64_t seed : {1, 2, 3}) {
    const Permutation pi = sample_permutation(n, seed + 50);
    const auto [a, b] = sample_cgw(n, 1.0, pi, seed);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        x.push_back(a(i, j));
        y.push_back(b(pi[i], pi[j]));
      }
  }
  REQUIRE(x.size() >= 10000);
  const double m = static_cast<double>(x.size());
  double sx = 0, sy = 0, sxx = 0, syy = 0, sxy = 0;
  for (std::size_t k = 0; k < x.size(); ++k) {
    sx += x[k], sy += y[k], sxx += x[k] * x[k], syy += y[k] * y[k], sxy += x[k] * y[k];
  }
  const double corr = (sxy / m - sx / m * sy / m) /
                      std::sqrt((sxx / m - sx / m * sx / m) * (syy / m - sy / m * sy / m));
  CHECK(std::abs(corr - 1.0 / std::sqrt(2.0)) < 0.05);
}

TEST_CASE("cer sigma 0 conjugacy, forced case and parameter checks") {
  const int n = 15;
  const Permutation pi = sample_permutation(n, 3);
  const auto [a, b] = sample_cer(n, 0.0, 0.3, pi, 11);
  CHECK(conjugate(a, pi) == b);
  CHECK(a.matrix().diagonal().isZero(0.0));
  CHECK(is_binary_graph(a));

  const auto [a1, b1] = sample_cer(2, 0.0, 1.0, Permutation::identity(2), 0);
  Matrix expect(2, 2);
  expect << 0, 1, 1, 0;
  CHECK(a1.matrix() == expect);
  CHECK(b1.matrix() == expect);

  CHECK_THROWS_AS(sample_cer(5, 0.5, 1.5, Permutation::identity(5), 0), InvalidArgument);
  CHECK_THROWS_AS(sample_cer(5, 1.1, 0.5, Permutation::identity(5), 0), InvalidArgument);
  CHECK_THROWS_AS(sample_cer(5, -0.1, 0.5, Permutation::identity(5), 0), InvalidArgument);
}

TEST_CASE("cer marginal edge density of both graphs is p within 5 SE") {
  const int n = 10, trials = 10000;
  const double pairs = n * (n - 1) / 2.0;
  for (auto [sigma, p] : std::array<std::pair<double, double>, 3>{{{0.5, 0.3}, {1.0, 0.1}, {0.8, 0.7}}}) {
    double ea = 0, eb = 0;
    for (int t = 0; t < trials; ++t) {
      const auto [a, b] = sample_cer(n, sigma, p, sample_permutation(n, 7 * t + 1), 31 * t + 5);
      ea += a.matrix().sum() / 2.0;
      eb += b.matrix().sum() / 2.0;
    }
    const double total = trials * pairs;
    const double se = std::sqrt(p * (1 - p) / total);
    CHECK(std::abs(ea / total - p) < 5 * se);
    CHECK(std::abs(eb / total - p) < 5 * se);
  }
}

TEST_CASE("cer standardization") {
  const double p = 0.3;
  const int n = 6;
  Matrix mean = p * (Matrix::Ones(n, n) - Matrix::Identity(n, n));
  CHECK(standardize_cer(SymMatrix(mean), p).matrix().isZero(0.0));

  Matrix a(2, 2);
  a << 0, 1, 1, 0;
  const SymMatrix s = standardize_cer(SymMatrix(a), 0.5);
  CHECK(s.matrix() == a);

  const auto [g, h] = sample_cer(30, 0.4, 0.2, Permutation::identity(30), 3);
  const SymMatrix sg = standardize_cer(g, 0.2);
  CHECK(sg.matrix() == sg.matrix().transpose());
  CHECK_THROWS_AS(standardize_cer(g, 0.0), InvalidArgument);
  CHECK_THROWS_AS(standardize_cer(g, 1.0), InvalidArgument);
}

TEST_CASE("permutations") {
  CHECK(sample_permutation(1, 4) == Permutation::identity(1));
  for (std::uint64_t s = 0; s < 20; ++s) {
    const Permutation p = sample_permutation(9, s);
    CHECK(p.compose(p.inverse()) == Permutation::identity(9));
    CHECK(p.inverse().compose(p) == Permutation::identity(9));
    CHECK(sample_permutation(9, s) == p);
  }
  CHECK_THROWS_AS(Permutation({0, 0, 1}), InvalidArgument);
  CHECK_THROWS_AS(sample_permutation(0, 1), InvalidArgument);
}

TEST_CASE("fisher-yates is uniform over S_3 (chi-square, p > 1e-6)") {
  const int m = 60000;
  std::map<std::vector<int>, int> counts;
  for (int s = 0; s < m; ++s) ++counts[sample_permutation(3, static_cast<std::uint64_t>(s)).map()];
  REQUIRE(counts.size() == 6);
  const double expected = m / 6.0;
  double chi2 = 0.0;
  for (const auto& [perm, c] : counts) chi2 += (c - expected) * (c - expected) / expected;
  CHECK(oracle::chi_square_sf(chi2, 5) > 1e-6);
}

TEST_CASE("subsampling") {
  const int n = 30;
  const auto [h0, unused] = sample_cer(n, 0.0, 0.3, Permutation::identity(n), 8);
  const auto [a1, b1] = subsample_pair(h0, 1.0, 4);
  CHECK(a1 == h0);
  CHECK(b1 == h0);
  const auto [a0, b0] = subsample_pair(h0, 0.0, 4);
  CHECK(a0.matrix().isZero(0.0));
  CHECK(b0.matrix().isZero(0.0));

  Matrix weighted = h0.matrix();
  weighted(0, 1) = weighted(1, 0) = 0.5;
  CHECK_THROWS_AS(subsample_pair(SymMatrix(weighted), 0.5, 1), InvalidArgument);
  CHECK_THROWS_AS(subsample_pair(h0, 1.5, 1), InvalidArgument);
}

TEST_CASE("subsampling: shared edges average s^2 |E(H)| within 5 SE") {
  const int n = 40, trials = 1000;
  const double s = 0.6;
  const auto [h, unused] = sample_cer(n, 0.0, 0.2, Permutation::identity(n), 21);
  const double edges = h.matrix().sum() / 2.0;
  double sum = 0, sum2 = 0;
  for (int t = 0; t < trials; ++t) {
    const auto [a, b] = subsample_pair(h, s, 1000 + static_cast<std::uint64_t>(t));
    const double shared = a.matrix().cwiseProduct(b.matrix()).sum() / 2.0;
    sum += shared;
    sum2 += shared * shared;
  }
  const double mean = sum / trials;
  const double se = std::sqrt((sum2 / trials - mean * mean) / (trials - 1.0));
  CHECK(std::abs(mean - s * s * edges) < 5 * se);
}

TEST_CASE("edge list loading") {
  const SymMatrix one = load_edge_list(write_temp("one", "0 1\n"));
  Matrix expect = Matrix::Zero(2, 2);
  expect(0, 1) = expect(1, 0) = 1;
  CHECK(one.matrix() == expect);
  CHECK(load_edge_list(write_temp("dup", "0 1\n1 0\n0 1\n")).matrix() == expect);
  CHECK(load_edge_list(write_temp("loop", "2 2\n"), 3).matrix() == Matrix::Zero(3, 3));
  CHECK(load_edge_list(write_temp("comment", "# header\n0 1 # trailing\n\n"), 4).size() == 4);
  CHECK_THROWS_AS(load_edge_list(write_temp("bad", "0 x\n")), InvalidArgument);
  CHECK_THROWS_AS(load_edge_list(write_temp("three", "0 1 2\n")), InvalidArgument);
  CHECK_THROWS_AS(load_edge_list(write_temp("neg", "-1 2\n")), InvalidArgument);
  CHECK_THROWS_AS(load_edge_list("/nonexistent/edges.txt"), IoError);
}

TEST_CASE("induced subgraph keeps adjacency between chosen vertices") {
  const auto [h, unused] = sample_cer(20, 0.0, 0.4, Permutation::identity(20), 2);
  const SymMatrix sub = induced_subgraph(h, 8, 9);
  CHECK(sub.size() == 8);
  CHECK(is_binary_graph(sub));
  CHECK(induced_subgraph(h, 8, 9) == sub);
  CHECK(induced_subgraph(h, 20, 9) == h);
}
