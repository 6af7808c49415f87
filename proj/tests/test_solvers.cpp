#include "oracles.hpp"

#include "simplexmatch/diagnostics.hpp"
#include "simplexmatch/graph_models.hpp"
#include "simplexmatch/rounding.hpp"
#include "simplexmatch/solvers.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>

using namespace simplexmatch;

namespace {

double max_abs(const Matrix& m) { return m.cwiseAbs().maxCoeff(); }

}  // namespace

TEST_CASE("zero graphs keep every iterate at the barycenter") {
  const int n = 5;
  const EnergyContext ctx(SymMatrix::zeros(n), SymMatrix::zeros(n));
  const Matrix bary = Matrix::Constant(n, n, 1.0 / (n * n));
  int seen = 0;
  SolveOptions opts;
  opts.on_iterate = [&](int, const SimplexMatrix& x) {
    CHECK(max_abs(x.matrix() - bary) == 0.0);
    ++seen;
  };
  const SolveReport emd = run_emdgm(ctx, 6, StepSizeRule::dynamic_md(), opts);
  CHECK(seen == 7);
  CHECK(emd.energy_best == 0.0);
  for (double g : emd.gammas) CHECK(g == 0.0);

  seen = 0;
  const SolveReport pgd = run_pgdgm(ctx, 6, StepSizeRule::constant_step(0.3), opts);
  CHECK(seen == 7);
  CHECK(max_abs(pgd.x_best.matrix() - bary) == 0.0);
}

TEST_CASE("report bookkeeping and best-iterate tracking") {
  for (std::uint64_t s = 0; s < 10; ++s) {
    const int n = 20;
    const Permutation pi = sample_permutation(n, s);
    const auto [a, b] = sample_cgw(n, 0.5, pi, 100 + s);
    const EnergyContext ctx(a, b);
    for (bool pgd : {false, true}) {
      SolveOptions opts;
      opts.check_invariants = true;
      std::vector<Matrix> iterates;
      opts.on_iterate = [&](int k, const SimplexMatrix& x) {
        CHECK(k == static_cast<int>(iterates.size()));
        CHECK_NOTHROW(x.check_invariants());
        CHECK(std::abs(x.matrix().sum() - 1.0) <= 1e-10);
        CHECK(x.matrix().minCoeff() >= 0.0);
        if (!pgd) CHECK(x.matrix().minCoeff() > 0.0);
        iterates.push_back(x.matrix());
      };
      const int iters = 15;
      const SolveReport r = pgd ? run_pgdgm(ctx, iters, StepSizeRule::heuristic_pgd(1.0), opts)
                                : run_emdgm(ctx, iters, StepSizeRule::dynamic_md(), opts);
      REQUIRE(iterates.size() == iters + 1);
      CHECK(r.energies.size() == iters + 1);
      CHECK(r.gammas.size() == iters);
      CHECK(r.iterations_run == iters);
      CHECK(r.energy_best == *std::min_element(r.energies.begin(), r.energies.end()));
      CHECK(r.energies[static_cast<std::size_t>(r.best_iteration)] == r.energy_best);
      CHECK(r.x_best.matrix() == iterates[static_cast<std::size_t>(r.best_iteration)]);
      CHECK(r.energy_best <= r.energies[0]);
      for (std::size_t k = 0; k < iterates.size(); ++k)
        CHECK(std::abs(energy(ctx, iterates[k]) - r.energies[k]) <= 1e-12 * r.energies[k]);
      for (double g : r.gammas) CHECK(g >= 0.0);
    }
  }
}

TEST_CASE("noiseless one step: first iterate passes the sum condition and rounds to the truth") {
  for (double gamma : {0.1, 1.0, 10.0})
    for (std::uint64_t s = 0; s < 8; ++s) {
      const int n = 60;
      const Permutation pi = sample_permutation(n, 40 + s);
      const auto [a, b] = sample_cgw(n, 0.0, pi, 80 + s);
      const SolveReport r = run_emdgm(EnergyContext(a, b), 1, StepSizeRule::constant_step(gamma));
      Matrix x1;
      SolveOptions opts;
      opts.on_iterate = [&](int k, const SimplexMatrix& x) {
        if (k == 1) x1 = x.matrix();
      };
      run_emdgm(EnergyContext(a, b), 1, StepSizeRule::constant_step(gamma), opts);
      CHECK(count_suffcond_failures(unpermute(x1, pi), SuffCond::SUM) == 0);
      CHECK(overlap(gmwm(x1), pi) == 1.0);
      CHECK(r.gammas[0] == gamma);
    }
}

TEST_CASE("pgd single step on n=2 equals the hand-composed step") {
  const SymMatrix a = sample_goe(2, 1), b = sample_goe(2, 2);
  const EnergyContext ctx(a, b);
  const double gamma = 3.0;
  const SimplexMatrix x0 = SimplexMatrix::barycenter(2);
  const Matrix expect = pgd_step(x0, gradient(ctx, x0.matrix()), gamma).matrix();
  Matrix x1;
  SolveOptions opts;
  opts.on_iterate = [&](int k, const SimplexMatrix& x) {
    if (k == 1) x1 = x.matrix();
  };
  run_pgdgm(ctx, 1, StepSizeRule::constant_step(gamma), opts);
  CHECK(max_abs(x1 - expect) <= 1e-15);
  CHECK(max_abs(x1 - oracle::kkt_projection(x0.matrix() - gamma * gradient(ctx, x0.matrix()))) <= 1e-12);
}

TEST_CASE("solver argument checks") {
  const EnergyContext ctx(sample_goe(3, 1), sample_goe(3, 2));
  CHECK_THROWS_AS(run_emdgm(ctx, 0, StepSizeRule::dynamic_md()), InvalidArgument);
  CHECK_THROWS_AS(run_pgdgm(ctx, 0, StepSizeRule::dynamic_pgd()), InvalidArgument);
}

TEST_CASE("emd solves are reproducible bit for bit") {
  const auto [a, b] = sample_cgw(40, 0.3, sample_permutation(40, 3), 4);
  const EnergyContext ctx(a, b);
  const SolveReport r1 = run_emdgm(ctx, 20, StepSizeRule::dynamic_md());
  const SolveReport r2 = run_emdgm(ctx, 20, StepSizeRule::dynamic_md());
  CHECK(r1.x_best.matrix() == r2.x_best.matrix());
  CHECK(r1.energies == r2.energies);
}

TEST_CASE("pgd with the heuristic rule recovers CGW n=500 at sigma 0.3 (mean overlap >= 0.9, 10 trials)") {
  const int n = 500, trials = 10;
  double total = 0.0;
  for (int t = 0; t < trials; ++t) {
    const Permutation pi = sample_permutation(n, 700 + static_cast<std::uint64_t>(t));
    const auto [a, b] = sample_cgw(n, 0.3, pi, 800 + static_cast<std::uint64_t>(t));
    const SolveReport r = run_pgdgm(EnergyContext(a, b), 125, StepSizeRule::heuristic_pgd(1.0));
    total += overlap(gmwm(r.x_best.matrix()), pi);
  }
  MESSAGE("PGDGM mean overlap " << total / trials);
  CHECK(total / trials >= 0.9);
}
