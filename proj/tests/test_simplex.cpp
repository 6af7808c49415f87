#include "oracles.hpp"

#include "simplexmatch/qap.hpp"
#include "simplexmatch/simplex.hpp"
#include "simplexmatch/step_size.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace simplexmatch;

namespace {

double max_abs(const Matrix& m) { return m.cwiseAbs().maxCoeff(); }

SimplexMatrix random_point(int n, std::uint64_t seed) {
  return SimplexMatrix::from_matrix(oracle::random_simplex_point(n, seed));
}

}  // namespace

TEST_CASE("simplex matrix validation") {
  const SimplexMatrix x = SimplexMatrix::barycenter(3);
  CHECK(max_abs(x.matrix() - Matrix::Constant(3, 3, 1.0 / 9)) == 0.0);
  CHECK_NOTHROW(x.check_invariants());
  Matrix neg = Matrix::Constant(2, 2, 0.25);
  neg(0, 0) = -0.25;
  neg(0, 1) = 0.75;
  CHECK_THROWS_AS(SimplexMatrix::from_matrix(neg), InvalidArgument);
  CHECK_THROWS_AS(SimplexMatrix::from_matrix(Matrix::Constant(2, 2, 0.3)), InvalidArgument);
  CHECK_THROWS_AS(SimplexMatrix::barycenter(0), InvalidArgument);
}

TEST_CASE("projection 2x2 worked case") {
  Matrix y(2, 2);
  y << 0.9, 0.9, -1, -1;
  Matrix expect(2, 2);
  expect << 0.5, 0.5, 0, 0;
  CHECK(max_abs(project_simplex(y).matrix() - expect) < 1e-15);
  CHECK(max_abs(oracle::kkt_projection(y) - expect) < 1e-15);
}

TEST_CASE("projection agrees with the exhaustive KKT oracle") {
  for (std::uint64_t s = 0; s < 200; ++s) {
    const Matrix y = oracle::random_matrix(3, s, 0.5);
    CHECK(max_abs(project_simplex(y).matrix() - oracle::kkt_projection(y)) < 1e-12);
  }
  for (std::uint64_t s = 0; s < 50; ++s) {
    const Matrix y = oracle::random_matrix(4, 1000 + s, 0.2);
    CHECK(max_abs(project_simplex(y).matrix() - oracle::kkt_projection(y)) < 1e-12);
  }
}

TEST_CASE("projection is idempotent, shift invariant and 1-Lipschitz") {
  for (std::uint64_t s = 0; s < 200; ++s) {
    const int n = 2 + static_cast<int>(s % 7);
    const Matrix y1 = oracle::random_matrix(n, s, 0.3);
    const Matrix y2 = oracle::random_matrix(n, s + 5000, 0.3);
    const SimplexMatrix p1 = project_simplex(y1);
    CHECK_NOTHROW(p1.check_invariants());

    const Matrix inside = oracle::random_simplex_point(n, s + 9000);
    CHECK(max_abs(project_simplex(inside).matrix() - inside) < 1e-14);
    CHECK(max_abs(project_simplex(p1.matrix()).matrix() - p1.matrix()) < 1e-14);

    const double c = 3.0 * (static_cast<double>(s % 5) - 2.0);
    CHECK(max_abs(project_simplex((y1.array() + c).matrix()).matrix() - p1.matrix()) < 1e-12);

    CHECK((project_simplex(y2).matrix() - p1.matrix()).norm() <= (y2 - y1).norm() + 1e-12);
  }
  CHECK_THROWS_AS(project_simplex(Matrix::Constant(2, 2, NAN)), InvalidArgument);
}

TEST_CASE("emd step worked case") {
  const SimplexMatrix x = SimplexMatrix::barycenter(2);
  Matrix g(2, 2);
  g << 0, 1, 1, 0;
  Matrix expect(2, 2);
  expect << 3.0 / 8, 1.0 / 8, 1.0 / 8, 3.0 / 8;
  CHECK(max_abs(emd_step(x, g, std::log(3.0)).matrix() - expect) < 1e-15);
  CHECK(emd_step(x, g, 0.0).matrix() == x.matrix());
  CHECK_THROWS_AS(emd_step(x, g, -1.0), InvalidArgument);
  g(0, 0) = NAN;
  CHECK_THROWS_AS(emd_step(x, g, 1.0), NumericError);
}

TEST_CASE("emd step invariances on random inputs") {
  // The min-shift and the γ·G product round differently on each side, so equality is checked to 1e-12.
  for (std::uint64_t s = 0; s < 200; ++s) {
    const int n = 2 + static_cast<int>(s % 9);
    const SimplexMatrix x = random_point(n, s);
    const Matrix g = oracle::random_matrix(n, s + 300);
    const double gamma = 0.05 + 0.01 * static_cast<double>(s % 50);
    const SimplexMatrix base = emd_step(x, g, gamma);
    CHECK_NOTHROW(base.check_invariants());
    const double shift = 10.0 * (static_cast<double>(s % 7) - 3.0);
    CHECK(max_abs(emd_step(x, (g.array() + shift).matrix(), gamma).matrix() - base.matrix()) <=
          1e-12 * max_abs(base.matrix()));
    const double scale = 0.25 + 0.5 * static_cast<double>(s % 6);
    CHECK(max_abs(emd_step(x, scale * g, gamma).matrix() - emd_step(x, g, scale * gamma).matrix()) <=
          1e-12 * max_abs(base.matrix()));
    CHECK(base.matrix().minCoeff() > 0.0);
  }
}

TEST_CASE("emd one step from the barycenter on the population gradient") {
  for (int n : {2, 5, 30})
    for (double sigma : {0.0, 0.5, 1.0})
      for (double gamma : {0.1, 1.0, 10.0}) {
        const SimplexMatrix x = SimplexMatrix::barycenter(n);
        const Matrix next = emd_step(x, population_gradient(x.matrix(), sigma), gamma).matrix();
        const double d = next(0, 0), o = next(0, 1);
        CHECK(d > o);
        for (int i = 0; i < n; ++i)
          for (int j = 0; j < n; ++j) CHECK(next(i, j) == (i == j ? d : o));
      }
}

TEST_CASE("pgd step") {
  const SimplexMatrix x = SimplexMatrix::barycenter(2);
  Matrix g(2, 2);
  g << -0.65, -0.65, 1.25, 1.25;
  Matrix expect(2, 2);
  expect << 0.5, 0.5, 0, 0;
  // J/4 − G = [[0.9, 0.9], [−1, −1]], the projection worked case
  CHECK(max_abs(pgd_step(x, g, 1.0).matrix() - expect) < 1e-15);
  CHECK(max_abs(pgd_step(x, g, 1.0).matrix() - oracle::kkt_projection(x.matrix() - g)) < 1e-15);

  for (std::uint64_t s = 0; s < 50; ++s) {
    const SimplexMatrix p = random_point(4, s);
    CHECK(max_abs(pgd_step(p, oracle::random_matrix(4, s), 0.0).matrix() - p.matrix()) < 1e-15);
    CHECK_NOTHROW(pgd_step(p, oracle::random_matrix(4, s), 2.0).check_invariants());
  }
}

TEST_CASE("step size plug-in values") {
  StepSizeRule dyn = StepSizeRule::dynamic_md();
  CHECK(next_gamma(dyn, 0, Matrix::Zero(3, 3), 1.0) == 0.0);
  Matrix g = Matrix::Zero(2, 2);
  g(1, 0) = -std::numbers::sqrt2;
  CHECK(next_gamma(dyn, 1, g, 1.0) == doctest::Approx(1.0 / std::numbers::sqrt2).epsilon(1e-15));

  StepSizeRule dyn_pgd = StepSizeRule::dynamic_pgd();
  Matrix g2 = Matrix::Zero(2, 2);
  g2(0, 0) = 3;
  g2(1, 1) = 4;
  CHECK(next_gamma(dyn_pgd, 3, g2, 1.0) == doctest::Approx(std::numbers::sqrt2 / 10.0).epsilon(1e-15));
  CHECK(next_gamma(dyn_pgd, 0, Matrix::Zero(2, 2), 1.0) == 0.0);

  StepSizeRule heur = StepSizeRule::heuristic_pgd(1.0);
  Matrix g3 = Matrix::Zero(2, 2);
  g3(0, 1) = 2;
  CHECK(next_gamma(heur, 0, g3, 4.0) == 0.25);
  CHECK(next_gamma(heur, 0, g3, 0.0) == 0.0);

  StepSizeRule cst = StepSizeRule::constant_step(0.7);
  CHECK(next_gamma(cst, 5, g3, 1.0) == 0.7);
  CHECK_THROWS_AS(StepSizeRule::constant_step(-1.0), InvalidArgument);
}

TEST_CASE("fixed rules track the running maximum") {
  const int n = 4, horizon = 8;
  StepSizeRule md = StepSizeRule::fixed_md(horizon);
  Matrix g = Matrix::Zero(n, n);
  g(0, 0) = 2.0;
  const double scale = std::sqrt(2.0 * std::log(static_cast<double>(n))) / 3.0;
  CHECK(next_gamma(md, 0, g, 1.0) == doctest::Approx(2.0 * scale).epsilon(1e-15));
  g(0, 0) = 0.5;
  CHECK(next_gamma(md, 1, g, 1.0) == doctest::Approx(2.0 * scale).epsilon(1e-15));
  g(0, 0) = -5.0;
  CHECK(next_gamma(md, 2, g, 1.0) == doctest::Approx(5.0 * scale).epsilon(1e-15));
  CHECK(md.running_l == 5.0);

  StepSizeRule inv = StepSizeRule::fixed_md(horizon, true);
  CHECK(next_gamma(inv, 0, g, 1.0) == doctest::Approx(scale / 5.0).epsilon(1e-15));

  StepSizeRule pgd = StepSizeRule::fixed_pgd(horizon);
  Matrix g2 = Matrix::Zero(n, n);
  g2(0, 0) = 3;
  g2(2, 1) = 4;
  CHECK(next_gamma(pgd, 0, g2, 1.0) == doctest::Approx(std::numbers::sqrt2 * 5.0 / 3.0).epsilon(1e-15));
}

TEST_CASE("step rule parsing") {
  CHECK(parse_step_rule("dynamic", true, 10).kind == StepKind::DYNAMIC_MD);
  CHECK(parse_step_rule("dynamic", false, 10).kind == StepKind::DYNAMIC_PGD);
  CHECK(parse_step_rule("fixed", true, 10).kind == StepKind::FIXED_MD);
  CHECK(parse_step_rule("fixed", false, 10).horizon == 10);
  CHECK(parse_step_rule("fixed", false, 10, true).invert_lipschitz);
  const StepSizeRule h = parse_step_rule("heuristic:0.5", false, 10);
  CHECK(h.kind == StepKind::HEURISTIC_PGD);
  CHECK(h.theta == 0.5);
  CHECK(parse_step_rule("heuristic", false, 10).theta == 1.0);
  const StepSizeRule c = parse_step_rule("const:2.5", true, 10);
  CHECK(c.kind == StepKind::CONSTANT);
  CHECK(c.constant == 2.5);
  CHECK_THROWS_AS(parse_step_rule("bogus", true, 10), InvalidArgument);
  CHECK_THROWS_AS(parse_step_rule("const:", true, 10), InvalidArgument);
  CHECK_THROWS_AS(parse_step_rule("const:-1", true, 10), InvalidArgument);
  CHECK_THROWS_AS(parse_step_rule("heuristic:x", false, 10), InvalidArgument);
}
