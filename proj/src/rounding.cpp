#include "simplexmatch/rounding.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

namespace simplexmatch {

Permutation gmwm(const Matrix& c) {
  require_square(c, "gmwm");
  if (!c.allFinite()) throw InvalidArgument("gmwm: non-finite entry");
  const Eigen::Index n = c.rows();
  const Eigen::Index total = c.size();
  // Column-major linear index k = i + j n; order by value desc, then row, then column.
  std::vector<std::int64_t> order(static_cast<std::size_t>(total));
  std::iota(order.begin(), order.end(), std::int64_t{0});
  const double* v = c.data();
  std::sort(order.begin(), order.end(), [&](std::int64_t x, std::int64_t y) {
    if (v[x] != v[y]) return v[x] > v[y];
    const std::int64_t rx = x % n, ry = y % n;
    if (rx != ry) return rx < ry;
    return x / n < y / n;
  });
  std::vector<int> map(static_cast<std::size_t>(n), -1);
  std::vector<char> row_used(static_cast<std::size_t>(n), 0), col_used(static_cast<std::size_t>(n), 0);
  Eigen::Index assigned = 0;
  for (std::int64_t k : order) {
    const auto i = static_cast<std::size_t>(k % n), j = static_cast<std::size_t>(k / n);
    if (row_used[i] || col_used[j]) continue;
    row_used[i] = col_used[j] = 1;
    map[i] = static_cast<int>(j);
    if (++assigned == n) break;
  }
  return Permutation(std::move(map));
}

double overlap(const Permutation& p, const Permutation& p_star) {
  if (p.size() != p_star.size()) throw InvalidArgument("overlap: size mismatch");
  if (p.size() == 0) throw InvalidArgument("overlap: empty permutations");
  int hits = 0;
  for (int i = 0; i < p.size(); ++i) hits += p[i] == p_star[i];
  return static_cast<double>(hits) / p.size();
}

}  // namespace simplexmatch
