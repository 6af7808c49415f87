#include "simplexmatch/types.hpp"

#include <string>

namespace simplexmatch {

SymMatrix::SymMatrix(Matrix m) : m_(std::move(m)) {
  require_square(m_, "SymMatrix");
  if (!all_finite(m_)) throw InvalidArgument("SymMatrix: non-finite entry");
  const Eigen::Index n = m_.rows();
  for (Eigen::Index j = 0; j < n; ++j)
    for (Eigen::Index i = j + 1; i < n; ++i)
      if (m_(i, j) != m_(j, i))
        throw InvalidArgument("SymMatrix: matrix is not exactly symmetric at (" + std::to_string(i) +
                              "," + std::to_string(j) + ")");
}

SymMatrix SymMatrix::zeros(int n) {
  if (n < 1) throw InvalidArgument("SymMatrix: n must be positive");
  return SymMatrix(Matrix::Zero(n, n));
}

Permutation::Permutation(std::vector<int> map) : map_(std::move(map)) {
  std::vector<char> seen(map_.size(), 0);
  for (int v : map_) {
    if (v < 0 || static_cast<std::size_t>(v) >= map_.size() || seen[static_cast<std::size_t>(v)])
      throw InvalidArgument("Permutation: map is not a bijection");
    seen[static_cast<std::size_t>(v)] = 1;
  }
}

Permutation Permutation::identity(int n) {
  if (n < 0) throw InvalidArgument("Permutation: negative size");
  std::vector<int> m(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) m[static_cast<std::size_t>(i)] = i;
  return Permutation(std::move(m));
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(map_.size());
  for (std::size_t i = 0; i < map_.size(); ++i) inv[static_cast<std::size_t>(map_[i])] = static_cast<int>(i);
  return Permutation(std::move(inv));
}

Permutation Permutation::compose(const Permutation& other) const {
  if (other.size() != size()) throw InvalidArgument("Permutation::compose: size mismatch");
  std::vector<int> out(map_.size());
  for (std::size_t i = 0; i < map_.size(); ++i) out[i] = map_[static_cast<std::size_t>(other.map_[i])];
  return Permutation(std::move(out));
}

Matrix Permutation::matrix() const {
  const int n = size();
  Matrix p = Matrix::Zero(n, n);
  for (int i = 0; i < n; ++i) p(i, (*this)[i]) = 1.0;
  return p;
}

void require_square(const Matrix& m, const char* what) {
  if (m.rows() != m.cols() || m.rows() == 0)
    throw InvalidArgument(std::string(what) + ": expected a non-empty square matrix, got " +
                          std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
}

void require_same_size(const Matrix& a, const Matrix& b, const char* what) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw InvalidArgument(std::string(what) + ": dimension mismatch (" + std::to_string(a.rows()) + "x" +
                          std::to_string(a.cols()) + " vs " + std::to_string(b.rows()) + "x" +
                          std::to_string(b.cols()) + ")");
}

bool all_finite(const Matrix& m) { return m.allFinite(); }

}  // namespace simplexmatch
