#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace simplexmatch {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

// Errors thrown by the core. The C API maps each class to a status code.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};
class InvalidArgument : public Error {
 public:
  using Error::Error;
};
class NumericError : public Error {
 public:
  using Error::Error;
};
class IoError : public Error {
 public:
  using Error::Error;
};

// Dense square matrix that is exactly symmetric with finite entries.
class SymMatrix {
 public:
  SymMatrix() = default;
  explicit SymMatrix(Matrix m);

  static SymMatrix zeros(int n);

  int size() const { return static_cast<int>(m_.rows()); }
  const Matrix& matrix() const { return m_; }
  double operator()(int i, int j) const { return m_(i, j); }

  bool operator==(const SymMatrix& other) const { return m_ == other.m_; }

 private:
  Matrix m_;
};

// Bijection of {0..n-1}; map()[i] is the image of i.
// Matrix view: P(i, map[i]) = 1.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> map);

  static Permutation identity(int n);

  int size() const { return static_cast<int>(map_.size()); }
  int operator[](int i) const { return map_[static_cast<std::size_t>(i)]; }
  const std::vector<int>& map() const { return map_; }

  Permutation inverse() const;
  // (this ∘ other)(i) = this[other[i]]
  Permutation compose(const Permutation& other) const;
  Matrix matrix() const;

  bool operator==(const Permutation& other) const { return map_ == other.map_; }

 private:
  std::vector<int> map_;
};

void require_square(const Matrix& m, const char* what);
void require_same_size(const Matrix& a, const Matrix& b, const char* what);
bool all_finite(const Matrix& m);

}  // namespace simplexmatch
