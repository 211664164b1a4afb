#pragma once

#include "slodowy/linalg.hpp"
#include "slodowy/rational.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace slodowy {

/// Sparse exact n x n matrix with 1-based indices and no stored zeros.
class Mat {
 public:
  using Index = std::pair<int, int>;

  Mat() = default;
  explicit Mat(int n) : n_(n) {}

  static Mat zero(int n) { return Mat(n); }
  static Mat identity(int n);
  /// Elementary matrix E_ij.
  static Mat unit(int n, int i, int j);
  static Mat diagonal(const std::vector<Rat>& d);
  /// Inverse of vec(); the vector lives in Q^{n*n}.
  static Mat from_vec(int n, const SparseVec& v);

  int dim() const { return n_; }
  Rat at(int i, int j) const;
  void set(int i, int j, const Rat& v);
  void add_to(int i, int j, const Rat& v);
  const std::map<Index, Rat>& entries() const { return entries_; }
  bool is_zero() const { return entries_.empty(); }
  bool is_diagonal() const;

  Mat operator+(const Mat& o) const;
  Mat operator-(const Mat& o) const;
  Mat operator-() const;
  Mat operator*(const Mat& o) const;
  Mat operator*(const Rat& c) const;
  Mat& operator+=(const Mat& o);
  bool operator==(const Mat& o) const = default;

  Rat trace() const;
  Mat transpose() const;
  Mat pow(int k) const;

  /// Row-major coordinates: E_ij sits at (i-1)*n + (j-1).
  SparseVec vec() const;
  static int flat(int n, int i, int j) { return (i - 1) * n + (j - 1); }

  /// Matrix times a column vector of length n (0-based coordinates).
  std::vector<Rat> apply(const std::vector<Rat>& v) const;

  std::string str() const;

 private:
  void check_same(const Mat& o) const;
  int n_ = 0;
  std::map<Index, Rat> entries_;
};

inline Mat operator*(const Rat& c, const Mat& m) { return m * c; }

/// Matrix commutator xy - yx.
Mat bracket(const Mat& x, const Mat& y);

/// tr(xy), the bilinear form used throughout (not the Killing form).
Rat trace_pair(const Mat& x, const Mat& y);

/// Rank of a matrix over Q.
std::size_t matrix_rank(const Mat& m);

}  // namespace slodowy
