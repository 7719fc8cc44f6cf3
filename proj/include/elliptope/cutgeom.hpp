/**
 * @file cutgeom.hpp
 * @brief Cut vectors, cut matrices, correlation-matrix membership, and the
 *        3-D lower-triangle embedding of S^3.
 *
 * A cut vector is a ±1 vector c of length n; its outer product cc^t is a cut
 * matrix, which is exactly a vertex of the elliptope (the set of n x n
 * correlation matrices). Everything here is exact integer algebra except the
 * eigenvalue test behind is_correlation_matrix.
 */

#pragma once

#include <array>
#include <cstdint>
#include <set>
#include <vector>

#include <Eigen/Dense>

namespace elliptope {

/// ±1 vector of length n. Entries are stored as small signed integers so all
/// cut-vector algebra stays exact.
class CutVector {
 public:
  CutVector() = default;
  /// Validates that every entry is exactly +1 or -1.
  explicit CutVector(std::vector<std::int8_t> entries);

  int size() const { return static_cast<int>(entries_.size()); }
  std::int8_t operator[](int i) const { return entries_[static_cast<std::size_t>(i)]; }
  const std::vector<std::int8_t>& entries() const { return entries_; }

  CutVector negated() const;
  bool operator==(const CutVector& other) const { return entries_ == other.entries_; }
  bool operator!=(const CutVector& other) const { return entries_ != other.entries_; }

 private:
  std::vector<std::int8_t> entries_;
};

/// Rank-one outer product cc^t of a cut vector with itself. The generating
/// vector is kept because c and -c produce the same matrix and downstream
/// certificate construction needs the vector, not the matrix.
class CutMatrix {
 public:
  explicit CutMatrix(CutVector source) : source_(std::move(source)) {}

  int dimension() const { return source_.size(); }
  const CutVector& source() const { return source_; }
  /// Entry (i,j) = c_i * c_j.
  int operator()(int i, int j) const { return int(source_[i]) * int(source_[j]); }
  Eigen::MatrixXd dense() const;

  /// Entrywise equality (two cut matrices are equal iff their sources agree
  /// up to a global sign flip).
  bool operator==(const CutMatrix& other) const;

 private:
  CutVector source_;
};

inline CutMatrix cut_matrix(const CutVector& c) { return CutMatrix(c); }

/// Dense symmetric matrix with mirror-on-write storage; off-diagonal writes
/// set both (i,j) and (j,i) so symmetry holds exactly.
class SymmetricMatrix {
 public:
  explicit SymmetricMatrix(int dimension);
  static SymmetricMatrix from_dense(const Eigen::MatrixXd& m, double sym_tol = 0.0);

  int dimension() const { return dim_; }
  double operator()(int i, int j) const { return data_(i, j); }
  void set(int i, int j, double value);
  const Eigen::MatrixXd& dense() const { return data_; }

 private:
  int dim_ = 0;
  Eigen::MatrixXd data_;
};

/// Builds the cut vector c_S with (c_S)_i = +1 for i in S and -1 otherwise.
/// Indices in S are 1-based and must lie in {1..n}.
CutVector cut_vector_from_subset(const std::set<int>& subset, int n);

/// True iff every diagonal entry is within tol of 1 and the minimum
/// eigenvalue is >= -tol. Throws on non-finite entries.
bool is_correlation_matrix(const SymmetricMatrix& X, double tol = 1e-9);

/// Exact-integer overload: a valid CutMatrix is rank one with unit diagonal,
/// so membership is decided without floating point (works at tol = 0).
bool is_correlation_matrix(const CutMatrix& X, double tol = 0.0);

/// Truth value of k(k+1) <= 2(n-1): whether the elliptope in dimension n can
/// have a simplicial face of dimension k.
bool simplicial_dim_feasible(long long k, long long n);

/// Extracts the strict lower triangle (X21, X31, X32) of a 3x3 symmetric
/// matrix. Throws unless the dimension is exactly 3.
std::array<double, 3> lower_triangle_embed(const SymmetricMatrix& X);
std::array<double, 3> lower_triangle_embed(const CutMatrix& X);

}  // namespace elliptope
