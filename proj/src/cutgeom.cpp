#include "elliptope/cutgeom.hpp"

#include <cmath>
#include <stdexcept>

namespace elliptope {

CutVector::CutVector(std::vector<std::int8_t> entries) : entries_(std::move(entries)) {
  if (entries_.empty()) {
    throw std::invalid_argument("CutVector: length must be positive");
  }
  for (std::int8_t e : entries_) {
    if (e != 1 && e != -1) {
      throw std::invalid_argument("CutVector: entries must be +1 or -1");
    }
  }
}

CutVector CutVector::negated() const {
  std::vector<std::int8_t> flipped(entries_.size());
  for (std::size_t i = 0; i < entries_.size(); ++i) flipped[i] = static_cast<std::int8_t>(-entries_[i]);
  return CutVector(std::move(flipped));
}

Eigen::MatrixXd CutMatrix::dense() const {
  const int n = dimension();
  Eigen::MatrixXd out(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out(i, j) = double((*this)(i, j));
  return out;
}

bool CutMatrix::operator==(const CutMatrix& other) const {
  if (dimension() != other.dimension()) return false;
  // cc^t = dd^t over ±1 vectors iff d = c or d = -c.
  return source_ == other.source_ || source_ == other.source_.negated();
}

SymmetricMatrix::SymmetricMatrix(int dimension) : dim_(dimension) {
  if (dimension <= 0) throw std::invalid_argument("SymmetricMatrix: dimension must be positive");
  data_ = Eigen::MatrixXd::Zero(dimension, dimension);
}

SymmetricMatrix SymmetricMatrix::from_dense(const Eigen::MatrixXd& m, double sym_tol) {
  if (m.rows() != m.cols()) throw std::invalid_argument("SymmetricMatrix: input not square");
  SymmetricMatrix out(static_cast<int>(m.rows()));
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j <= i; ++j) {
      if (std::abs(m(i, j) - m(j, i)) > sym_tol) {
        throw std::invalid_argument("SymmetricMatrix: input not symmetric");
      }
      out.set(i, j, m(i, j));
    }
  }
  return out;
}

void SymmetricMatrix::set(int i, int j, double value) {
  data_(i, j) = value;
  data_(j, i) = value;
}

CutVector cut_vector_from_subset(const std::set<int>& subset, int n) {
  if (n <= 0) throw std::invalid_argument("cut_vector_from_subset: n must be positive");
  for (int i : subset) {
    if (i < 1 || i > n) throw std::invalid_argument("cut_vector_from_subset: index out of range");
  }
  std::vector<std::int8_t> entries(static_cast<std::size_t>(n), std::int8_t{-1});
  for (int i : subset) entries[static_cast<std::size_t>(i - 1)] = 1;
  return CutVector(std::move(entries));
}

bool is_correlation_matrix(const SymmetricMatrix& X, double tol) {
  if (tol < 0) throw std::invalid_argument("is_correlation_matrix: tol must be nonnegative");
  const Eigen::MatrixXd& m = X.dense();
  if (!m.allFinite()) throw std::invalid_argument("is_correlation_matrix: non-finite entries");
  for (int i = 0; i < X.dimension(); ++i) {
    if (std::abs(m(i, i) - 1.0) > tol) return false;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m, Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff() >= -tol;
}

bool is_correlation_matrix(const CutMatrix& X, double /*tol*/) {
  // cc^t has unit diagonal and eigenvalues {n, 0, ..., 0}; re-verify the
  // outer-product structure in integers so the check is exact at tol = 0.
  const int n = X.dimension();
  const CutVector& c = X.source();
  for (int i = 0; i < n; ++i) {
    if (X(i, i) != 1) return false;
    for (int j = 0; j < n; ++j) {
      if (X(i, j) != int(c[i]) * int(c[j])) return false;
    }
  }
  return true;
}

bool simplicial_dim_feasible(long long k, long long n) {
  if (k < 0) throw std::invalid_argument("simplicial_dim_feasible: k must be nonnegative");
  if (n < 1) throw std::invalid_argument("simplicial_dim_feasible: n must be positive");
  return k * (k + 1) <= 2 * (n - 1);
}

std::array<double, 3> lower_triangle_embed(const SymmetricMatrix& X) {
  if (X.dimension() != 3) throw std::invalid_argument("lower_triangle_embed: dimension must be 3");
  return {X(1, 0), X(2, 0), X(2, 1)};
}

std::array<double, 3> lower_triangle_embed(const CutMatrix& X) {
  if (X.dimension() != 3) throw std::invalid_argument("lower_triangle_embed: dimension must be 3");
  return {double(X(1, 0)), double(X(2, 0)), double(X(2, 1))};
}

}  // namespace elliptope
