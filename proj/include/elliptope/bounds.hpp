/**
 * @file bounds.hpp
 * @brief Closed-form probability bounds for the Face(p,r,n) model and exact
 *        brute-force oracles for the second-moment matrices behind them.
 *
 * Three lower bounds on P{Face(p,r,n) is a simplicial face of dim r-1}:
 *
 *   thm1 (p = 0.5):  1 - r^2 exp(-n / r^2)
 *   thm2:            1 - r^2 exp(-4 p^2(1-p)^2 n / r^2)
 *   thm3:            1 - 4 exp((r^2 - c p^2(1-p)^2 n) / 4),  c = 4/13122
 *
 * plus the two span-failure tail bounds they are assembled from:
 *
 *   chernoff:  d exp(-lambda s / (2B))
 *   oliveira:  2 exp(d/2 - s / (162 h))
 *
 * The moment oracles enumerate all 2^r sign vectors with their exact
 * rational probabilities and validate the closed forms
 * E[ww^t] = (1-alpha) I + alpha J, the Sigma = E[yy^t] entry table, the
 * symmetric-tensor lift whose strict-pair block restricts to Sigma, and
 * E[zz^t] = I at p = 0.5.
 */

#pragma once

#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace elliptope {

using Rational = boost::multiprecision::cpp_rational;

/// Dense rational matrix for the exact moment oracles.
struct RationalMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<Rational> data;  // row-major

  RationalMatrix() = default;
  RationalMatrix(int r, int c) : rows(r), cols(c), data(std::size_t(r) * std::size_t(c), Rational(0)) {}
  Rational& at(int i, int j) { return data[std::size_t(i) * std::size_t(cols) + std::size_t(j)]; }
  const Rational& at(int i, int j) const { return data[std::size_t(i) * std::size_t(cols) + std::size_t(j)]; }
  bool operator==(const RationalMatrix& other) const {
    return rows == other.rows && cols == other.cols && data == other.data;
  }
};

/// Smallest eigenvalue of the double-precision image of a rational symmetric
/// matrix.
double min_eigenvalue(const RationalMatrix& m);

// ---------------------------------------------------------------------------
// Theorem bounds (value clamped to [0,1]; _raw exposes the unclamped form)
// ---------------------------------------------------------------------------

inline constexpr double kThm3Constant = 4.0 / 13122.0;  // >= 0.0003 as required

double bound_thm1(long long r, double n);
double bound_thm1_raw(long long r, double n);
double bound_thm2(double p, long long r, double n);
double bound_thm2_raw(double p, long long r, double n);
double bound_thm3(double p, long long r, double n);
double bound_thm3_raw(double p, long long r, double n);

// ---------------------------------------------------------------------------
// Span-failure tail bounds
// ---------------------------------------------------------------------------

/// Inputs to the matrix-Chernoff span bound: dimension d of the random
/// vector, lambda = min eigenvalue of its second-moment matrix, almost-sure
/// bound B on the squared norm, and the number s of iid copies.
struct ChernoffParams {
  double d = 1;
  double lambda = 0;
  double B = 1;
  double s = 1;
};

/// Inputs to Oliveira's lower-tail span bound: dimension d, hypercontractive
/// parameter h >= 1, copies s.
struct OliveiraParams {
  double d = 1;
  double h = 1;
  double s = 1;
};

/// min(1, d exp(-lambda s / (2B))). Throws if B <= 0, lambda < 0, B < lambda
/// or s < 1.
double chernoff_span_bound(const ChernoffParams& params);
double chernoff_span_bound_raw(const ChernoffParams& params);

/// min(1, 2 exp(d/2 - s/(162 h))). Throws if h < 1 or s < 0.
double oliveira_span_bound(const OliveiraParams& params);
double oliveira_span_bound_raw(const OliveiraParams& params);

/// Hypercontractive moment-ratio bound [9/(p(1-p))]^k for a degree-k
/// polynomial of SBern(p) variables. Throws for p outside (0,1) or k < 0.
double hyper_h_bound(double p, int k);

// ---------------------------------------------------------------------------
// Exact moment oracles (2^r enumeration, rational arithmetic)
// ---------------------------------------------------------------------------

/// Everything the oracles know about one (p, r) configuration.
struct MomentReport {
  Rational p;
  Rational alpha;  // (2p-1)^2
  int r = 0;
  int R_prime = 0;                // r(r-1)/2, dimension of Sigma
  RationalMatrix M_r;             // E[ww^t], r x r
  RationalMatrix Sigma;           // E[yy^t], R' x R'
  RationalMatrix SigmaCheck;      // lift on basis {e_i v e_j : i <= j}
  double lambda_min_Mr = 0;       // closed form 1 - alpha
  double lambda_min_Sigma = 0;
  double lambda_min_SigmaCheck = 0;
  bool restriction_exact = false;   // strict-pair block of SigmaCheck == Sigma
  bool closed_form_match = false;   // enumeration == entry table, exactly
};

/// E[ww^t] = (1-alpha) I + alpha J for w ~ SBern(p,r); cross-checked against
/// enumeration of all 2^r sign vectors when r <= 12. Requires 1 <= r <= 20.
RationalMatrix exact_second_moment_w(const Rational& p, int r);

/// Full report for Sigma = E[yy^t] with y_ij = 1 - w_i w_j: exact
/// enumeration, entry-table cross-check, the symmetric-tensor lift and its
/// eigenvalue bound. Requires 2 <= r <= 12.
MomentReport exact_second_moment_y(const Rational& p, int r);

/// Matrix of the lift (1-a)^2 I∨I + a(1-a)(I∨J + J∨I) + (1-a)^2/2 J∨J in the
/// basis {e_i v e_j : i <= j} (dimension r(r+1)/2). The strict-pair block
/// equals Sigma exactly; eigenvalues come from the similarity-equivalent
/// symmetric form (the diagonal basis tensors carry norm sqrt(2)).
RationalMatrix build_sigma_check(const Rational& p, int r);

/// E[zz^t] for z = (1, w_i w_j)_{i<j}; equals the R x R identity at p = 0.5.
/// Requires 2 <= r <= 12.
RationalMatrix exact_second_moment_z(const Rational& p, int r);

/// Parses a decimal string ("0.35", "1/4") into an exact rational in [0,1].
Rational parse_probability(const std::string& text);

}  // namespace elliptope
