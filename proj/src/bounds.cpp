#include "elliptope/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace elliptope {

namespace {

void require_interior_p(double p, const char* where) {
  if (!(p > 0.0 && p < 1.0)) throw std::invalid_argument(std::string(where) + ": p must lie strictly inside (0,1)");
}

void require_unit_p(const Rational& p, const char* where) {
  if (p < 0 || p > 1) throw std::invalid_argument(std::string(where) + ": p must lie in [0,1]");
}

Eigen::MatrixXd to_double(const RationalMatrix& m) {
  Eigen::MatrixXd out(m.rows, m.cols);
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j) out(i, j) = m.at(i, j).convert_to<double>();
  return out;
}

// p^t (1-p)^(r-t) for t = 0..r.
std::vector<Rational> class_probabilities(const Rational& p, int r) {
  const Rational q = 1 - p;
  std::vector<Rational> pow_p(std::size_t(r) + 1, Rational(1)), pow_q(std::size_t(r) + 1, Rational(1));
  for (int t = 1; t <= r; ++t) {
    pow_p[std::size_t(t)] = pow_p[std::size_t(t) - 1] * p;
    pow_q[std::size_t(t)] = pow_q[std::size_t(t) - 1] * q;
  }
  std::vector<Rational> prob(std::size_t(r) + 1);
  for (int t = 0; t <= r; ++t) prob[std::size_t(t)] = pow_p[std::size_t(t)] * pow_q[std::size_t(r - t)];
  return prob;
}

std::vector<std::pair<int, int>> strict_pairs(int r) {
  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(std::size_t(r) * std::size_t(r - 1) / 2);
  for (int i = 0; i < r; ++i)
    for (int j = i + 1; j < r; ++j) pairs.emplace_back(i, j);
  return pairs;
}

}  // namespace

double min_eigenvalue(const RationalMatrix& m) {
  if (m.rows != m.cols || m.rows == 0) throw std::invalid_argument("min_eigenvalue: matrix must be square and nonempty");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(to_double(m), Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff();
}

// ---------------------------------------------------------------------------
// Theorem bounds
// ---------------------------------------------------------------------------

double bound_thm1_raw(long long r, double n) {
  if (r < 2) throw std::invalid_argument("bound_thm1: r must be >= 2");
  if (n < 0) throw std::invalid_argument("bound_thm1: n must be nonnegative");
  const double rr = double(r) * double(r);
  return 1.0 - rr * std::exp(-n / rr);
}

double bound_thm1(long long r, double n) { return std::clamp(bound_thm1_raw(r, n), 0.0, 1.0); }

double bound_thm2_raw(double p, long long r, double n) {
  require_interior_p(p, "bound_thm2");
  if (r < 2) throw std::invalid_argument("bound_thm2: r must be >= 2");
  if (n < 0) throw std::invalid_argument("bound_thm2: n must be nonnegative");
  const double rr = double(r) * double(r);
  const double pq = p * (1.0 - p);
  return 1.0 - rr * std::exp(-4.0 * pq * pq * n / rr);
}

double bound_thm2(double p, long long r, double n) { return std::clamp(bound_thm2_raw(p, r, n), 0.0, 1.0); }

double bound_thm3_raw(double p, long long r, double n) {
  require_interior_p(p, "bound_thm3");
  if (r < 2) throw std::invalid_argument("bound_thm3: r must be >= 2");
  if (n < 0) throw std::invalid_argument("bound_thm3: n must be nonnegative");
  const double pq = p * (1.0 - p);
  return 1.0 - 4.0 * std::exp((double(r) * double(r) - kThm3Constant * pq * pq * n) / 4.0);
}

double bound_thm3(double p, long long r, double n) { return std::clamp(bound_thm3_raw(p, r, n), 0.0, 1.0); }

// ---------------------------------------------------------------------------
// Span-failure tails
// ---------------------------------------------------------------------------

double chernoff_span_bound_raw(const ChernoffParams& params) {
  if (params.d < 1) throw std::invalid_argument("chernoff_span_bound: d must be >= 1");
  if (params.lambda < 0) throw std::invalid_argument("chernoff_span_bound: lambda must be >= 0");
  if (params.B <= 0) throw std::invalid_argument("chernoff_span_bound: B must be positive");
  if (params.B < params.lambda) throw std::invalid_argument("chernoff_span_bound: B < lambda is impossible");
  if (params.s < 1) throw std::invalid_argument("chernoff_span_bound: s must be >= 1");
  return params.d * std::exp(-params.lambda * params.s / (2.0 * params.B));
}

double chernoff_span_bound(const ChernoffParams& params) { return std::min(1.0, chernoff_span_bound_raw(params)); }

double oliveira_span_bound_raw(const OliveiraParams& params) {
  if (params.d < 1) throw std::invalid_argument("oliveira_span_bound: d must be >= 1");
  if (params.h < 1) throw std::invalid_argument("oliveira_span_bound: h must be >= 1");
  if (params.s < 0) throw std::invalid_argument("oliveira_span_bound: s must be nonnegative");
  return 2.0 * std::exp(params.d / 2.0 - params.s / (162.0 * params.h));
}

double oliveira_span_bound(const OliveiraParams& params) { return std::min(1.0, oliveira_span_bound_raw(params)); }

double hyper_h_bound(double p, int k) {
  require_interior_p(p, "hyper_h_bound");
  if (k < 0) throw std::invalid_argument("hyper_h_bound: k must be nonnegative");
  return std::pow(9.0 / (p * (1.0 - p)), double(k));
}

// ---------------------------------------------------------------------------
// Moment oracles
// ---------------------------------------------------------------------------

RationalMatrix exact_second_moment_w(const Rational& p, int r) {
  require_unit_p(p, "exact_second_moment_w");
  if (r < 1 || r > 20) throw std::invalid_argument("exact_second_moment_w: need 1 <= r <= 20");
  const Rational alpha = (2 * p - 1) * (2 * p - 1);

  RationalMatrix closed(r, r);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) closed.at(i, j) = (i == j) ? Rational(1) : alpha;

  if (r <= 12) {
    // Brute-force check: accumulate integer sums of w_i w_j per class of
    // #(+1) entries, then weight each class by its exact probability.
    std::vector<std::vector<long long>> class_sum(std::size_t(r) + 1,
                                                  std::vector<long long>(std::size_t(r) * std::size_t(r), 0));
    for (std::uint32_t mask = 0; mask < (1u << r); ++mask) {
      const int t = __builtin_popcount(mask);
      auto& acc = class_sum[std::size_t(t)];
      for (int i = 0; i < r; ++i) {
        const int wi = (mask >> i) & 1u ? 1 : -1;
        for (int j = 0; j < r; ++j) {
          const int wj = (mask >> j) & 1u ? 1 : -1;
          acc[std::size_t(i) * std::size_t(r) + std::size_t(j)] += wi * wj;
        }
      }
    }
    const std::vector<Rational> prob = class_probabilities(p, r);
    RationalMatrix brute(r, r);
    for (int t = 0; t <= r; ++t) {
      for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j)
          brute.at(i, j) += prob[std::size_t(t)] * class_sum[std::size_t(t)][std::size_t(i) * std::size_t(r) + std::size_t(j)];
    }
    if (!(brute == closed)) throw std::logic_error("exact_second_moment_w: enumeration disagrees with (1-a)I + aJ");
  }
  return closed;
}

RationalMatrix exact_second_moment_z(const Rational& p, int r) {
  require_unit_p(p, "exact_second_moment_z");
  if (r < 2 || r > 12) throw std::invalid_argument("exact_second_moment_z: need 2 <= r <= 12");
  const auto pairs = strict_pairs(r);
  const int R = 1 + int(pairs.size());

  std::vector<std::vector<long long>> class_sum(std::size_t(r) + 1,
                                                std::vector<long long>(std::size_t(R) * std::size_t(R), 0));
  auto z = std::vector<int>(static_cast<std::size_t>(R));
  for (std::uint32_t mask = 0; mask < (1u << r); ++mask) {
    const int t = __builtin_popcount(mask);
    z[0] = 1;
    for (std::size_t k = 0; k < pairs.size(); ++k) {
      const int wi = (mask >> pairs[k].first) & 1u ? 1 : -1;
      const int wj = (mask >> pairs[k].second) & 1u ? 1 : -1;
      z[k + 1] = wi * wj;
    }
    auto& acc = class_sum[std::size_t(t)];
    for (int a = 0; a < R; ++a)
      for (int b = 0; b < R; ++b) acc[std::size_t(a) * std::size_t(R) + std::size_t(b)] += z[std::size_t(a)] * z[std::size_t(b)];
  }

  const std::vector<Rational> prob = class_probabilities(p, r);
  RationalMatrix out(R, R);
  for (int t = 0; t <= r; ++t)
    for (int a = 0; a < R; ++a)
      for (int b = 0; b < R; ++b)
        out.at(a, b) += prob[std::size_t(t)] * class_sum[std::size_t(t)][std::size_t(a) * std::size_t(R) + std::size_t(b)];
  return out;
}

RationalMatrix build_sigma_check(const Rational& p, int r) {
  require_unit_p(p, "build_sigma_check");
  if (r < 2 || r > 12) throw std::invalid_argument("build_sigma_check: need 2 <= r <= 12");
  const Rational alpha = (2 * p - 1) * (2 * p - 1);

  // Basis {e_i v e_j : i <= j}; column (i,j) of the coefficient matrix of
  // A v B holds the expansion of (A e_i) v (B e_j).
  std::vector<std::pair<int, int>> basis;
  basis.reserve(std::size_t(r) * std::size_t(r + 1) / 2);
  for (int i = 0; i < r; ++i)
    for (int j = i; j < r; ++j) basis.emplace_back(i, j);
  const int dim = int(basis.size());
  auto index = std::vector<std::vector<int>>(static_cast<std::size_t>(r), std::vector<int>(static_cast<std::size_t>(r)));
  for (int k = 0; k < dim; ++k) {
    index[std::size_t(basis[std::size_t(k)].first)][std::size_t(basis[std::size_t(k)].second)] = k;
    index[std::size_t(basis[std::size_t(k)].second)][std::size_t(basis[std::size_t(k)].first)] = k;
  }

  auto coefficient_matrix = [&](bool a_is_J, bool b_is_J) {
    RationalMatrix c(dim, dim);
    for (int col = 0; col < dim; ++col) {
      const auto [i, j] = basis[std::size_t(col)];
      // A e_i ranges over e_a with A[a][i] != 0; same for B e_j.
      for (int a = 0; a < r; ++a) {
        if (!a_is_J && a != i) continue;
        for (int b = 0; b < r; ++b) {
          if (!b_is_J && b != j) continue;
          c.at(index[std::size_t(a)][std::size_t(b)], col) += 1;
        }
      }
    }
    return c;
  };

  const RationalMatrix cII = coefficient_matrix(false, false);
  const RationalMatrix cIJ = coefficient_matrix(false, true);
  const RationalMatrix cJI = coefficient_matrix(true, false);
  const RationalMatrix cJJ = coefficient_matrix(true, true);

  const Rational one_minus_a = 1 - alpha;
  const Rational c1 = one_minus_a * one_minus_a;
  const Rational c2 = alpha * one_minus_a;
  const Rational c3 = one_minus_a * one_minus_a / 2;

  RationalMatrix out(dim, dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j)
      out.at(i, j) = c1 * cII.at(i, j) + c2 * (cIJ.at(i, j) + cJI.at(i, j)) + c3 * cJJ.at(i, j);
  return out;
}

MomentReport exact_second_moment_y(const Rational& p, int r) {
  require_unit_p(p, "exact_second_moment_y");
  if (r < 2 || r > 12) throw std::invalid_argument("exact_second_moment_y: need 2 <= r <= 12");
  const Rational alpha = (2 * p - 1) * (2 * p - 1);
  const auto pairs = strict_pairs(r);
  const int Rp = int(pairs.size());

  // Exact enumeration of Sigma = E[yy^t], organized by #(+1) class.
  std::vector<std::vector<long long>> class_sum(std::size_t(r) + 1,
                                                std::vector<long long>(std::size_t(Rp) * std::size_t(Rp), 0));
  auto y = std::vector<int>(static_cast<std::size_t>(Rp));
  for (std::uint32_t mask = 0; mask < (1u << r); ++mask) {
    const int t = __builtin_popcount(mask);
    for (std::size_t k = 0; k < pairs.size(); ++k) {
      const int wi = (mask >> pairs[k].first) & 1u ? 1 : -1;
      const int wj = (mask >> pairs[k].second) & 1u ? 1 : -1;
      y[k] = 1 - wi * wj;  // 0 or 2
    }
    auto& acc = class_sum[std::size_t(t)];
    for (int a = 0; a < Rp; ++a) {
      if (y[std::size_t(a)] == 0) continue;
      for (int b = 0; b < Rp; ++b)
        acc[std::size_t(a) * std::size_t(Rp) + std::size_t(b)] += y[std::size_t(a)] * y[std::size_t(b)];
    }
  }
  const std::vector<Rational> prob = class_probabilities(p, r);
  RationalMatrix sigma(Rp, Rp);
  for (int t = 0; t <= r; ++t)
    for (int a = 0; a < Rp; ++a)
      for (int b = 0; b < Rp; ++b)
        sigma.at(a, b) += prob[std::size_t(t)] * class_sum[std::size_t(t)][std::size_t(a) * std::size_t(Rp) + std::size_t(b)];

  // Entry table: diagonal (1-a)^2 + (1-a^2); one shared index
  // (1-a)^2 + a(1-a); disjoint pairs (1-a)^2.
  const Rational one_minus_a = 1 - alpha;
  RationalMatrix table(Rp, Rp);
  for (int a = 0; a < Rp; ++a) {
    for (int b = 0; b < Rp; ++b) {
      const auto [i, j] = pairs[std::size_t(a)];
      const auto [ip, jp] = pairs[std::size_t(b)];
      const int shared = int(i == ip) + int(i == jp) + int(j == ip) + int(j == jp);
      if (shared == 2) {
        table.at(a, b) = one_minus_a * one_minus_a + (1 - alpha * alpha);
      } else if (shared == 1) {
        table.at(a, b) = one_minus_a * one_minus_a + alpha * one_minus_a;
      } else {
        table.at(a, b) = one_minus_a * one_minus_a;
      }
    }
  }

  MomentReport report;
  report.p = p;
  report.alpha = alpha;
  report.r = r;
  report.R_prime = Rp;
  report.M_r = exact_second_moment_w(p, r);
  report.Sigma = sigma;
  report.SigmaCheck = build_sigma_check(p, r);
  report.lambda_min_Mr = one_minus_a.convert_to<double>();
  report.lambda_min_Sigma = min_eigenvalue(sigma);
  report.closed_form_match = (sigma == table);

  // Restriction of the lift to strictly-increasing pairs must equal Sigma
  // exactly.
  std::vector<int> strict_index;
  {
    int k = 0;
    for (int i = 0; i < r; ++i)
      for (int j = i; j < r; ++j, ++k)
        if (i < j) strict_index.push_back(k);
  }
  report.restriction_exact = true;
  for (int a = 0; a < Rp; ++a)
    for (int b = 0; b < Rp; ++b)
      if (report.SigmaCheck.at(strict_index[std::size_t(a)], strict_index[std::size_t(b)]) != sigma.at(a, b))
        report.restriction_exact = false;

  // The coefficient matrix of the lift is similar to its symmetric form via
  // D = diag(sqrt(2) on diagonal pairs, 1 on strict pairs); eigenvalues are
  // computed from the symmetric conjugate.
  const int dim = report.SigmaCheck.rows;
  Eigen::MatrixXd sym = to_double(report.SigmaCheck);
  std::vector<double> scale;
  scale.reserve(std::size_t(dim));
  for (int i = 0; i < r; ++i)
    for (int j = i; j < r; ++j) scale.push_back(i == j ? std::sqrt(2.0) : 1.0);
  for (int a = 0; a < dim; ++a)
    for (int b = 0; b < dim; ++b) sym(a, b) *= scale[std::size_t(a)] / scale[std::size_t(b)];
  sym = 0.5 * (sym + sym.transpose().eval());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(sym, Eigen::EigenvaluesOnly);
  report.lambda_min_SigmaCheck = es.eigenvalues().minCoeff();

  return report;
}

Rational parse_probability(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("parse_probability: empty string");
  if (text.find('-') != std::string::npos) throw std::invalid_argument("parse_probability: value outside [0,1]");
  Rational value;
  const auto slash = text.find('/');
  try {
    if (slash != std::string::npos) {
      const boost::multiprecision::cpp_int num(text.substr(0, slash));
      const boost::multiprecision::cpp_int den(text.substr(slash + 1));
      if (den == 0) throw std::invalid_argument("zero denominator");
      value = Rational(num, den);
    } else {
      const auto dot = text.find('.');
      if (dot == std::string::npos) {
        value = Rational(boost::multiprecision::cpp_int(text));
      } else {
        const std::string whole = text.substr(0, dot);
        const std::string frac = text.substr(dot + 1);
        if (frac.find_first_not_of("0123456789") != std::string::npos) throw std::invalid_argument("bad digits");
        boost::multiprecision::cpp_int num(whole.empty() ? "0" : whole);
        boost::multiprecision::cpp_int den = 1;
        for (char c : frac) {
          num = num * 10 + (c - '0');
          den *= 10;
        }
        value = Rational(num, den);
      }
    }
  } catch (const std::exception&) {
    throw std::invalid_argument("parse_probability: cannot parse '" + text + "'");
  }
  if (value < 0 || value > 1) throw std::invalid_argument("parse_probability: value outside [0,1]");
  return value;
}

}  // namespace elliptope
