/**
 * @file randmodel.hpp
 * @brief Sampling from SBern(p,n) and the Face(p,r,n) model, plus Monte
 *        Carlo estimation of the certification probability.
 *
 * Face(p,r,n) draws r iid SBern(p,n) vectors and takes the convex hull of
 * their outer products. estimate_face_probability counts how often the
 * Laurent-Poljak certificate fires; since the certificate is sufficient
 * only, the point estimate is a lower-bound estimator for the probability
 * that the hull is a simplicial face of dimension r-1.
 *
 * Every trial stream is keyed by (seed, trial_index), so an estimate is a
 * pure function of its parameters no matter how trials are scheduled across
 * workers.
 */

#pragma once

#include <cstdint>
#include <vector>

#include "elliptope/cutgeom.hpp"
#include "elliptope/lpcert.hpp"
#include "elliptope/rng.hpp"

namespace elliptope {

/// Balance parameter p of the signed Bernoulli distribution together with
/// alpha = (2p-1)^2, the squared mean of one draw.
struct BalanceParam {
  double p = 0.5;
  double alpha = 0.0;

  explicit BalanceParam(double p_value);
  /// Throws unless p lies strictly inside (0,1); bound formulas need this.
  void require_interior(const char* where) const;
};

struct FaceCandidate {
  std::vector<CutVector> cuts;  // xi_1 .. xi_r, each of length n
  double p = 0.5;
  int r = 0;
  int n = 0;
  std::uint64_t seed = 0;
  std::uint64_t trial_index = 0;
};

/// Two-sided Clopper-Pearson (exact binomial) confidence interval.
struct MonteCarloEstimate {
  long long trials = 0;
  long long certified = 0;
  double point_estimate = 0.0;
  double ci_low = 0.0;
  double ci_high = 1.0;
  double confidence = 0.0;
};

/// n iid ±1 entries, +1 with probability p; consumes exactly n draws.
CutVector sample_sbern_vector(const BalanceParam& p, int n, CounterStream& stream);

/// Bit-reproducible candidate: regenerating with the same (seed, trial_index,
/// p, r, n) yields an identical family.
FaceCandidate sample_face_candidate(double p, int r, int n, std::uint64_t seed, std::uint64_t trial_index);

/// Runs certify_simplicial over `trials` independent candidates. `workers`
/// only distributes the work; the result is identical for any worker count.
MonteCarloEstimate estimate_face_probability(double p, int r, int n, long long trials, std::uint64_t seed,
                                             double confidence, int workers = 1);

/// Exact Clopper-Pearson bounds for `successes` out of `trials` at the given
/// two-sided confidence level.
std::pair<double, double> clopper_pearson(long long successes, long long trials, double confidence);

/// Natural log of the informal count (e 2^{n-1} / r)^r of vertex subsets:
/// r * (1 + (n-1) ln 2 - ln r). Requires 1 <= r <= 2^{n-1}.
double log_face_count_estimate(long long r, long long n);

}  // namespace elliptope
