#include "elliptope/randmodel.hpp"

#include <atomic>
#include <cmath>
#include <stdexcept>
#include <thread>

#include <boost/math/distributions/beta.hpp>

namespace elliptope {

BalanceParam::BalanceParam(double p_value) : p(p_value) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("BalanceParam: p must lie in [0,1]");
  alpha = (2.0 * p - 1.0) * (2.0 * p - 1.0);
}

void BalanceParam::require_interior(const char* where) const {
  if (p <= 0.0 || p >= 1.0) {
    throw std::invalid_argument(std::string(where) + ": p must lie strictly inside (0,1)");
  }
}

CutVector sample_sbern_vector(const BalanceParam& p, int n, CounterStream& stream) {
  if (n < 1) throw std::invalid_argument("sample_sbern_vector: n must be >= 1");
  auto entries = std::vector<std::int8_t>(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    entries[std::size_t(i)] = stream.next_unit() < p.p ? std::int8_t{1} : std::int8_t{-1};
  }
  return CutVector(std::move(entries));
}

FaceCandidate sample_face_candidate(double p, int r, int n, std::uint64_t seed, std::uint64_t trial_index) {
  if (r < 1) throw std::invalid_argument("sample_face_candidate: r must be >= 1");
  const BalanceParam bp(p);
  CounterStream stream = CounterStream::keyed(seed, trial_index);
  FaceCandidate out;
  out.cuts.reserve(std::size_t(r));
  for (int i = 0; i < r; ++i) out.cuts.push_back(sample_sbern_vector(bp, n, stream));
  out.p = p;
  out.r = r;
  out.n = n;
  out.seed = seed;
  out.trial_index = trial_index;
  return out;
}

std::pair<double, double> clopper_pearson(long long successes, long long trials, double confidence) {
  if (trials < 1) throw std::invalid_argument("clopper_pearson: trials must be >= 1");
  if (successes < 0 || successes > trials) throw std::invalid_argument("clopper_pearson: successes out of range");
  if (!(confidence > 0.0 && confidence < 1.0)) throw std::invalid_argument("clopper_pearson: confidence must be in (0,1)");
  const double a = 1.0 - confidence;
  const double k = double(successes);
  const double N = double(trials);
  double lo = 0.0, hi = 1.0;
  if (successes > 0) {
    boost::math::beta_distribution<double> lower_dist(k, N - k + 1.0);
    lo = boost::math::quantile(lower_dist, a / 2.0);
  }
  if (successes < trials) {
    boost::math::beta_distribution<double> upper_dist(k + 1.0, N - k);
    hi = boost::math::quantile(upper_dist, 1.0 - a / 2.0);
  }
  return {lo, hi};
}

MonteCarloEstimate estimate_face_probability(double p, int r, int n, long long trials, std::uint64_t seed,
                                             double confidence, int workers) {
  if (trials < 1) throw std::invalid_argument("estimate_face_probability: trials must be >= 1");
  if (r < 2) throw std::invalid_argument("estimate_face_probability: r must be >= 2");
  if (!(confidence > 0.0 && confidence < 1.0)) {
    throw std::invalid_argument("estimate_face_probability: confidence must be in (0,1)");
  }
  if (workers < 1) workers = 1;
  if (std::int64_t(workers) > trials) workers = int(trials);

  // Integer aggregation over independent per-trial streams: the count is the
  // same for any worker split.
  std::atomic<long long> certified{0};
  std::atomic<long long> next{0};
  auto work = [&]() {
    long long local = 0;
    for (;;) {
      const long long t = next.fetch_add(1);
      if (t >= trials) break;
      const FaceCandidate cand = sample_face_candidate(p, r, n, seed, std::uint64_t(t));
      const Certificate cert = certify_simplicial(cand.cuts);
      if (cert.verdict == Verdict::CertifiedSimplicial) ++local;
    }
    certified.fetch_add(local);
  };
  if (workers == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(std::size_t(workers));
    for (int i = 0; i < workers; ++i) pool.emplace_back(work);
    for (std::thread& th : pool) th.join();
  }

  MonteCarloEstimate est;
  est.trials = trials;
  est.certified = certified.load();
  est.point_estimate = double(est.certified) / double(trials);
  est.confidence = confidence;
  std::tie(est.ci_low, est.ci_high) = clopper_pearson(est.certified, trials, confidence);
  return est;
}

double log_face_count_estimate(long long r, long long n) {
  if (r < 1) throw std::invalid_argument("log_face_count_estimate: r must be >= 1");
  if (n < 1) throw std::invalid_argument("log_face_count_estimate: n must be >= 1");
  // r <= 2^{n-1}: compare in log space to dodge overflow for large n
  if (std::log2(double(r)) > double(n - 1)) {
    throw std::invalid_argument("log_face_count_estimate: r exceeds 2^(n-1)");
  }
  return double(r) * (1.0 + double(n - 1) * std::log(2.0) - std::log(double(r)));
}

}  // namespace elliptope
