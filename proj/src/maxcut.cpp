#include "elliptope/maxcut.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>
#include <sstream>
#include <stdexcept>

namespace elliptope {

namespace {

void validate_vertex(int v, int n) {
  if (v < 0 || v >= n) throw std::invalid_argument("Graph: vertex index out of range");
}

// Lexicographic order on cut vectors with +1 sorting before -1.
bool lex_less(const CutVector& a, const CutVector& b) {
  for (int i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return a[i] > b[i];
  }
  return false;
}

Eigen::MatrixXd normalized_rows(Eigen::MatrixXd v) {
  for (int i = 0; i < v.rows(); ++i) {
    const double norm = v.row(i).norm();
    if (norm < 1e-300) {
      v.row(i).setZero();
      v(i, 0) = 1.0;
    } else {
      v.row(i) /= norm;
    }
  }
  return v;
}

}  // namespace

Graph Graph::from_edge_pairs(int n, std::vector<std::pair<int, int>> pairs) {
  if (n <= 0) throw std::invalid_argument("Graph: vertex count must be positive");
  Graph g;
  g.n = n;
  std::set<std::pair<int, int>> seen;
  for (auto [i, j] : pairs) {
    validate_vertex(i, n);
    validate_vertex(j, n);
    if (i == j) throw std::invalid_argument("Graph: self-loops are not allowed");
    if (i > j) std::swap(i, j);
    if (!seen.insert({i, j}).second) throw std::invalid_argument("Graph: duplicate edge");
    g.edges.emplace_back(i, j);
  }
  return g;
}

Graph Graph::complete(int n) {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  return from_edge_pairs(n, std::move(pairs));
}

Graph Graph::path(int n) {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i + 1 < n; ++i) pairs.emplace_back(i, i + 1);
  return from_edge_pairs(n, std::move(pairs));
}

Graph Graph::cycle(int n) {
  if (n < 3) throw std::invalid_argument("Graph::cycle: need n >= 3");
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i + 1 < n; ++i) pairs.emplace_back(i, i + 1);
  pairs.emplace_back(0, n - 1);
  return from_edge_pairs(n, std::move(pairs));
}

Graph Graph::parse_edge_list(const std::string& text) {
  std::istringstream in(text);
  int n = 0;
  long long m = -1;
  if (!(in >> n >> m)) throw std::invalid_argument("edge list: missing 'n m' header");
  std::vector<std::pair<int, int>> pairs;
  for (long long e = 0; e < m; ++e) {
    int i = 0, j = 0;
    if (!(in >> i >> j)) throw std::invalid_argument("edge list: fewer edges than the header promises");
    pairs.emplace_back(i - 1, j - 1);  // file is 1-based
  }
  int extra;
  if (in >> extra) throw std::invalid_argument("edge list: trailing tokens after the last edge");
  return from_edge_pairs(n, std::move(pairs));
}

SymmetricMatrix laplacian(const Graph& g) {
  SymmetricMatrix L(g.n);
  for (auto [i, j] : g.edges) {
    L.set(i, i, L(i, i) + 0.25);
    L.set(j, j, L(j, j) + 0.25);
    L.set(i, j, L(i, j) - 0.25);
  }
  return L;
}

long long cut_weight(const Graph& g, const CutVector& c) {
  if (c.size() != g.n) throw std::invalid_argument("cut_weight: cut vector length does not match vertex count");
  long long crossing = 0;
  for (auto [i, j] : g.edges) {
    if (c[i] != c[j]) ++crossing;
  }
  return crossing;
}

std::pair<long long, CutVector> brute_force_maxcut(const Graph& g) {
  if (g.n > 24) throw std::invalid_argument("brute_force_maxcut: n > 24 is too large to enumerate");
  const int free_bits = g.n - 1;  // fix c_1 = +1: c and -c induce the same cut
  long long best = -1;
  CutVector best_cut;
  std::vector<std::int8_t> entries(std::size_t(g.n));
  for (std::uint32_t mask = 0; mask < (1u << free_bits); ++mask) {
    entries[0] = 1;
    for (int b = 0; b < free_bits; ++b) entries[std::size_t(b) + 1] = (mask >> b) & 1u ? std::int8_t{-1} : std::int8_t{1};
    CutVector c(entries);
    const long long w = cut_weight(g, c);
    if (w > best || (w == best && lex_less(c, best_cut))) {
      best = w;
      best_cut = c;
    }
  }
  return {best, best_cut};
}

int default_bm_rank(int n) { return int(std::ceil(std::sqrt(2.0 * n))) + 1; }

BmResult bm_elliptope_solve(const SymmetricMatrix& A, int k, CounterStream stream, const BmOptions& options) {
  const Eigen::MatrixXd& a = A.dense();
  if (!a.allFinite()) throw std::invalid_argument("bm_elliptope_solve: non-finite objective matrix");
  if (k < 2) throw std::invalid_argument("bm_elliptope_solve: factor rank must be >= 2");
  const int n = A.dimension();

  const auto objective = [&](const Eigen::MatrixXd& v) { return (v.transpose() * a * v).trace(); };

  BmResult best;
  best.value = -std::numeric_limits<double>::infinity();

  for (int restart = 0; restart < std::max(1, options.restarts); ++restart) {
    CounterStream sub = stream.substream(std::uint64_t(restart));
    Eigen::MatrixXd v(n, k);
    if (restart == 0 && options.init.has_value()) {
      if (options.init->rows() != n || options.init->cols() != k) {
        throw std::invalid_argument("bm_elliptope_solve: init factor has wrong shape");
      }
      v = *options.init;
    } else {
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < k; ++j) v(i, j) = sub.next_gaussian();
    }
    v = normalized_rows(std::move(v));

    double value = objective(v);
    double step = 1.0 / (a.cwiseAbs().rowwise().sum().maxCoeff() + 1.0);
    for (int it = 0; it < options.iters; ++it) {
      const Eigen::MatrixXd grad = 2.0 * a * v;
      // Riemannian gradient on the product of spheres: remove radial parts.
      Eigen::MatrixXd tangent = grad;
      for (int i = 0; i < n; ++i) tangent.row(i) -= grad.row(i).dot(v.row(i)) * v.row(i);
      if (tangent.norm() < 1e-14) break;

      // Backtracking line search: accept the first improving step.
      double eta = step;
      bool improved = false;
      for (int half = 0; half < 40; ++half) {
        Eigen::MatrixXd trial = normalized_rows(v + eta * tangent);
        const double trial_value = objective(trial);
        if (trial_value > value) {
          const double gain = trial_value - value;
          v = std::move(trial);
          value = trial_value;
          improved = true;
          step = std::min(eta * 2.0, 1e6);
          if (gain < options.tol * std::max(1.0, std::abs(value))) it = options.iters;  // converged
          break;
        }
        eta *= 0.5;
      }
      if (!improved) break;
    }
    if (value > best.value) {
      best.value = value;
      best.factor.V = v;
    }
  }
  return best;
}

RoundingResult hyperplane_round(const Graph& g, const ElliptopeFactor& factor, int samples, CounterStream stream) {
  if (samples < 1) throw std::invalid_argument("hyperplane_round: samples must be >= 1");
  if (factor.n() != g.n) throw std::invalid_argument("hyperplane_round: factor/graph size mismatch");
  const int k = factor.k();

  RoundingResult out;
  out.best_value = -1;
  for (int s = 0; s < samples; ++s) {
    CounterStream sub = stream.substream(std::uint64_t(s));
    Eigen::VectorXd direction(k);
    for (int j = 0; j < k; ++j) direction(j) = sub.next_gaussian();
    std::vector<std::int8_t> entries(std::size_t(g.n));
    for (int i = 0; i < g.n; ++i) {
      const double dot = factor.V.row(i).dot(direction);
      entries[std::size_t(i)] = dot >= 0.0 ? std::int8_t{1} : std::int8_t{-1};  // sign(0) := +1
    }
    CutVector c(entries);
    const long long w = cut_weight(g, c);
    if (w > out.best_value) {
      out.best_value = w;
      out.best_cut = c;
    }
  }
  return out;
}

SandwichReport check_approx_sandwich(const Graph& /*g*/, double bm_value, long long maxcut_value) {
  SandwichReport report;
  report.bm_value = bm_value;
  report.maxcut_value = maxcut_value;
  report.two_over_pi_bm = (2.0 / std::numbers::pi) * bm_value;
  report.lower_ok = double(maxcut_value) >= report.two_over_pi_bm - 1e-9;
  report.ratio = bm_value > 0 ? double(maxcut_value) / bm_value : 1.0;
  return report;
}

}  // namespace elliptope
