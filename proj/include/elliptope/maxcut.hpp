/**
 * @file maxcut.hpp
 * @brief Graph Laplacians, cut weights, brute-force MaxCut, a low-rank
 *        feasible-point heuristic for the elliptope relaxation, and
 *        hyperplane rounding.
 *
 * The quadratic form of the Laplacian at a cut vector counts the edges
 * crossing the cut, so MaxCut is a program over cut vectors; relaxing the
 * feasible set from cut matrices to the elliptope gives the semidefinite
 * relaxation, and for psd objectives the two optima sandwich within 2/pi.
 * The heuristic keeps iterates feasible (unit rows), so its value is always
 * a lower bound on the relaxation optimum; no global optimality is claimed.
 */

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "elliptope/cutgeom.hpp"
#include "elliptope/rng.hpp"

#include <Eigen/Dense>

namespace elliptope {

/// Simple undirected graph: vertex count plus an edge set without self-loops
/// or duplicates. Vertices are 0-based internally.
struct Graph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;  // each pair (i, j) with i < j

  static Graph from_edge_pairs(int n, std::vector<std::pair<int, int>> pairs);
  /// Complete graph K_n.
  static Graph complete(int n);
  /// Path 1-2-...-n.
  static Graph path(int n);
  /// Cycle on n vertices.
  static Graph cycle(int n);
  /// Parses "n m" header plus m lines "i j" (1-based).
  static Graph parse_edge_list(const std::string& text);
};

/// Feasible point of the elliptope relaxation, parametrized as V with unit
/// rows so that the Gram matrix VV^t is a correlation matrix.
struct ElliptopeFactor {
  Eigen::MatrixXd V;  // n x k, rows on the unit sphere

  int n() const { return int(V.rows()); }
  int k() const { return int(V.cols()); }
  Eigen::MatrixXd gram() const { return V * V.transpose(); }
};

struct BmOptions {
  int iters = 5000;
  double tol = 1e-8;
  int restarts = 3;
  /// Optional warm start; overrides the random initialization of the first
  /// restart.
  std::optional<Eigen::MatrixXd> init;
};

struct BmResult {
  ElliptopeFactor factor;
  double value = 0.0;  // trace(A * VV^t) at the returned factor
};

struct RoundingResult {
  CutVector best_cut;
  long long best_value = 0;
};

struct SandwichReport {
  double bm_value = 0.0;
  long long maxcut_value = 0;
  double two_over_pi_bm = 0.0;
  bool lower_ok = false;    // maxcut >= (2/pi) * bm_value - 1e-9
  double ratio = 0.0;       // maxcut / bm_value (observed quality), 1 if bm = 0
};

/// Laplacian L with L_ii = deg(i)/4 and L_ij = -1/4 on edges; psd and L1 = 0.
SymmetricMatrix laplacian(const Graph& g);

/// Number of edges crossing the cut; equals c^t L c exactly.
long long cut_weight(const Graph& g, const CutVector& c);

/// Exhaustive maximum over all 2^{n-1} distinct cuts (requires n <= 24).
/// Ties resolve to the lexicographically smallest cut with c_1 = +1.
std::pair<long long, CutVector> brute_force_maxcut(const Graph& g);

/// Row-normalized gradient ascent on trace(A VV^t) over unit-row factors.
/// The returned value is a feasible lower bound on the relaxation optimum.
BmResult bm_elliptope_solve(const SymmetricMatrix& A, int k, CounterStream stream, const BmOptions& options = {});

/// Suggested factor rank: ceil(sqrt(2n)) + 1.
int default_bm_rank(int n);

/// Rounds `samples` random hyperplanes through the factor rows; sign(0) is
/// taken as +1. Returns the best cut seen.
RoundingResult hyperplane_round(const Graph& g, const ElliptopeFactor& factor, int samples, CounterStream stream);

/// Checks maxcut >= (2/pi) * bm_value - 1e-9, valid because the heuristic
/// value never exceeds the relaxation optimum.
SandwichReport check_approx_sandwich(const Graph& g, double bm_value, long long maxcut_value);

}  // namespace elliptope
