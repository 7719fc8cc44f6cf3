#include <doctest.h>

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "elliptope/maxcut.hpp"

using namespace elliptope;

namespace {

CutVector cut_from_mask(std::uint32_t mask, int n) {
  auto e = std::vector<std::int8_t>(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) e[std::size_t(i)] = (mask >> i) & 1u ? 1 : -1;
  return CutVector(std::move(e));
}

Graph random_graph(int n, CounterStream& stream) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (stream.next_u64() & 1) edges.emplace_back(i, j);
  return Graph::from_edge_pairs(n, std::move(edges));
}

}  // namespace

TEST_CASE("laplacian of the worked examples") {
  const SymmetricMatrix k3 = laplacian(Graph::complete(3));
  for (int i = 0; i < 3; ++i) {
    CHECK(k3(i, i) == 0.5);
    for (int j = 0; j < 3; ++j)
      if (i != j) CHECK(k3(i, j) == -0.25);
  }

  const SymmetricMatrix empty = laplacian(Graph::from_edge_pairs(3, {}));
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) CHECK(empty(i, j) == 0.0);

  const SymmetricMatrix edge = laplacian(Graph::from_edge_pairs(2, {{0, 1}}));
  CHECK(edge(0, 0) == 0.25);
  CHECK(edge(1, 1) == 0.25);
  CHECK(edge(0, 1) == -0.25);
}

TEST_CASE("laplacian is psd and annihilates the all-ones vector") {
  CounterStream stream = CounterStream::keyed(8, 0);
  for (int trial = 0; trial < 10; ++trial) {
    const Graph g = random_graph(6, stream);
    const Eigen::MatrixXd L = laplacian(g).dense();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(L, Eigen::EigenvaluesOnly);
    CHECK(es.eigenvalues().minCoeff() >= -1e-9);
    CHECK((L * Eigen::VectorXd::Ones(6)).cwiseAbs().maxCoeff() <= 1e-12);
  }
}

TEST_CASE("cut_weight counts crossing edges") {
  const Graph k3 = Graph::complete(3);
  CHECK(cut_weight(k3, CutVector({1, -1, -1})) == 2);
  CHECK(cut_weight(k3, CutVector({1, 1, 1})) == 0);

  const Graph path = Graph::path(3);
  CHECK(cut_weight(path, CutVector({1, -1, 1})) == 2);

  CHECK_THROWS_AS(cut_weight(k3, CutVector({1, 1})), std::invalid_argument);
}

TEST_CASE("c^t L c equals the cut weight exactly, exhaustively on small graphs") {
  CounterStream stream = CounterStream::keyed(21, 0);
  std::vector<Graph> graphs = {Graph::complete(4), Graph::cycle(5), Graph::path(6)};
  for (int trial = 0; trial < 4; ++trial) graphs.push_back(random_graph(6, stream));
  for (const Graph& g : graphs) {
    const Eigen::MatrixXd L = laplacian(g).dense();
    for (std::uint32_t mask = 0; mask < (1u << g.n); ++mask) {
      const CutVector c = cut_from_mask(mask, g.n);
      Eigen::VectorXd x(g.n);
      for (int i = 0; i < g.n; ++i) x(i) = c[i];
      const double quadratic = x.dot(L * x);
      CHECK(quadratic == double(cut_weight(g, c)));
    }
  }
}

TEST_CASE("brute_force_maxcut on the worked examples") {
  CHECK(brute_force_maxcut(Graph::complete(3)).first == 2);
  CHECK(brute_force_maxcut(Graph::complete(5)).first == 6);
  CHECK(brute_force_maxcut(Graph::from_edge_pairs(4, {})).first == 0);
  CHECK(brute_force_maxcut(Graph::path(4)).first == 3);
  CHECK(brute_force_maxcut(Graph::cycle(5)).first == 4);
  CHECK_THROWS_AS(brute_force_maxcut(Graph::from_edge_pairs(25, {})), std::invalid_argument);
}

TEST_CASE("brute_force_maxcut fixes c_1 = +1 and attains its value") {
  CounterStream stream = CounterStream::keyed(33, 0);
  for (int trial = 0; trial < 5; ++trial) {
    const Graph g = random_graph(7, stream);
    const auto [value, cut] = brute_force_maxcut(g);
    CHECK(cut[0] == 1);
    CHECK(cut_weight(g, cut) == value);
  }
}

TEST_CASE("graph parsing and validation") {
  const Graph g = Graph::parse_edge_list("3 2\n1 2\n2 3\n");
  CHECK(g.n == 3);
  CHECK(g.edges.size() == 2);
  CHECK_THROWS_AS(Graph::parse_edge_list("3 2\n1 2\n"), std::invalid_argument);
  CHECK_THROWS_AS(Graph::parse_edge_list("3 1\n1 1\n"), std::invalid_argument);
  CHECK_THROWS_AS(Graph::parse_edge_list("3 2\n1 2\n1 2\n"), std::invalid_argument);
  CHECK_THROWS_AS(Graph::parse_edge_list("3 1\n1 4\n"), std::invalid_argument);
  CHECK_THROWS_AS(Graph::parse_edge_list(""), std::invalid_argument);
}

TEST_CASE("bm_elliptope_solve reaches the known optimum on K3") {
  const SymmetricMatrix L = laplacian(Graph::complete(3));
  const BmResult result = bm_elliptope_solve(L, 3, CounterStream::keyed(1, 0));
  CHECK(result.value >= 2.25 - 1e-3);
  CHECK(result.value <= 2.25 + 1e-6);  // feasible, so never above the optimum
  CHECK(is_correlation_matrix(SymmetricMatrix::from_dense(result.factor.gram(), 1e-8), 1e-8));
}

TEST_CASE("bm_elliptope_solve trivial and small cases") {
  SymmetricMatrix zero(3);
  const BmResult flat = bm_elliptope_solve(zero, 2, CounterStream::keyed(2, 0));
  CHECK(flat.value == doctest::Approx(0.0).epsilon(1e-12));

  const SymmetricMatrix edge = laplacian(Graph::from_edge_pairs(2, {{0, 1}}));
  const BmResult anti = bm_elliptope_solve(edge, 2, CounterStream::keyed(3, 0));
  CHECK(anti.value >= 1.0 - 1e-6);
  CHECK(anti.value <= 1.0 + 1e-9);

  CHECK_THROWS_AS(bm_elliptope_solve(zero, 1, CounterStream::keyed(4, 0)), std::invalid_argument);
}

TEST_CASE("warm start at the maxcut vertex never loses value") {
  CounterStream stream = CounterStream::keyed(47, 0);
  for (int trial = 0; trial < 5; ++trial) {
    const Graph g = random_graph(7, stream);
    const SymmetricMatrix L = laplacian(g);
    const auto [best, cut] = brute_force_maxcut(g);
    const int k = default_bm_rank(g.n);
    Eigen::MatrixXd init = Eigen::MatrixXd::Zero(g.n, k);
    for (int i = 0; i < g.n; ++i) init(i, 0) = double(cut[i]);
    BmOptions options;
    options.init = init;
    const BmResult result = bm_elliptope_solve(L, k, CounterStream::keyed(48, std::uint64_t(trial)), options);
    CHECK(result.value >= double(best) - 1e-9);
  }
}

TEST_CASE("hyperplane rounding degenerate and worked cases") {
  // identical rows: every hyperplane puts all vertices on one side
  const Graph k3 = Graph::complete(3);
  ElliptopeFactor flat;
  flat.V = Eigen::MatrixXd::Zero(3, 2);
  flat.V.col(0).setOnes();
  const RoundingResult trivial = hyperplane_round(k3, flat, 20, CounterStream::keyed(5, 0));
  CHECK(trivial.best_value == 0);

  // the balanced 120-degree K3 factor rounds to the maxcut
  const BmResult bm = bm_elliptope_solve(laplacian(k3), 3, CounterStream::keyed(6, 0));
  const RoundingResult best = hyperplane_round(k3, bm.factor, 100, CounterStream::keyed(7, 0));
  CHECK(best.best_value == 2);

  // antipodal rows on a single edge: one sample suffices
  ElliptopeFactor anti;
  anti.V = Eigen::MatrixXd::Zero(2, 2);
  anti.V(0, 0) = 1.0;
  anti.V(1, 0) = -1.0;
  const Graph edge = Graph::from_edge_pairs(2, {{0, 1}});
  const RoundingResult one = hyperplane_round(edge, anti, 1, CounterStream::keyed(8, 0));
  CHECK(one.best_value == 1);
}

TEST_CASE("sandwich report on worked examples") {
  const SandwichReport k3 = check_approx_sandwich(Graph::complete(3), 2.25, 2);
  CHECK(k3.lower_ok);  // 2 >= (2/pi) * 2.25 = 1.43
  CHECK(k3.two_over_pi_bm == doctest::Approx(2.0 / std::numbers::pi * 2.25).epsilon(1e-15));

  const SandwichReport empty = check_approx_sandwich(Graph::from_edge_pairs(2, {}), 0.0, 0);
  CHECK(empty.lower_ok);
  CHECK(empty.ratio == 1.0);

  const SandwichReport bad = check_approx_sandwich(Graph::complete(3), 10.0, 2);
  CHECK_FALSE(bad.lower_ok);
}

TEST_CASE("sandwich holds end to end on random graphs") {
  CounterStream stream = CounterStream::keyed(99, 0);
  for (int trial = 0; trial < 5; ++trial) {
    const Graph g = random_graph(4 + int(stream.next_u64() % 7), stream);
    const SymmetricMatrix L = laplacian(g);
    const auto [best, cut] = brute_force_maxcut(g);
    const BmResult bm = bm_elliptope_solve(L, default_bm_rank(g.n), stream.substream(std::uint64_t(trial)));
    const SandwichReport report = check_approx_sandwich(g, bm.value, best);
    CHECK(report.lower_ok);
    const RoundingResult rounded = hyperplane_round(g, bm.factor, 100, stream.substream(1000 + std::uint64_t(trial)));
    CHECK(double(rounded.best_value) >= report.two_over_pi_bm - 1.0);
  }
}
