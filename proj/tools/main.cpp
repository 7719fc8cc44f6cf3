// Command-line front end: certify cut-vector families, estimate certification
// probability, sweep the closed-form bounds, run the exact moment oracles,
// check the MaxCut sandwich, and export the 3-D elliptope point clouds.

#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "elliptope/bounds.hpp"
#include "elliptope/cutgeom.hpp"
#include "elliptope/format.hpp"
#include "elliptope/lpcert.hpp"
#include "elliptope/maxcut.hpp"
#include "elliptope/randmodel.hpp"
#include "elliptope/rng.hpp"

namespace {

using namespace elliptope;

constexpr std::uint64_t kDefaultSeed = 42;

constexpr int kExitOk = 0;
constexpr int kExitInputError = 1;
constexpr int kExitAssertionFailure = 2;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open input file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::vector<CutVector> parse_cut_rows(const std::string& text) {
  std::vector<CutVector> cuts;
  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream tokens(line);
    std::vector<std::int8_t> entries;
    std::string tok;
    while (tokens >> tok) {
      if (tok == "+1" || tok == "1" || tok == "+") {
        entries.push_back(1);
      } else if (tok == "-1" || tok == "-") {
        entries.push_back(-1);
      } else {
        throw std::runtime_error("cuts file: entry '" + tok + "' is not +1/-1");
      }
    }
    if (!entries.empty()) cuts.emplace_back(std::move(entries));
  }
  return cuts;
}

std::vector<double> parse_double_list(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(std::stod(item));
  }
  if (out.empty()) throw std::runtime_error("empty numeric list: '" + text + "'");
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<long long> parse_int_list(const std::string& text) {
  std::vector<long long> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(std::stoll(item));
  }
  if (out.empty()) throw std::runtime_error("empty numeric list: '" + text + "'");
  std::sort(out.begin(), out.end());
  return out;
}

void emit(const Table& table, const std::string& out_path, const std::string& format) {
  if (!out_path.empty()) write_table(table, out_path, format);
}

double thm_or_nan(double (*f)(double, long long, double), double p, long long r, double n) {
  try {
    return f(p, r, n);
  } catch (const std::invalid_argument&) {
    return std::numeric_limits<double>::quiet_NaN();
  }
}

int run_certify(const std::string& cuts_path, const std::string& out_path, const std::string& format) {
  const std::vector<CutVector> cuts = parse_cut_rows(read_file(cuts_path));
  if (cuts.size() < 2) throw std::runtime_error("cuts file: need at least two rows");
  const Certificate cert = certify_simplicial(cuts);
  const int r = int(cuts.size());
  const int n = cuts[0].size();

  const std::string verdict = cert.verdict == Verdict::CertifiedSimplicial ? "CERTIFIED_SIMPLICIAL" : "INCONCLUSIVE";
  std::cout << "family: r=" << r << " n=" << n << "\n"
            << "W full column rank: " << (cert.w_full_rank ? "yes" : "no") << "\n"
            << "Z full column rank: " << (cert.z_full_rank ? "yes" : "no") << "\n"
            << "Y full column rank: " << (cert.y_full_rank ? "yes" : "no") << "\n"
            << "[1|Y] full column rank: " << (cert.y_augmented_full_rank ? "yes" : "no") << "\n"
            << "verdict: " << verdict;
  if (cert.face_dimension) std::cout << " (face dimension " << *cert.face_dimension << ")";
  std::cout << "\n";

  Table t;
  t.columns = {"r", "n", "w_full_rank", "z_full_rank", "y_full_rank", "y_augmented_full_rank", "verdict", "face_dimension"};
  t.add_row({(long long)r, (long long)n, cert.w_full_rank, cert.z_full_rank, cert.y_full_rank,
             cert.y_augmented_full_rank, verdict, (long long)(cert.face_dimension ? *cert.face_dimension : -1)});
  emit(t, out_path, format);
  return kExitOk;
}

int run_estimate(double p, int r, int n, long long trials, std::uint64_t seed, double confidence, int workers,
                 const std::string& out_path, const std::string& format) {
  const MonteCarloEstimate est = estimate_face_probability(p, r, n, trials, seed, confidence, workers);
  const double b1 = bound_thm1(r, n);
  const double b2 = thm_or_nan(&bound_thm2, p, r, n);
  const double b3 = thm_or_nan(&bound_thm3, p, r, n);

  std::cout << "estimate: p=" << p << " r=" << r << " n=" << n << " trials=" << trials << " seed=" << seed << "\n"
            << "certified " << est.certified << "/" << est.trials << "  point=" << format_g17(est.point_estimate)
            << "  CI" << confidence << "=[" << format_g17(est.ci_low) << ", " << format_g17(est.ci_high) << "]\n"
            << "bounds: thm1=" << format_g17(b1) << " (p=0.5 model)  thm2=" << format_g17(b2)
            << "  thm3=" << format_g17(b3) << "\n";

  Table t;
  t.columns = {"p",        "r",      "n",        "trials",  "seed",       "confidence", "certified",
               "point_estimate", "ci_low", "ci_high", "bound_thm1", "bound_thm2", "bound_thm3"};
  t.add_row({p, (long long)r, (long long)n, est.trials, (long long)seed, confidence, est.certified,
             est.point_estimate, est.ci_low, est.ci_high, b1, b2, b3});
  emit(t, out_path, format);
  return kExitOk;
}

int run_bounds(const std::string& p_list, const std::string& r_list, const std::string& n_list,
               const std::string& out_path, const std::string& format) {
  const std::vector<double> ps = parse_double_list(p_list);
  const std::vector<long long> rs = parse_int_list(r_list);
  const std::vector<long long> ns = parse_int_list(n_list);

  Table t;
  t.columns = {"p", "r", "n", "bound_thm1", "bound_thm2", "bound_thm3", "raw_thm1", "raw_thm2", "raw_thm3"};
  for (double p : ps) {
    for (long long r : rs) {
      for (long long n : ns) {
        t.add_row({p, r, n, bound_thm1(r, double(n)), bound_thm2(p, r, double(n)), bound_thm3(p, r, double(n)),
                   bound_thm1_raw(r, double(n)), bound_thm2_raw(p, r, double(n)), bound_thm3_raw(p, r, double(n))});
      }
    }
  }
  std::cout << to_csv(t);
  emit(t, out_path, format);
  return kExitOk;
}

int run_oracle(const std::string& p_text, int r, const std::string& out_path, const std::string& format) {
  const Rational p = parse_probability(p_text);
  const MomentReport report = exact_second_moment_y(p, r);
  const double alpha = report.alpha.convert_to<double>();
  const double claim = (1.0 - alpha) * (1.0 - alpha);

  std::cout << "oracle: p=" << p_text << " r=" << r << "  alpha=" << format_g17(alpha) << "\n"
            << "lambda_min(M_r)        = " << format_g17(report.lambda_min_Mr) << "  (closed form 1-alpha)\n"
            << "lambda_min(Sigma)      = " << format_g17(report.lambda_min_Sigma) << "\n"
            << "lambda_min(SigmaCheck) = " << format_g17(report.lambda_min_SigmaCheck) << "\n"
            << "claimed lower bound (1-alpha)^2 = " << format_g17(claim) << "\n"
            << "restriction block equals Sigma exactly: " << (report.restriction_exact ? "yes" : "no") << "\n"
            << "enumeration matches entry table exactly: " << (report.closed_form_match ? "yes" : "no") << "\n";
  if (r <= 5) {
    std::cout << "Sigma (exact):\n";
    for (int i = 0; i < report.Sigma.rows; ++i) {
      for (int j = 0; j < report.Sigma.cols; ++j) std::cout << (j ? " " : "  ") << report.Sigma.at(i, j);
      std::cout << "\n";
    }
  }

  Table t;
  t.columns = {"p",    "r",  "alpha", "lambda_min_Mr", "lambda_min_Sigma", "lambda_min_SigmaCheck",
               "claim_lower_bound", "restriction_exact", "closed_form_match"};
  t.add_row({p_text, (long long)r, alpha, report.lambda_min_Mr, report.lambda_min_Sigma, report.lambda_min_SigmaCheck,
             claim, report.restriction_exact, report.closed_form_match});
  emit(t, out_path, format);

  const bool ok = report.restriction_exact && report.closed_form_match &&
                  report.lambda_min_Sigma >= claim - 1e-9 && report.lambda_min_SigmaCheck >= claim - 1e-9;
  if (!ok) {
    std::cerr << "oracle: a cross-check failed\n";
    return kExitAssertionFailure;
  }
  return kExitOk;
}

int run_maxcut(const std::string& edges_path, long long samples, std::uint64_t seed, const std::string& out_path,
               const std::string& format) {
  const Graph g = Graph::parse_edge_list(read_file(edges_path));
  const SymmetricMatrix L = laplacian(g);
  const auto [best, best_cut] = brute_force_maxcut(g);
  CounterStream stream = CounterStream::keyed(seed, 0);
  const BmResult bm = bm_elliptope_solve(L, default_bm_rank(g.n), stream.substream(1));
  const RoundingResult rounded = hyperplane_round(g, bm.factor, int(samples), stream.substream(2));
  const SandwichReport report = check_approx_sandwich(g, bm.value, best);

  std::cout << "maxcut: n=" << g.n << " m=" << g.edges.size() << "\n"
            << "brute force              = " << best << "\n"
            << "relaxation heuristic     = " << format_g17(bm.value) << "\n"
            << "best of " << samples << " roundings   = " << rounded.best_value << "\n"
            << "(2/pi) * heuristic       = " << format_g17(report.two_over_pi_bm) << "\n"
            << "sandwich lower bound ok  = " << (report.lower_ok ? "yes" : "no") << "\n"
            << "observed maxcut/heuristic ratio = " << format_g17(report.ratio) << "\n";

  Table t;
  t.columns = {"n", "m", "maxcut", "bm_value", "best_rounded", "two_over_pi_bm", "lower_ok", "ratio"};
  t.add_row({(long long)g.n, (long long)g.edges.size(), best, bm.value, rounded.best_value, report.two_over_pi_bm,
             report.lower_ok, report.ratio});
  emit(t, out_path, format);

  return report.lower_ok ? kExitOk : kExitAssertionFailure;
}

int run_fig_elliptope(long long grid, const std::string& out_path, const std::string& format) {
  if (grid < 2) throw std::runtime_error("fig-elliptope: grid resolution must be >= 2");

  Table t;
  t.columns = {"kind", "x", "y", "z"};
  // The 2^{3-1} = 4 distinct vertices of the 3-dimensional cut polytope.
  const std::vector<std::vector<std::int8_t>> reps = {{1, 1, 1}, {1, 1, -1}, {1, -1, 1}, {1, -1, -1}};
  for (const auto& rep : reps) {
    const auto v = lower_triangle_embed(cut_matrix(CutVector(rep)));
    t.add_row({std::string("vertex"), v[0], v[1], v[2]});
  }
  // Boundary sheet of the embedded elliptope: det [[1,a,b],[a,1,c],[b,c,1]]
  // vanishes at c = ab +- sqrt((1-a^2)(1-b^2)); both roots are real on the
  // whole square.
  for (long long ia = 0; ia < grid; ++ia) {
    const double a = -1.0 + 2.0 * double(ia) / double(grid - 1);
    for (long long ib = 0; ib < grid; ++ib) {
      const double b = -1.0 + 2.0 * double(ib) / double(grid - 1);
      const double s = std::sqrt(std::max(0.0, (1.0 - a * a) * (1.0 - b * b)));
      t.add_row({std::string("boundary"), a, b, a * b + s});
      t.add_row({std::string("boundary"), a, b, a * b - s});
    }
  }
  std::cout << "fig-elliptope: 4 vertices + " << (t.rows.size() - 4) << " boundary points\n";
  for (const auto& rep : reps) {
    const auto v = lower_triangle_embed(cut_matrix(CutVector(rep)));
    std::cout << "vertex: (" << v[0] << ", " << v[1] << ", " << v[2] << ")\n";
  }
  emit(t, out_path, format);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"simplicial-face certificates, probability bounds, and MaxCut sandwich checks for the elliptope"};
  app.require_subcommand(1);

  std::string p_text = "0.5";
  std::string r_text = "2";
  std::string n_text = "16";
  long long trials = 1000;
  std::uint64_t seed = kDefaultSeed;
  double confidence = 0.95;
  int workers = 1;
  std::string out_path;
  std::string format = "csv";
  std::string edges_path;
  std::string cuts_path;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--out", out_path, "write the result table to this file");
    cmd->add_option("--format", format, "output format: csv or json")->check(CLI::IsMember({"csv", "json"}));
  };

  CLI::App* certify = app.add_subcommand("certify", "certify a cut-vector family from a file (one ±1 row per vector)");
  certify->add_option("--cuts", cuts_path, "cut vectors, one row per vector")->required();
  add_common(certify);

  CLI::App* estimate = app.add_subcommand("estimate", "Monte Carlo estimate of the certification probability");
  estimate->add_option("--p", p_text, "balance parameter in [0,1]");
  estimate->add_option("--r", r_text, "number of vertices (>= 2)");
  estimate->add_option("--n", n_text, "ambient dimension");
  estimate->add_option("--trials", trials, "number of Monte Carlo trials");
  estimate->add_option("--seed", seed, "stream seed (default 42)");
  estimate->add_option("--confidence", confidence, "two-sided confidence level in (0,1)");
  estimate->add_option("--workers", workers, "worker threads (any count gives identical results)");
  add_common(estimate);

  CLI::App* bounds = app.add_subcommand("bounds", "sweep the three closed-form bounds over a grid");
  bounds->add_option("--p", p_text, "comma-separated p values in (0,1)");
  bounds->add_option("--r", r_text, "comma-separated r values (>= 2)");
  bounds->add_option("--n", n_text, "comma-separated n values");
  add_common(bounds);

  CLI::App* oracle = app.add_subcommand("oracle", "exact second-moment report for (p, r)");
  oracle->add_option("--p", p_text, "balance parameter, exact ('0.35' or '7/20')");
  oracle->add_option("--r", r_text, "number of vertices (2..12)");
  add_common(oracle);

  CLI::App* maxcut = app.add_subcommand("maxcut", "brute force vs relaxation heuristic vs rounding on an edge list");
  maxcut->add_option("--edges", edges_path, "edge list file: header 'n m' then 1-based 'i j' lines")->required();
  maxcut->add_option("--trials", trials, "hyperplane rounding samples")->default_val(100);
  maxcut->add_option("--seed", seed, "stream seed (default 42)");
  add_common(maxcut);

  CLI::App* fig = app.add_subcommand("fig-elliptope", "export vertex images and the boundary cloud of T(E_3)");
  fig->add_option("--n", n_text, "grid resolution per axis")->default_val("41");
  add_common(fig);

  CLI11_PARSE(app, argc, argv);

  try {
    if (certify->parsed()) return run_certify(cuts_path, out_path, format);
    if (estimate->parsed()) {
      return run_estimate(std::stod(p_text), int(std::stoll(r_text)), int(std::stoll(n_text)), trials, seed,
                          confidence, workers, out_path, format);
    }
    if (bounds->parsed()) return run_bounds(p_text, r_text, n_text, out_path, format);
    if (oracle->parsed()) return run_oracle(p_text, int(std::stoll(r_text)), out_path, format);
    if (maxcut->parsed()) return run_maxcut(edges_path, trials, seed, out_path, format);
    if (fig->parsed()) return run_fig_elliptope(std::stoll(n_text), out_path, format);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::logic_error& e) {
    // failed internal cross-assertion, not a user mistake
    std::cerr << "internal assertion failure: " << e.what() << "\n";
    return kExitAssertionFailure;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}
