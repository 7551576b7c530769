#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "treelap/checks.hpp"
#include "treelap/domination.hpp"
#include "treelap/generators.hpp"
#include "treelap/inertia.hpp"
#include "treelap/oracle.hpp"
#include "treelap/report.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace treelap;
using nlohmann::json;

namespace {

void emit(const json& payload) { std::cout << payload.dump(2) << "\n"; }

int run_analyze(const std::string& path, bool trace) {
  const Tree t = load_tree(path);
  json out = analysis_json(t);
  if (trace && !out.at("weight_push").is_null())
    out["weight_push"] = certificate_json(weight_push_dominating(t), t, true);
  emit(out);
  return 0;
}

int run_spectrum(const std::string& path, const std::string& tol_text,
                 const std::vector<std::string>& interval, bool open_left, bool closed_right) {
  const Tree t = load_tree(path);
  if (!interval.empty()) {
    const Rational a = parse_rational(interval[0]);
    const Rational b = parse_rational(interval[1]);
    const int count = count_in_interval(t, a, b, !open_left, closed_right);
    emit(json{{"n", t.vertex_count()},
              {"a", rational_json(a)},
              {"b", rational_json(b)},
              {"closed_left", !open_left},
              {"closed_right", closed_right},
              {"count", count}});
    return 0;
  }
  const Rational tol = parse_rational(tol_text);
  const auto intervals = localize_spectrum(t, tol);
  Rational estimate(0);
  for (const auto& s : intervals) estimate += Rational(s.multiplicity) * (s.lo + s.hi) / 2;
  emit(json{{"n", t.vertex_count()},
            {"tol", rational_json(tol)},
            {"intervals", intervals_json(intervals)},
            {"eigenvalue_sum_estimate", rational_json(estimate)},
            {"eigenvalue_sum_exact", 2 * (t.vertex_count() - 1)}});
  return 0;
}

int run_dominate(const std::string& path, const std::string& method, int k,
                 const std::string& eps_text, bool trace) {
  const Tree t = load_tree(path);
  if (method == "brute") {
    const int size = gamma_bruteforce(t);
    const int dp = min_dominating_dp(t).first;
    emit(json{{"method", "brute"},
              {"size", size},
              {"members", nullptr},  // the exhaustive count yields no certificate
              {"bounds_checked", json::array({json{{"name", "size_is_minimum"}, {"pass", size == dp}}})}});
    return 0;
  }
  DominationCertificate cert;
  if (method == "dp")
    cert = dp_certificate(t);
  else if (method == "greedy")
    cert = greedy_dominating(t);
  else if (method == "alg2")
    cert = weight_push_dominating(t);
  else if (method == "alg3")
    cert = eps_threshold_dominating(
        t, k, eps_text.empty() ? std::nullopt : std::optional<Rational>(parse_rational(eps_text)));
  else
    throw BadParameterError("unknown method '" + method + "'");
  emit(certificate_json(cert, t, trace));
  return 0;
}

Tree generate_family(const std::string& family, int k, int n, int legs, int leg_len,
                     std::uint64_t seed) {
  if (family == "fig1") return ratio54_example();
  if (family == "tight43") return tight_ratio_family(k);
  if (family == "caterpillar") return caterpillar(n);
  if (family == "star") return star(n);
  if (family == "path") return path(n);
  if (family == "spider") return spider(legs, leg_len);
  if (family == "random") return random_tree(n, seed);
  if (family == "random-scriptT") return random_no_adjacent_degree2(n, seed);
  if (family == "random-Tk") return random_min_deep_degree(n, k, seed);
  throw BadParameterError("unknown family '" + family + "'");
}

int run_generate(const std::string& family, int k, int n, int legs, int leg_len,
                 std::uint64_t seed, const std::string& out_path) {
  const Tree t = generate_family(family, k, n, legs, leg_len, seed);
  if (out_path.empty()) {
    std::cout << write_tree(t);
    return 0;
  }
  std::ofstream out(out_path);
  if (!out) throw BadParameterError("cannot write '" + out_path + "'");
  out << write_tree(t);
  emit(json{{"family", family}, {"n", t.vertex_count()}, {"path", out_path}});
  return 0;
}

int run_verify(const std::vector<std::string>& files, int random_count, int n_min, int n_max,
               std::uint64_t seed, bool serial, bool full) {
  std::vector<Tree> trees;
  for (const auto& f : files) trees.push_back(load_tree(f));
  if (random_count > 0) {
    if (n_min < 1 || n_max < n_min)
      throw BadParameterError("need 1 <= n-min <= n-max for random verification");
    for (int i = 0; i < random_count; ++i) {
      const std::uint64_t s = derive_seed(seed, static_cast<std::uint64_t>(i));
      const int n = n_min + static_cast<int>(s % static_cast<std::uint64_t>(n_max - n_min + 1));
      trees.push_back(random_tree(n, s));
    }
  }
  if (trees.empty()) throw BadParameterError("nothing to verify: pass files or --random COUNT");

  CheckOptions opts;
  opts.seed = seed;
  opts.oracle = full;
  opts.localization = full;
  const auto reports =
      run_batch(trees, opts, serial ? BatchMode::serial : BatchMode::parallel);
  const auto summary = summarize(reports);
  emit(summary_json(summary));
  return summary.trees_failed == 0 ? 0 : 2;
}

struct Score {
  int gamma = 0;
  int mu = 1;
};

// Exact comparison of gamma/mu ratios without leaving integers.
bool better(const Score& a, const Score& b) {
  return static_cast<long long>(a.gamma) * b.mu > static_cast<long long>(b.gamma) * a.mu;
}

Score score_tree(const Tree& t) { return {min_dominating_dp(t).first, mu(t)}; }

int run_search(int n, int iters, std::uint64_t seed, const std::string& start_path, bool serial) {
  std::vector<int> current;
  if (!start_path.empty()) {
    const Tree start = load_tree(start_path);
    n = start.vertex_count();
    if (n < 3) throw BadParameterError("search needs at least 3 vertices");
    current = prufer_encode(start);
  } else {
    if (n < 3) throw BadParameterError("search needs at least 3 vertices");
    SplitMix64 init(derive_seed(seed, 0));
    current.assign(static_cast<std::size_t>(n) - 2, 0);
    for (int& v : current) v = static_cast<int>(init.below(static_cast<std::uint64_t>(n)));
  }

  SplitMix64 rng(derive_seed(seed, 1));
  Score best = score_tree(prufer_decode(n, current));
  json trajectory = json::array();
  trajectory.push_back(json{{"iter", 0},
                            {"gamma", best.gamma},
                            {"mu", best.mu},
                            {"ratio", rational_json(make_rational(best.gamma, best.mu))}});

  const int batch = 64;
  int evaluated = 0;
  while (evaluated < iters) {
    const int width = std::min(batch, iters - evaluated);
    // Draw all mutations up front so evaluation order cannot influence the
    // random stream, then score the candidates independently.
    std::vector<std::vector<int>> candidates(static_cast<std::size_t>(width), current);
    for (auto& cand : candidates) {
      const auto pos = rng.below(cand.size());
      cand[pos] = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
    }
    std::vector<Score> scores(static_cast<std::size_t>(width));
    if (serial) {
      for (int i = 0; i < width; ++i)
        scores[static_cast<std::size_t>(i)] = score_tree(prufer_decode(n, candidates[static_cast<std::size_t>(i)]));
    } else {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
      for (int i = 0; i < width; ++i)
        scores[static_cast<std::size_t>(i)] = score_tree(prufer_decode(n, candidates[static_cast<std::size_t>(i)]));
    }
    // Deterministic merge: smallest index among strict improvements wins.
    int winner = -1;
    Score winner_score = best;
    for (int i = 0; i < width; ++i) {
      if (better(scores[static_cast<std::size_t>(i)], winner_score)) {
        winner = i;
        winner_score = scores[static_cast<std::size_t>(i)];
      }
    }
    evaluated += width;
    if (winner >= 0) {
      current = candidates[static_cast<std::size_t>(winner)];
      best = winner_score;
      trajectory.push_back(json{{"iter", evaluated},
                                {"gamma", best.gamma},
                                {"mu", best.mu},
                                {"ratio", rational_json(make_rational(best.gamma, best.mu))}});
    }
  }

  const Tree final_tree = prufer_decode(n, current);
  json edges = json::array();
  for (auto [u, v] : final_tree.edges()) edges.push_back(json::array({u, v}));
  const bool below_bound = 3 * best.gamma < 4 * best.mu;
  emit(json{{"n", n},
            {"iters", iters},
            {"seed", seed},
            {"best_gamma", best.gamma},
            {"best_mu", best.mu},
            {"best_ratio", rational_json(make_rational(best.gamma, best.mu))},
            {"ratio_below_4_3", below_bound},
            {"trajectory", trajectory},
            {"best_tree_edges", edges}});
  return below_bound ? 0 : 2;  // a counterexample to the bound would be a violation
}

int run_contract(const std::string& path) {
  Tree t = load_tree(path);
  json steps = json::array();
  bool ok = true;
  while (const auto p = find_clean_path(t)) {
    const auto result = contract_clean_path(t, *p);
    const int mu_before = mu(t), mu_after = mu(result.tree);
    const int g_before = min_dominating_dp(t).first;
    const int g_after = min_dominating_dp(result.tree).first;
    const bool mu_drop_one = mu_before == mu_after + 1;
    const bool gamma_drop_ok = g_before - g_after == 0 || g_before - g_after == 1;
    const bool ratio_monotone = g_before * mu_after <= g_after * mu_before;
    ok &= mu_drop_one && gamma_drop_ok && ratio_monotone;
    steps.push_back(json{{"path", json::array({p->a, p->b, p->c, p->d})},
                         {"merged", result.merged},
                         {"mu_before", mu_before},
                         {"mu_after", mu_after},
                         {"gamma_before", g_before},
                         {"gamma_after", g_after},
                         {"mu_drop_one", mu_drop_one},
                         {"gamma_drop_ok", gamma_drop_ok},
                         {"ratio_monotone", ratio_monotone}});
    t = result.tree;
  }
  json final_edges = json::array();
  for (auto [u, v] : t.edges()) final_edges.push_back(json::array({u, v}));
  emit(json{{"steps", steps},
            {"step_count", steps.size()},
            {"all_steps_valid", ok},
            {"final_n", t.vertex_count()},
            {"final_edges", final_edges}});
  return ok ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Laplacian eigenvalue counting and dominating sets on trees"};
  app.require_subcommand(1);

  // analyze
  auto* analyze = app.add_subcommand("analyze", "Counting statistics, ratios, and invariants");
  std::string analyze_file;
  bool analyze_trace = false;
  analyze->add_option("file", analyze_file, "edge-list file")->required();
  analyze->add_flag("--trace", analyze_trace, "include the weight propagation trace");

  // spectrum
  auto* spectrum = app.add_subcommand("spectrum", "Localize eigenvalues or count an interval");
  std::string spectrum_file, spectrum_tol = "1e-6";
  std::vector<std::string> spectrum_interval;
  bool open_left = false, closed_right = false;
  spectrum->add_option("file", spectrum_file, "edge-list file")->required();
  spectrum->add_option("--tol", spectrum_tol, "localization interval width (rational or decimal)");
  spectrum->add_option("--interval", spectrum_interval, "count eigenvalues between two endpoints")
      ->expected(2);
  spectrum->add_flag("--open-left", open_left, "exclude the left endpoint (default closed)");
  spectrum->add_flag("--closed-right", closed_right, "include the right endpoint (default open)");

  // dominate
  auto* dominate = app.add_subcommand("dominate", "Build a dominating set");
  std::string dominate_file, method, eps_text;
  int dominate_k = 3;
  bool dominate_trace = false;
  dominate->add_option("file", dominate_file, "edge-list file")->required();
  dominate->add_option("--method", method, "dp, brute, greedy, alg2, or alg3")->required();
  dominate->add_option("--k", dominate_k, "degree threshold for alg3");
  dominate->add_option("--eps-override", eps_text, "alg3 threshold override (only 1 is accepted)");
  dominate->add_flag("--trace", dominate_trace, "include the per-vertex decision trace");

  // generate
  auto* generate = app.add_subcommand("generate", "Emit a named tree family");
  std::string family, out_path;
  int gen_k = 2, gen_n = 10, gen_legs = 3, gen_leg_len = 2;
  std::uint64_t gen_seed = 1;
  generate
      ->add_option("--family", family,
                   "fig1, tight43, caterpillar, star, path, spider, random, random-scriptT, "
                   "random-Tk")
      ->required();
  generate->add_option("--k", gen_k, "subtree count (tight43) or degree threshold (random-Tk)");
  generate->add_option("--n", gen_n, "size parameter");
  generate->add_option("--legs", gen_legs, "spider legs");
  generate->add_option("--leg-len", gen_leg_len, "spider leg length");
  generate->add_option("--seed", gen_seed, "random seed");
  generate->add_option("-o,--output", out_path, "write the edge list here (stdout otherwise)");

  // verify
  auto* verify = app.add_subcommand("verify", "Run the invariant suite over many trees");
  std::vector<std::string> verify_files;
  int random_count = 0, n_min = 3, n_max = 120;
  std::uint64_t verify_seed = 1;
  bool serial = false, full = false;
  verify->add_option("files", verify_files, "edge-list files");
  verify->add_option("--random", random_count, "also check this many random trees");
  verify->add_option("--n-min", n_min, "smallest random size");
  verify->add_option("--n-max", n_max, "largest random size");
  verify->add_option("--seed", verify_seed, "random seed");
  verify->add_flag("--serial", serial, "use the serial reference runner");
  verify->add_flag("--full", full, "also run the dense eigensolver and localization checks");

  // search
  auto* search = app.add_subcommand("search", "Hill-climb for large domination-to-mu ratios");
  int search_n = 30, search_iters = 3000;
  std::uint64_t search_seed = 1;
  std::string start_path;
  bool search_serial = false;
  search->add_option("--n", search_n, "vertex count");
  search->add_option("--iters", search_iters, "candidate evaluations");
  search->add_option("--seed", search_seed, "random seed");
  search->add_option("--start", start_path, "start from this edge-list file");
  search->add_flag("--serial", search_serial, "evaluate candidates serially");

  // contract
  auto* contract = app.add_subcommand("contract", "Contract clean length-3 paths to exhaustion");
  std::string contract_file;
  contract->add_option("file", contract_file, "edge-list file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (*analyze) return run_analyze(analyze_file, analyze_trace);
    if (*spectrum)
      return run_spectrum(spectrum_file, spectrum_tol, spectrum_interval, open_left, closed_right);
    if (*dominate) return run_dominate(dominate_file, method, dominate_k, eps_text, dominate_trace);
    if (*generate)
      return run_generate(family, gen_k, gen_n, gen_legs, gen_leg_len, gen_seed, out_path);
    if (*verify)
      return run_verify(verify_files, random_count, n_min, n_max, verify_seed, serial, full);
    if (*search) return run_search(search_n, search_iters, search_seed, start_path, search_serial);
    if (*contract) return run_contract(contract_file);
  } catch (const PreconditionError& e) {
    std::cerr << "precondition failed: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
