#include "treelap/checks.hpp"

#include <algorithm>
#include <sstream>

#include "treelap/domination.hpp"
#include "treelap/generators.hpp"
#include "treelap/inertia.hpp"
#include "treelap/oracle.hpp"
#include "treelap/rng.hpp"

namespace treelap {

namespace {

class Recorder {
 public:
  explicit Recorder(TreeReport& report) : report_(report) {}

  void add(const std::string& name, bool pass, const std::string& detail = "") {
    report_.items.push_back({name, pass, false, pass ? "" : detail});
    report_.all_pass &= pass;
  }

  void skip(const std::string& name) { report_.items.push_back({name, true, true, ""}); }

 private:
  TreeReport& report_;
};

std::string show(const Rational& q) { return fraction_string(q); }

// Exact comparison gamma/mu vs num/den without leaving integers.
bool ratio_below(int gamma, int mu, int num, int den) { return gamma * den < num * mu; }

void run_core(const Tree& t, Recorder& rec) {
  const int n = t.vertex_count();
  const int p = penultimate_count(t);
  const int m = mu(t);
  const int big = nu(t);
  const auto [gamma, witness] = min_dominating_dp(t);

  rec.add("dp_witness_valid", static_cast<int>(witness.size()) == gamma && is_dominating(t, witness),
          "dp witness size " + std::to_string(witness.size()) + " vs gamma " + std::to_string(gamma));
  rec.add("p_le_mu", p <= m, "p=" + std::to_string(p) + " mu=" + std::to_string(m));
  rec.add("mu_le_gamma", m <= gamma, "mu=" + std::to_string(m) + " gamma=" + std::to_string(gamma));
  rec.add("ratio_below_4_3", ratio_below(gamma, m, 4, 3),
          "gamma/mu = " + std::to_string(gamma) + "/" + std::to_string(m));
  rec.add("nu_ge_gamma", big >= gamma,
          "nu=" + std::to_string(big) + " gamma=" + std::to_string(gamma));
  const int low_half = count_in_interval(t, Rational(0), Rational(2), true, false);
  rec.add("low_half_count", low_half >= (n + 1) / 2,
          "count[0,2)=" + std::to_string(low_half) + " n=" + std::to_string(n));
}

void run_greedy(const Tree& t, Recorder& rec) {
  const int gamma = min_dominating_dp(t).first;
  const auto cert = greedy_dominating(t);
  rec.add("greedy_minimum",
          static_cast<int>(cert.members.size()) == gamma && is_dominating(t, cert.members),
          "greedy size " + std::to_string(cert.members.size()) + " vs gamma " + std::to_string(gamma));
}

void run_brute(const Tree& t, Recorder& rec) {
  if (t.vertex_count() > 16) {
    rec.skip("dp_equals_brute");
    return;
  }
  const int dp = min_dominating_dp(t).first;
  const int brute = gamma_bruteforce(t);
  rec.add("dp_equals_brute", dp == brute,
          "dp=" + std::to_string(dp) + " brute=" + std::to_string(brute));
}

void run_weight_push(const Tree& t, Recorder& rec) {
  if (t.vertex_count() >= 3 && !no_adjacent_degree2(t)) {
    rec.skip("weight_push_minimum");
    return;
  }
  const auto cert = weight_push_dominating(t);
  const int gamma = min_dominating_dp(t).first;
  rec.add("weight_push_minimum",
          static_cast<int>(cert.members.size()) == gamma && is_dominating(t, cert.members),
          "size " + std::to_string(cert.members.size()) + " vs gamma " + std::to_string(gamma));
  if (cert.small_n_bypass) return;  // the size bound and push amounts assume p >= 1

  const int m = mu(t);
  const int p = penultimate_count(t);
  rec.add("weight_push_size_bound", 3 * static_cast<int>(cert.members.size()) <= 3 * m + p - 1,
          "3|D|=" + std::to_string(3 * cert.members.size()) + " vs 3mu+p-1=" +
              std::to_string(3 * m + p - 1));

  // Every processed non-root vertex pushes >= 1/3 unless it joined with value
  // exactly 0 (it is then a zero-child candidate of its parent). The root
  // instead retains >= 1/3.
  const Rational third(1, 3);
  bool amounts = cert.root_residual >= third;
  std::string why = amounts ? "" : "root residual " + show(cert.root_residual);
  for (const auto& d : cert.trace) {
    if (d.vertex == cert.root) continue;
    if (d.joined && d.value == 0) continue;
    if (d.pushed < third) {
      amounts = false;
      why = "vertex " + std::to_string(d.vertex) + " pushed " + show(d.pushed);
      break;
    }
  }
  rec.add("weight_push_amounts", amounts, why);
}

void run_eps_threshold(const Tree& t, Recorder& rec) {
  const int n = t.vertex_count();
  const auto min_deep = min_deep_degree(t);
  const int k = min_deep ? *min_deep : 3;  // no deep vertices: any threshold applies
  if (n < 3 || k < 3) {
    rec.skip("eps_threshold_dominating_set");
  } else {
    const auto cert = eps_threshold_dominating(t, k);
    const Rational eps = eps_for_degree(k);
    const int p = penultimate_count(t);
    rec.add("eps_threshold_dominating_set", is_dominating(t, cert.members),
            "set of " + std::to_string(cert.members.size()) + " does not dominate");
    rec.add("eps_threshold_size_bound", Rational(static_cast<int>(cert.members.size())) < (1 + eps) * p,
            "|D|=" + std::to_string(cert.members.size()) + " vs (1+eps)p=" + show((1 + eps) * p));
    bool amounts = cert.root_residual >= eps;
    std::string why = amounts ? "" : "root residual " + show(cert.root_residual);
    for (const auto& d : cert.trace) {
      if (d.vertex == cert.root) continue;
      if (d.pushed < eps) {
        amounts = false;
        why = "vertex " + std::to_string(d.vertex) + " pushed " + show(d.pushed);
        break;
      }
    }
    rec.add("eps_threshold_amounts", amounts, why);
  }

  // The threshold-2 variant applies to every tree with no adjacent degree-2
  // vertices and promises strictly less than 2p members.
  if (n < 3 || !no_adjacent_degree2(t)) {
    rec.skip("eps1_size_bound");
    return;
  }
  const auto cert1 = eps_threshold_dominating(t, 3, Rational(1));
  const int p = penultimate_count(t);
  rec.add("eps1_size_bound",
          is_dominating(t, cert1.members) && static_cast<int>(cert1.members.size()) < 2 * p,
          "|D|=" + std::to_string(cert1.members.size()) + " vs 2p=" + std::to_string(2 * p));
}

void run_contraction(const Tree& t, Recorder& rec) {
  const auto p = find_clean_path(t);
  if (!p) {
    rec.skip("contraction_step");
    return;
  }
  const auto result = contract_clean_path(t, *p);
  const int mu_before = mu(t), mu_after = mu(result.tree);
  const int g_before = min_dominating_dp(t).first, g_after = min_dominating_dp(result.tree).first;
  const int drop = g_before - g_after;
  const bool ok = mu_before == mu_after + 1 && (drop == 0 || drop == 1) &&
                  g_before * mu_after <= g_after * mu_before;  // ratio may only grow
  std::ostringstream detail;
  detail << "mu " << mu_before << "->" << mu_after << ", gamma " << g_before << "->" << g_after;
  rec.add("contraction_step", ok, detail.str());
}

void run_root_invariance(const Tree& t, int index, const CheckOptions& opts, Recorder& rec) {
  const int n = t.vertex_count();
  SplitMix64 rng(derive_seed(opts.seed, static_cast<std::uint64_t>(index)));
  const std::vector<Rational> alphas = {Rational(-1), Rational(-2),
                                        make_rational(-rng.range(1, 4 * n), rng.range(1, 16))};
  bool ok = true;
  std::string why;
  for (const auto& alpha : alphas) {
    const auto reference = diagonalize(root_at(t, 0), alpha).counts;
    for (int trial = 0; trial < 3 && ok; ++trial) {
      const int root = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
      const auto counts =
          diagonalize(root_at(t, root), alpha, ZeroChildRule::random_pick, &rng).counts;
      if (!(counts == reference)) {
        ok = false;
        why = "alpha " + show(alpha) + " root " + std::to_string(root);
      }
    }
  }
  rec.add("root_invariance", ok, why);
}

void run_oracle(const Tree& t, Recorder& rec) {
  if (t.vertex_count() > 512) {
    rec.skip("oracle_agreement");
    return;
  }
  const auto eigenvalues = jacobi_eigenvalues(laplacian_matrix(t));
  const double guard = 1e-6;
  bool ok = true;
  std::string why;
  const auto compare = [&](double a, double b, int exact, const char* label) {
    const auto numeric = interval_count_numeric(eigenvalues, a, b, guard);
    if (numeric && *numeric != exact) {
      ok = false;
      why = std::string(label) + ": numeric " + std::to_string(*numeric) + " vs exact " +
            std::to_string(exact);
    }
  };
  const int n = t.vertex_count();
  compare(0.0, 1.0, mu(t), "[0,1)");
  compare(2.0, n + 1.0, nu(t), "[2,n]");
  compare(0.0, 2.0, count_in_interval(t, Rational(0), Rational(2), true, false), "[0,2)");
  rec.add("oracle_agreement", ok, why);
}

void run_localization(const Tree& t, const CheckOptions& opts, Recorder& rec) {
  const auto intervals = localize_spectrum(t, opts.localization_tol);
  const int n = t.vertex_count();
  int total = 0;
  Rational estimate(0);
  bool widths = true;
  for (const auto& s : intervals) {
    total += s.multiplicity;
    estimate += Rational(s.multiplicity) * (s.lo + s.hi) / 2;
    widths &= s.exact ? s.lo == s.hi : s.hi - s.lo <= opts.localization_tol;
  }
  // Eigenvalues of a tree Laplacian sum to twice the edge count, so the
  // midpoint estimate must land within n * tol / 2 of 2(n - 1).
  Rational drift = estimate - 2 * (n - 1);
  if (drift < 0) drift = -drift;
  const bool ok = total == n && widths && drift <= Rational(n) * opts.localization_tol;
  rec.add("localization_accounting", ok,
          "multiplicity total " + std::to_string(total) + ", drift " + show(drift));
}

}  // namespace

TreeReport check_tree(const Tree& t, int index, const CheckOptions& opts) {
  TreeReport report;
  report.index = index;
  report.n = t.vertex_count();
  Recorder rec(report);
  try {
    if (opts.core) run_core(t, rec);
    if (opts.greedy) run_greedy(t, rec);
    if (opts.brute_small) run_brute(t, rec);
    if (opts.weight_push) run_weight_push(t, rec);
    if (opts.eps_threshold) run_eps_threshold(t, rec);
    if (opts.contraction) run_contraction(t, rec);
    if (opts.root_invariance) run_root_invariance(t, index, opts, rec);
    if (opts.oracle) run_oracle(t, rec);
    if (opts.localization) run_localization(t, opts, rec);
  } catch (const std::exception& e) {
    rec.add("exception", false, e.what());
  }
  return report;
}

std::vector<TreeReport> run_batch(const std::vector<Tree>& trees, const CheckOptions& opts,
                                  BatchMode mode) {
  std::vector<TreeReport> reports(trees.size());
  if (mode == BatchMode::serial) {
    for (std::size_t i = 0; i < trees.size(); ++i)
      reports[i] = check_tree(trees[i], static_cast<int>(i), opts);
    return reports;
  }
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
  for (long long i = 0; i < static_cast<long long>(trees.size()); ++i)
    reports[static_cast<std::size_t>(i)] =
        check_tree(trees[static_cast<std::size_t>(i)], static_cast<int>(i), opts);
#else
  for (std::size_t i = 0; i < trees.size(); ++i)
    reports[i] = check_tree(trees[i], static_cast<int>(i), opts);
#endif
  return reports;
}

BatchSummary summarize(const std::vector<TreeReport>& reports, std::size_t max_failures) {
  BatchSummary summary;
  summary.trees = static_cast<int>(reports.size());
  for (const auto& report : reports) {
    summary.trees_failed += report.all_pass ? 0 : 1;
    for (const auto& item : report.items) {
      if (item.skipped) continue;
      auto& [run, fail] = summary.per_check[item.name];
      ++run;
      if (!item.pass) {
        ++fail;
        if (summary.failures.size() < max_failures)
          summary.failures.push_back("tree " + std::to_string(report.index) + " (n=" +
                                     std::to_string(report.n) + ") " + item.name + ": " +
                                     item.detail);
      }
    }
  }
  return summary;
}

}  // namespace treelap
