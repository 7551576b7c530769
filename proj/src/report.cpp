#include "treelap/report.hpp"

#include <algorithm>

namespace treelap {

using nlohmann::json;

json rational_json(const Rational& q) {
  return json{{"num", num_string(q)}, {"den", den_string(q)}, {"dec", decimal_string(q)}};
}

Rational rational_from_json(const json& j) {
  const std::string num = j.at("num").get<std::string>();
  const std::string den = j.at("den").get<std::string>();
  return parse_rational(num + "/" + den);
}

json analysis_json(const Tree& t) {
  const int n = t.vertex_count();
  const auto cls = classify(t);
  const int m = mu(t), big = nu(t);
  const auto [gamma, witness] = min_dominating_dp(t);

  json degree_histogram = json::array();
  {
    int max_degree = 0;
    for (int v = 0; v < n; ++v) max_degree = std::max(max_degree, t.degree(v));
    std::vector<int> buckets(static_cast<std::size_t>(max_degree) + 1, 0);
    for (int v = 0; v < n; ++v) ++buckets[static_cast<std::size_t>(t.degree(v))];
    for (int count : buckets) degree_histogram.push_back(count);
  }

  json out{{"n", n},
           {"degree_histogram", degree_histogram},
           {"leaves", cls.leaf_count},
           {"penultimate", cls.penultimate_count},
           {"deep", cls.deep_count},
           {"mu", m},
           {"nu", big},
           {"gamma", gamma},
           {"gamma_witness", witness},
           {"ratio_gamma_mu", rational_json(make_rational(gamma, m))},
           {"ratio_nu_gamma", rational_json(make_rational(big, gamma))}};

  if (const auto deep_min = min_deep_degree(t))
    out["min_deep_degree"] = *deep_min;
  else
    out["min_deep_degree"] = nullptr;
  out["no_adjacent_degree2"] = no_adjacent_degree2(t);

  if (n <= 2 || no_adjacent_degree2(t)) {
    const auto cert = weight_push_dominating(t);
    out["weight_push"] = certificate_json(cert, t);
  } else {
    out["weight_push"] = nullptr;
  }

  CheckOptions opts;  // cheap groups only; oracle and localization stay off
  const auto report = check_tree(t, 0, opts);
  json checks = json::array();
  for (const auto& item : report.items) {
    if (item.skipped) continue;
    checks.push_back(json{{"name", item.name}, {"pass", item.pass}});
  }
  out["checks"] = checks;
  out["all_checks_pass"] = report.all_pass;
  return out;
}

json certificate_json(const DominationCertificate& cert, const Tree& t, bool include_trace) {
  json out{{"method", cert.method},
           {"members", cert.members},
           {"size", cert.members.size()},
           {"is_dominating", is_dominating(t, cert.members)}};
  if (cert.root >= 0) out["root"] = cert.root;
  if (cert.small_n_bypass) out["small_n_bypass"] = true;

  json bounds = json::array();
  const int n = t.vertex_count();
  const int size = static_cast<int>(cert.members.size());
  if (cert.method == "dp" || cert.method == "greedy" || cert.method == "alg2" ||
      cert.method == "brute") {
    const int gamma = min_dominating_dp(t).first;
    bounds.push_back(json{{"name", "size_is_minimum"}, {"pass", size == gamma}});
  }
  if (cert.method == "alg2" && n >= 3) {
    const int m = mu(t);
    const int p = penultimate_count(t);
    bounds.push_back(
        json{{"name", "size_le_mu_plus_third_of_p_minus_1"}, {"pass", 3 * size <= 3 * m + p - 1}});
  }
  if (cert.method == "alg3" && n >= 3) {
    const int p = penultimate_count(t);
    // The threshold is 1 + eps, recoverable from any penultimate's trace row;
    // report against the looser universal cap 2p as well.
    bounds.push_back(json{{"name", "size_lt_2p"}, {"pass", size < 2 * p}});
  }
  out["bounds_checked"] = bounds;

  if (include_trace && !cert.trace.empty()) {
    json trace = json::array();
    for (const auto& d : cert.trace) {
      json row{{"vertex", d.vertex},
               {"weight", rational_json(d.weight)},
               {"joined", d.joined},
               {"pushed", rational_json(d.pushed)}};
      if (cert.method == "alg2") {
        row["value"] = rational_json(d.value);
        row["zero_branch"] = d.zero_branch;
        if (d.chosen_child >= 0) row["chosen_child"] = d.chosen_child;
      }
      trace.push_back(row);
    }
    out["trace"] = trace;
    out["root_residual"] = rational_json(cert.root_residual);
  }
  return out;
}

json intervals_json(const std::vector<SpectralInterval>& intervals) {
  json out = json::array();
  for (const auto& s : intervals) {
    out.push_back(json{{"lo", rational_json(s.lo)},
                       {"hi", rational_json(s.hi)},
                       {"multiplicity", s.multiplicity},
                       {"exact", s.exact}});
  }
  return out;
}

json summary_json(const BatchSummary& summary) {
  json per_check = json::array();
  for (const auto& [name, counts] : summary.per_check) {
    per_check.push_back(json{{"name", name}, {"run", counts.first}, {"fail", counts.second}});
  }
  return json{{"trees", summary.trees},
              {"trees_failed", summary.trees_failed},
              {"checks", per_check},
              {"failures", summary.failures}};
}

}  // namespace treelap
