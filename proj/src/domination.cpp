#include "treelap/domination.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <sstream>

namespace treelap {

bool is_dominating(const Tree& t, const std::vector<int>& members) {
  const int n = t.vertex_count();
  std::vector<char> covered(n, 0);
  for (int v : members) {
    if (v < 0 || v >= n) throw IdRangeError("member " + std::to_string(v) + " out of range");
    covered[v] = 1;
    for (int w : t.neighbors(v)) covered[w] = 1;
  }
  return std::find(covered.begin(), covered.end(), 0) == covered.end();
}

namespace {

constexpr long long kInf = std::numeric_limits<long long>::max() / 4;

// Three-state costs for the subtree under v, with v respectively in the set,
// out but dominated by a child, or out and waiting for its parent.
struct DpCosts {
  long long in = 0, dom = 0, wait = 0;
};

enum class DpState { in, dom, wait };

std::string join_ids(const std::vector<int>& ids) {
  std::ostringstream out;
  for (std::size_t i = 0; i < ids.size(); ++i) out << (i ? ", " : "") << ids[i];
  return out.str();
}

}  // namespace

std::pair<int, std::vector<int>> min_dominating_dp(const Tree& t) {
  const int n = t.vertex_count();
  const RootedTree rt = root_at(t, 0);
  std::vector<DpCosts> cost(n);

  for (int v : rt.bottom_up_order()) {
    const auto& kids = rt.children(v);
    DpCosts& c = cost[v];
    c.in = 1;
    c.wait = 0;
    long long dom_base = 0;       // every child at its min(in, dom)
    long long best_flip = kInf;   // cheapest upgrade if no child chose "in"
    bool has_in_child = false;
    for (int k : kids) {
      const DpCosts& ck = cost[k];
      c.in += std::min(ck.in, std::min(ck.dom, ck.wait));
      c.wait = c.wait >= kInf || ck.dom >= kInf ? kInf : c.wait + ck.dom;
      const long long m = std::min(ck.in, ck.dom);
      dom_base = dom_base >= kInf || m >= kInf ? kInf : dom_base + m;
      has_in_child |= ck.in <= ck.dom;
      best_flip = std::min(best_flip, ck.in - m);
    }
    c.dom = kids.empty() || dom_base >= kInf ? kInf
                                             : dom_base + (has_in_child ? 0 : best_flip);
  }

  const long long gamma = std::min(cost[0].in, cost[0].dom);

  // Reconstruct one optimal set, preferring out-of-set states on ties and the
  // smallest-id child when someone must be forced in.
  std::vector<DpState> state(n);
  state[0] = cost[0].dom <= cost[0].in ? DpState::dom : DpState::in;
  std::vector<int> members;
  const auto& order = rt.bottom_up_order();
  for (auto it = order.rbegin(); it != order.rend(); ++it) {  // top-down
    const int v = *it;
    if (state[v] == DpState::in) members.push_back(v);
    const auto& kids = rt.children(v);
    if (kids.empty()) continue;
    switch (state[v]) {
      case DpState::in:
        for (int k : kids) {
          const DpCosts& ck = cost[k];
          const long long m = std::min(ck.in, std::min(ck.dom, ck.wait));
          state[k] = ck.wait == m ? DpState::wait : (ck.dom == m ? DpState::dom : DpState::in);
        }
        break;
      case DpState::wait:
        for (int k : kids) state[k] = DpState::dom;
        break;
      case DpState::dom: {
        bool have_in = false;
        for (int k : kids) {
          const DpCosts& ck = cost[k];
          state[k] = ck.dom <= ck.in ? DpState::dom : DpState::in;
          have_in |= state[k] == DpState::in;
        }
        if (!have_in) {
          int flip = -1;
          long long best = kInf;
          for (int k : kids) {  // ascending ids, so first minimum wins
            const long long delta = cost[k].in - std::min(cost[k].in, cost[k].dom);
            if (delta < best) {
              best = delta;
              flip = k;
            }
          }
          state[flip] = DpState::in;
        }
        break;
      }
    }
  }
  std::sort(members.begin(), members.end());
  return {static_cast<int>(gamma), std::move(members)};
}

DominationCertificate dp_certificate(const Tree& t) {
  DominationCertificate cert;
  cert.method = "dp";
  cert.members = min_dominating_dp(t).second;
  return cert;
}

int gamma_bruteforce(const Tree& t) {
  const int n = t.vertex_count();
  if (n > 20)
    throw BadParameterError("exhaustive search capped at 20 vertices, got " + std::to_string(n));
  std::vector<std::uint32_t> closed(n);
  for (int v = 0; v < n; ++v) {
    std::uint32_t m = 1u << v;
    for (int w : t.neighbors(v)) m |= 1u << w;
    closed[v] = m;
  }
  const std::uint32_t full = n == 32 ? ~0u : (1u << n) - 1;
  std::vector<std::uint32_t> covered(std::size_t(1) << n);
  covered[0] = 0;
  int best = n;
  for (std::uint32_t mask = 1; mask <= full; ++mask) {
    const int low = std::countr_zero(mask);
    covered[mask] = covered[mask & (mask - 1)] | closed[low];
    if (covered[mask] == full) best = std::min(best, std::popcount(mask));
  }
  return best;
}

DominationCertificate greedy_dominating(const Tree& t) {
  const int n = t.vertex_count();
  DominationCertificate cert;
  cert.method = "greedy";
  cert.root = 0;
  const RootedTree rt = root_at(t, 0);
  std::vector<char> dominated(n, 0);
  for (int v : rt.bottom_up_order()) {
    bool needy_child = false;
    for (int c : rt.children(v)) needy_child |= !dominated[c];
    if (!needy_child) continue;
    cert.members.push_back(v);
    dominated[v] = 1;
    if (rt.parent(v) >= 0) dominated[rt.parent(v)] = 1;
    for (int c : rt.children(v)) dominated[c] = 1;
  }
  if (!dominated[0]) cert.members.push_back(0);
  std::sort(cert.members.begin(), cert.members.end());
  return cert;
}

namespace {

DominationCertificate trivial_small_tree(const char* method) {
  DominationCertificate cert;
  cert.method = method;
  cert.members = {0};  // vertex 0 dominates one- and two-vertex trees
  cert.root = 0;
  cert.small_n_bypass = true;
  return cert;
}

}  // namespace

DominationCertificate weight_push_dominating(const Tree& t) {
  const int n = t.vertex_count();
  if (n <= 2) return trivial_small_tree("alg2");

  if (const auto bad = adjacent_degree2_witnesses(t); !bad.empty())
    throw PreconditionError("tree has adjacent degree-2 vertices: " + join_ids(bad));

  const Rational threshold(4, 3);
  const auto cls = classify(t);
  const int root = *smallest_penultimate(t);  // exists for every tree with n >= 3
  const RootedTree rt = root_at(t, root);

  DominationCertificate cert;
  cert.method = "alg2";
  cert.root = root;

  std::vector<Rational> value, weight;
  value.reserve(n);
  weight.reserve(n);
  for (int v = 0; v < n; ++v) {
    value.emplace_back(t.degree(v) - 1);
    weight.emplace_back(cls.kind[v] == VertexKind::penultimate ? threshold : Rational(0));
  }
  std::vector<char> detached(n, 0), dominated(n, 0);

  for (int v : rt.bottom_up_order()) {
    const auto& kids = rt.children(v);
    if (kids.empty()) continue;  // leaves hold weight 0 and push nothing

    DecisionRecord rec;
    rec.vertex = v;

    int zero_child = -1;
    for (int c : kids) {
      if (!detached[c] && value[c] == 0) {
        zero_child = c;  // kids ascend, so the first hit is the smallest id
        break;
      }
    }
    if (zero_child >= 0) {
      value[v] = Rational(-1, 2);
      value[zero_child] = 2;
      weight[v] += 1;
      if (v != rt.root()) detached[v] = 1;
      rec.zero_branch = true;
      rec.chosen_child = zero_child;
    } else {
      for (int c : kids) {
        if (detached[c]) continue;
        value[v] -= 1 / value[c];
      }
    }
    rec.weight = weight[v];
    rec.value = value[v];

    bool needy_child = false;
    for (int c : kids) needy_child |= !dominated[c];
    if (needy_child && (weight[v] >= threshold || (value[v] == 0 && weight[v] >= 1))) {
      rec.joined = true;
      cert.members.push_back(v);
      dominated[v] = 1;
      if (rt.parent(v) >= 0) dominated[rt.parent(v)] = 1;
      for (int c : kids) dominated[c] = 1;
    }

    rec.pushed = rec.joined ? weight[v] - 1 : weight[v];
    if (v == rt.root())
      cert.root_residual = rec.pushed;
    else
      weight[rt.parent(v)] += rec.pushed;  // original parent, detached or not
    cert.trace.push_back(std::move(rec));
  }

  std::sort(cert.members.begin(), cert.members.end());
  return cert;
}

Rational eps_for_degree(int k) {
  if (k < 3) throw BadParameterError("degree threshold must be at least 3, got " + std::to_string(k));
  return Rational(1, (k - 2) * (k + 1));
}

DominationCertificate eps_threshold_dominating(const Tree& t, int k,
                                               std::optional<Rational> eps_override) {
  const int n = t.vertex_count();
  if (n <= 2) return trivial_small_tree("alg3");

  Rational eps;
  if (eps_override) {
    if (*eps_override != 1)
      throw BadParameterError("eps override only supports the value 1, got " +
                              fraction_string(*eps_override));
    if (const auto bad = adjacent_degree2_witnesses(t); !bad.empty())
      throw PreconditionError("tree has adjacent degree-2 vertices: " + join_ids(bad));
    eps = 1;
  } else {
    eps = eps_for_degree(k);
    if (const auto bad = low_degree_deep_witnesses(t, k); !bad.empty())
      throw PreconditionError("deep vertices with degree below " + std::to_string(k) + ": " +
                              join_ids(bad));
  }

  const Rational threshold = 1 + eps;
  const auto cls = classify(t);
  const int root = *smallest_penultimate(t);
  const RootedTree rt = root_at(t, root);

  DominationCertificate cert;
  cert.method = "alg3";
  cert.root = root;

  std::vector<Rational> weight;
  weight.reserve(n);
  for (int v = 0; v < n; ++v)
    weight.emplace_back(cls.kind[v] == VertexKind::penultimate ? threshold : Rational(0));

  for (int v : rt.bottom_up_order()) {
    if (rt.children(v).empty()) continue;

    DecisionRecord rec;
    rec.vertex = v;
    rec.weight = weight[v];
    rec.joined = weight[v] >= threshold;
    if (rec.joined) cert.members.push_back(v);
    rec.pushed = rec.joined ? weight[v] - 1 : weight[v];
    if (v == rt.root())
      cert.root_residual = rec.pushed;
    else
      weight[rt.parent(v)] += rec.pushed;
    cert.trace.push_back(std::move(rec));
  }

  std::sort(cert.members.begin(), cert.members.end());
  return cert;
}

}  // namespace treelap
