#include "treelap/inertia.hpp"

#include <algorithm>

namespace treelap {

DiagonalizationResult diagonalize(const RootedTree& rt, const Rational& alpha, ZeroChildRule rule,
                                  SplitMix64* rng) {
  const Tree& t = rt.tree();
  const int n = t.vertex_count();

  DiagonalizationResult r;
  r.value.reserve(n);
  for (int v = 0; v < n; ++v) r.value.emplace_back(t.degree(v) + alpha);

  // A detached vertex was consumed by the zero-child rule; its former parent
  // must not absorb it. Only the value recurrence looks at this flag.
  std::vector<char> detached(n, 0);
  std::vector<int> zero_children;

  for (int v : rt.bottom_up_order()) {
    const auto& kids = rt.children(v);
    if (kids.empty()) continue;  // keeps its initial d(v) + alpha

    zero_children.clear();
    for (int c : kids) {
      if (detached[c]) continue;
      if (r.value[c] == 0) zero_children.push_back(c);
    }

    if (zero_children.empty()) {
      Rational& fv = r.value[v];
      for (int c : kids) {
        if (detached[c]) continue;
        fv -= 1 / r.value[c];
      }
      continue;
    }

    // zero_children is ascending (children lists are sorted).
    const int j = rule == ZeroChildRule::smallest_id || zero_children.size() == 1
                      ? zero_children.front()
                      : zero_children[rng->below(zero_children.size())];
    r.value[v] = Rational(-1, 2);
    r.value[j] = 2;
    r.zero_child_choices.emplace_back(v, j);
    if (v != rt.root()) {
      detached[v] = 1;
      r.removed_edges.emplace_back(v, rt.parent(v));
    }
  }

  for (const Rational& f : r.value) {
    const int s = sgn(f);
    if (s < 0)
      ++r.counts.negative;
    else if (s > 0)
      ++r.counts.positive;
    else
      ++r.counts.zero;
  }
  return r;
}

namespace {

// One probe: inertia of L(T) + (-beta) I, reusing a fixed rooting.
InertiaCounts inertia_at(const RootedTree& rt, const Rational& beta) {
  return diagonalize(rt, -beta).counts;
}

}  // namespace

int count_below(const Tree& t, const Rational& beta) {
  return inertia_at(root_at(t, 0), beta).negative;
}

int count_equal(const Tree& t, const Rational& beta) {
  return inertia_at(root_at(t, 0), beta).zero;
}

int mu(const Tree& t) { return count_below(t, 1); }

int nu(const Tree& t) { return t.vertex_count() - count_below(t, 2); }

int count_in_interval(const Tree& t, const Rational& a, const Rational& b, bool closed_left,
                      bool closed_right) {
  if (a > b)
    throw BadParameterError("interval endpoints out of order: " + fraction_string(a) + " > " +
                            fraction_string(b));
  if (a == b && !closed_left && !closed_right)
    throw BadParameterError("empty interval: both endpoints open at " + fraction_string(a));

  const RootedTree rt = root_at(t, 0);
  const auto lo = diagonalize(rt, -a).counts;
  const auto hi = diagonalize(rt, -b).counts;
  // Strictly-inside count plus whichever endpoints are closed.
  int count = hi.negative - lo.negative - lo.zero;
  if (closed_left) count += lo.zero;
  if (closed_right) count += hi.zero;
  return count;
}

std::vector<SpectralInterval> localize_spectrum(const Tree& t, const Rational& tol) {
  if (tol <= 0) throw BadParameterError("tolerance must be positive, got " + fraction_string(tol));

  const int n = t.vertex_count();
  const RootedTree rt = root_at(t, 0);

  // Probes return (strictly below x, exactly at x); each costs one
  // diagonalization. Between recursion levels only the endpoint summaries are
  // carried, so no probe point is ever evaluated twice.
  const auto probe = [&](const Rational& x) {
    const auto c = inertia_at(rt, x);
    return std::pair<int, int>(c.negative, c.zero);
  };

  std::vector<SpectralInterval> found;
  const auto [below0, at0] = probe(Rational(0));
  (void)below0;  // Laplacians are PSD; nothing lies below 0
  if (at0 > 0) found.push_back({Rational(0), Rational(0), at0, true});

  const Rational top(n);
  const auto [below_top, at_top] = probe(top);
  if (at_top > 0) found.push_back({top, top, at_top, true});

  struct Segment {
    Rational lo, hi;
    int below_hi;     // eigenvalues strictly below hi
    int through_lo;   // eigenvalues <= lo
    int inside;       // eigenvalues strictly between lo and hi
  };
  std::vector<Segment> work;
  const int inside0 = below_top - (below0 + at0);
  if (inside0 > 0) work.push_back({Rational(0), top, below_top, below0 + at0, inside0});

  while (!work.empty()) {
    Segment s = std::move(work.back());
    work.pop_back();
    if (s.hi - s.lo <= tol) {
      found.push_back({s.lo, s.hi, s.inside, false});
      continue;
    }
    const Rational mid = (s.lo + s.hi) / 2;  // exact dyadic midpoint
    const auto [below_mid, at_mid] = probe(mid);
    if (at_mid > 0) found.push_back({mid, mid, at_mid, true});
    const int left = below_mid - s.through_lo;
    const int right = s.below_hi - (below_mid + at_mid);
    if (left > 0) work.push_back({s.lo, mid, below_mid, s.through_lo, left});
    if (right > 0) work.push_back({mid, s.hi, s.below_hi, below_mid + at_mid, right});
  }

  std::sort(found.begin(), found.end(),
            [](const SpectralInterval& x, const SpectralInterval& y) {
              if (x.lo != y.lo) return x.lo < y.lo;
              return x.hi < y.hi;
            });
  return found;
}

}  // namespace treelap
