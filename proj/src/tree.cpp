#include "treelap/tree.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace treelap {

Tree Tree::from_edges(int n, std::vector<std::pair<int, int>> edges) {
  if (n < 1) throw BadParameterError("vertex count must be at least 1, got " + std::to_string(n));
  if (static_cast<int>(edges.size()) != n - 1)
    throw NotATreeError("a tree on " + std::to_string(n) + " vertices needs " +
                        std::to_string(n - 1) + " edges, got " + std::to_string(edges.size()));

  for (auto& [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw IdRangeError("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                         ") has an endpoint outside 0.." + std::to_string(n - 1));
    if (u == v) throw NotATreeError("self-loop at vertex " + std::to_string(u));
    if (u > v) std::swap(u, v);
  }
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
    throw NotATreeError("duplicate edge in input");

  Tree t;
  t.n_ = n;
  t.adjacency_.assign(n, {});
  for (auto [u, v] : edges) {
    t.adjacency_[u].push_back(v);
    t.adjacency_[v].push_back(u);
  }
  for (auto& nbrs : t.adjacency_) std::sort(nbrs.begin(), nbrs.end());

  // n-1 edges without duplicates: connected iff acyclic, one BFS settles both.
  std::vector<char> seen(n, 0);
  std::vector<int> queue{0};
  seen[0] = 1;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (int w : t.adjacency_[queue[head]]) {
      if (!seen[w]) {
        seen[w] = 1;
        queue.push_back(w);
      }
    }
  }
  if (static_cast<int>(queue.size()) != n) throw NotATreeError("graph is disconnected");

  t.edges_ = std::move(edges);
  return t;
}

bool Tree::has_edge(int u, int v) const {
  if (u < 0 || u >= n_ || v < 0 || v >= n_) return false;
  const auto& nbrs = adjacency_[u];
  return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

namespace {

// Strips comments and blank lines, returning significant lines.
std::vector<std::string> significant_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream probe(line);
    std::string token;
    if (probe >> token) lines.push_back(line);
  }
  return lines;
}

int parse_int(const std::string& token, const char* what) {
  try {
    std::size_t used = 0;
    const int value = std::stoi(token, &used);
    if (used != token.size()) throw std::invalid_argument(token);
    return value;
  } catch (const std::exception&) {
    throw ParseError(std::string("expected ") + what + ", got '" + token + "'");
  }
}

}  // namespace

Tree parse_tree(const std::string& text) {
  const auto lines = significant_lines(text);
  if (lines.empty()) throw ParseError("empty input: expected a vertex count line");

  std::istringstream header(lines[0]);
  std::string token, extra;
  header >> token;
  if (header >> extra) throw ParseError("vertex count line has trailing tokens: '" + lines[0] + "'");
  const int n = parse_int(token, "vertex count");
  if (n < 1) throw ParseError("vertex count must be at least 1, got " + std::to_string(n));

  if (static_cast<int>(lines.size()) != n)
    throw ParseError("expected " + std::to_string(n - 1) + " edge lines after the count, got " +
                     std::to_string(lines.size() - 1));

  std::vector<std::pair<int, int>> edges;
  edges.reserve(static_cast<std::size_t>(n - 1));
  for (int i = 1; i < n; ++i) {
    std::istringstream edge_line(lines[i]);
    std::string a, b;
    if (!(edge_line >> a >> b)) throw ParseError("edge line needs two endpoints: '" + lines[i] + "'");
    if (edge_line >> extra) throw ParseError("edge line has trailing tokens: '" + lines[i] + "'");
    edges.emplace_back(parse_int(a, "vertex id"), parse_int(b, "vertex id"));
  }
  return Tree::from_edges(n, std::move(edges));
}

Tree load_tree(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_tree(buffer.str());
}

std::string write_tree(const Tree& t) {
  std::ostringstream out;
  out << t.vertex_count() << "\n";
  for (auto [u, v] : t.edges()) out << u << " " << v << "\n";
  return out.str();
}

RootedTree::RootedTree(Tree t, int root) : tree_(std::move(t)), root_(root) {
  const int n = tree_.vertex_count();
  if (root < 0 || root >= n)
    throw IdRangeError("root " + std::to_string(root) + " outside 0.." + std::to_string(n - 1));
  parent_.assign(n, -1);
  children_.assign(n, {});
  depth_.assign(n, 0);
  std::vector<int> bfs{root_};
  std::vector<char> seen(n, 0);
  seen[root_] = 1;
  for (std::size_t head = 0; head < bfs.size(); ++head) {
    const int v = bfs[head];
    for (int w : tree_.neighbors(v)) {  // ascending, so children lists stay sorted
      if (!seen[w]) {
        seen[w] = 1;
        parent_[w] = v;
        depth_[w] = depth_[v] + 1;
        children_[v].push_back(w);
        bfs.push_back(w);
      }
    }
  }
  order_.assign(bfs.rbegin(), bfs.rend());
}

Classification classify(const Tree& t) {
  const int n = t.vertex_count();
  Classification c;
  c.kind.assign(n, VertexKind::deep);
  for (int v = 0; v < n; ++v) {
    if (t.degree(v) == 1) {
      c.kind[v] = VertexKind::leaf;
      ++c.leaf_count;
      continue;
    }
    bool leaf_neighbor = false;
    for (int w : t.neighbors(v)) leaf_neighbor |= t.degree(w) == 1;
    if (leaf_neighbor) {
      c.kind[v] = VertexKind::penultimate;
      ++c.penultimate_count;
    } else {
      ++c.deep_count;
    }
  }
  return c;
}

int penultimate_count(const Tree& t) { return classify(t).penultimate_count; }

std::optional<int> smallest_penultimate(const Tree& t) {
  const auto c = classify(t);
  for (int v = 0; v < t.vertex_count(); ++v)
    if (c.kind[v] == VertexKind::penultimate) return v;
  return std::nullopt;
}

std::optional<CleanPath> find_clean_path(const Tree& t) {
  for (int b = 0; b < t.vertex_count(); ++b) {
    if (t.degree(b) != 2) continue;
    for (int c : t.neighbors(b)) {
      if (c <= b || t.degree(c) != 2) continue;
      // In a tree the pair cannot close a triangle, so a, b, c, d are distinct.
      const auto& nb = t.neighbors(b);
      const auto& nc = t.neighbors(c);
      const int a = nb[0] == c ? nb[1] : nb[0];
      const int d = nc[0] == b ? nc[1] : nc[0];
      return CleanPath{a, b, c, d};
    }
  }
  return std::nullopt;
}

ContractionResult contract_clean_path(const Tree& t, const CleanPath& p) {
  const auto check = [&](bool ok, const std::string& why) {
    if (!ok) throw BadParameterError("invalid clean path: " + why);
  };
  const int n = t.vertex_count();
  const auto in_range = [&](int v) { return v >= 0 && v < n; };
  check(in_range(p.a) && in_range(p.b) && in_range(p.c) && in_range(p.d), "vertex id out of range");
  check(t.has_edge(p.a, p.b) && t.has_edge(p.b, p.c) && t.has_edge(p.c, p.d),
        "vertices do not form a path");
  check(t.degree(p.b) == 2 && t.degree(p.c) == 2, "interior vertices must have degree 2");
  check(p.a != p.d, "endpoints coincide");

  // Survivors keep their relative order; the merged vertex e sorts at the
  // smallest removed id, so downstream ids shift as little as possible.
  const int e_slot = std::min(std::min(p.a, p.b), std::min(p.c, p.d));
  std::vector<char> removed(n, 0);
  removed[p.a] = removed[p.b] = removed[p.c] = removed[p.d] = 1;

  std::vector<int> old_to_new(n, -1);
  int next_id = 0;
  int merged = -1;
  for (int v = 0; v < n; ++v) {
    if (v == e_slot) merged = next_id++;  // e takes this slot
    if (!removed[v]) old_to_new[v] = next_id++;
  }
  old_to_new[p.a] = old_to_new[p.b] = old_to_new[p.c] = old_to_new[p.d] = merged;

  std::vector<std::pair<int, int>> edges;
  edges.reserve(static_cast<std::size_t>(n - 4));
  for (auto [u, v] : t.edges()) {
    const bool ru = removed[u], rv = removed[v];
    if (ru && rv) continue;  // one of the three path edges
    edges.emplace_back(old_to_new[u], old_to_new[v]);
  }
  return ContractionResult{Tree::from_edges(n - 3, std::move(edges)), merged, std::move(old_to_new)};
}

ReductionResult reduce_adjacent_degree2(const Tree& t) {
  ReductionResult r{t, 0, {}};
  while (auto p = find_clean_path(r.tree)) {
    r.contracted.push_back(*p);
    r.tree = contract_clean_path(r.tree, *p).tree;
    ++r.steps;
  }
  return r;
}

std::optional<int> min_deep_degree(const Tree& t) {
  const auto c = classify(t);
  std::optional<int> best;
  for (int v = 0; v < t.vertex_count(); ++v) {
    if (c.kind[v] != VertexKind::deep) continue;
    if (!best || t.degree(v) < *best) best = t.degree(v);
  }
  return best;
}

bool no_adjacent_degree2(const Tree& t) { return !find_clean_path(t).has_value(); }

std::vector<int> adjacent_degree2_witnesses(const Tree& t) {
  std::vector<int> out;
  for (int v = 0; v < t.vertex_count(); ++v) {
    if (t.degree(v) != 2) continue;
    for (int w : t.neighbors(v)) {
      if (t.degree(w) == 2) {
        out.push_back(v);
        break;
      }
    }
  }
  return out;
}

bool min_deep_degree_at_least(const Tree& t, int k) {
  const auto m = min_deep_degree(t);
  return !m || *m >= k;
}

std::vector<int> low_degree_deep_witnesses(const Tree& t, int k) {
  const auto c = classify(t);
  std::vector<int> out;
  for (int v = 0; v < t.vertex_count(); ++v)
    if (c.kind[v] == VertexKind::deep && t.degree(v) < k) out.push_back(v);
  return out;
}

}  // namespace treelap
