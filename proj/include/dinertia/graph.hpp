#pragma once

#include <algorithm>
#include <deque>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "dinertia/rational.hpp"

namespace dinertia {

/// Undirected edge; stored with u < v.
struct Edge {
  int u = 0;
  int v = 0;
  Rational w;

  bool operator==(const Edge&) const = default;
};

/// Simple undirected edge-weighted graph, vertices labeled 1..n.
/// A plain value: invariants (simplicity, positive weights, connectivity)
/// are established by parse_graph and checked by validate, so that malformed
/// graphs can be represented and reported on rather than being unconstructible.
struct WeightedGraph {
  int n = 0;
  std::vector<Edge> edges;

  /// Neighbor lists indexed 1..n, each sorted by neighbor label.
  std::vector<std::vector<std::pair<int, Rational>>> adjacency() const {
    std::vector<std::vector<std::pair<int, Rational>>> adj(n + 1);
    for (const Edge& e : edges) {
      if (e.u >= 1 && e.u <= n && e.v >= 1 && e.v <= n && e.u != e.v) {
        adj[e.u].emplace_back(e.v, e.w);
        adj[e.v].emplace_back(e.u, e.w);
      }
    }
    for (auto& nbrs : adj) std::sort(nbrs.begin(), nbrs.end());
    return adj;
  }

  std::optional<Rational> edge_weight(int u, int v) const {
    if (u > v) std::swap(u, v);
    for (const Edge& e : edges)
      if (e.u == u && e.v == v) return e.w;
    return std::nullopt;
  }

  bool operator==(const WeightedGraph&) const = default;
};

struct ValidationReport {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

enum class GraphKind { Tree, Unicyclic, Other };

struct StructureClass {
  GraphKind kind = GraphKind::Other;
  std::vector<int> cycle_vertices;  // cyclic order; empty unless Unicyclic
  int cycle_length = 0;             // 0 unless Unicyclic
  int pendant_count = 0;            // n - cycle_length for Unicyclic, else 0
};

inline Edge make_edge(int u, int v, Rational w) {
  if (u > v) std::swap(u, v);
  return Edge{u, v, std::move(w)};
}

namespace detail {
inline void sort_edges(std::vector<Edge>& edges) {
  std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) {
    return std::pair{a.u, a.v} < std::pair{b.u, b.v};
  });
}
}  // namespace detail

/// Graph file format:
///   # comment
///   n <count>
///   e <u> <v> <weight>        weight is <int> or <int>/<int>
/// Throws ParseError (with the offending line number) on syntax errors,
/// nonpositive weights, self-loops, duplicate edges, and out-of-range labels.
inline WeightedGraph parse_graph(const std::string& text) {
  WeightedGraph g;
  bool have_n = false;
  std::set<std::pair<int, int>> seen;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag) || tag[0] == '#') continue;
    if (tag == "n") {
      if (have_n) throw ParseError("duplicate 'n' line", lineno);
      std::string cnt;
      if (!(ls >> cnt) || !detail::is_plain_integer(cnt) || cnt[0] == '-')
        throw ParseError("malformed vertex count", lineno);
      g.n = std::stoi(cnt);
      if (g.n < 1) throw ParseError("vertex count must be positive", lineno);
      have_n = true;
    } else if (tag == "e") {
      if (!have_n) throw ParseError("edge before 'n' line", lineno);
      int u, v;
      std::string wtext;
      if (!(ls >> u >> v >> wtext))
        throw ParseError("malformed edge line", lineno);
      std::string extra;
      if (ls >> extra) throw ParseError("trailing tokens on edge line", lineno);
      if (u < 1 || u > g.n || v < 1 || v > g.n)
        throw ParseError("vertex index out of range", lineno);
      if (u == v) throw ParseError("self-loop", lineno);
      Rational w;
      try {
        w = parse_rational(wtext);
      } catch (const ParseError& e) {
        throw ParseError(e.what(), lineno);
      }
      if (w <= 0) throw ParseError("nonpositive weight", lineno);
      auto key = std::minmax(u, v);
      if (!seen.insert({key.first, key.second}).second)
        throw ParseError("duplicate edge", lineno);
      g.edges.push_back(make_edge(u, v, std::move(w)));
    } else {
      throw ParseError("unknown line tag '" + tag + "'", lineno);
    }
  }
  if (!have_n) throw ParseError("missing 'n' line", lineno);
  detail::sort_edges(g.edges);
  return g;
}

/// Emits edges sorted by (min endpoint, max endpoint); exact inverse of
/// parse_graph on admissible graphs.
inline std::string serialize_graph(const WeightedGraph& g) {
  std::vector<Edge> edges = g.edges;
  detail::sort_edges(edges);
  std::ostringstream out;
  out << "n " << g.n << "\n";
  for (const Edge& e : edges)
    out << "e " << e.u << " " << e.v << " " << to_string(e.w) << "\n";
  return out.str();
}

/// Lists every admissibility violation; an empty report means the graph is a
/// simple connected positively weighted graph.
inline ValidationReport validate(const WeightedGraph& g) {
  ValidationReport rep;
  if (g.n < 1) {
    rep.violations.push_back("empty vertex set");
    return rep;
  }
  std::set<std::pair<int, int>> seen;
  for (const Edge& e : g.edges) {
    if (e.u < 1 || e.u > g.n || e.v < 1 || e.v > g.n) {
      rep.violations.push_back("vertex index out of range");
      continue;
    }
    if (e.u == e.v) rep.violations.push_back("self-loop");
    if (e.w <= 0) rep.violations.push_back("nonpositive weight");
    auto key = std::minmax(e.u, e.v);
    if (!seen.insert({key.first, key.second}).second)
      rep.violations.push_back("duplicate edge");
  }
  // connectivity by BFS from vertex 1
  std::vector<char> reached(g.n + 1, 0);
  std::deque<int> queue{1};
  reached[1] = 1;
  auto adj = g.adjacency();
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop_front();
    for (auto& [v, w] : adj[u])
      if (!reached[v]) {
        reached[v] = 1;
        queue.push_back(v);
      }
  }
  for (int v = 1; v <= g.n; ++v)
    if (!reached[v]) {
      rep.violations.push_back("disconnected");
      break;
    }
  return rep;
}

/// Tree iff |E| = n-1, Unicyclic iff |E| = n (the unique cycle is found by
/// peeling degree-1 vertices; the residual is the cycle). Assumes a validated
/// (connected, simple) graph.
inline StructureClass classify_structure(const WeightedGraph& g) {
  StructureClass sc;
  const int m = static_cast<int>(g.edges.size());
  if (m == g.n - 1) {
    sc.kind = GraphKind::Tree;
    return sc;
  }
  if (m != g.n) {
    sc.kind = GraphKind::Other;
    return sc;
  }
  sc.kind = GraphKind::Unicyclic;
  auto adj = g.adjacency();
  std::vector<int> degree(g.n + 1, 0);
  for (int v = 1; v <= g.n; ++v) degree[v] = static_cast<int>(adj[v].size());
  std::deque<int> leaves;
  for (int v = 1; v <= g.n; ++v)
    if (degree[v] == 1) leaves.push_back(v);
  std::vector<char> removed(g.n + 1, 0);
  while (!leaves.empty()) {
    int v = leaves.front();
    leaves.pop_front();
    removed[v] = 1;
    for (auto& [u, w] : adj[v])
      if (!removed[u] && --degree[u] == 1) leaves.push_back(u);
  }
  int start = 0;
  for (int v = 1; v <= g.n; ++v)
    if (!removed[v]) {
      start = v;
      break;
    }
  // walk the residual cycle, ties broken toward the smaller neighbor label
  std::vector<int> cycle{start};
  std::vector<char> used(g.n + 1, 0);
  used[start] = 1;
  int cur = start;
  while (true) {
    int next = 0;
    for (auto& [u, w] : adj[cur])
      if (!removed[u] && !used[u]) {
        next = u;
        break;
      }
    if (next == 0) break;
    cycle.push_back(next);
    used[next] = 1;
    cur = next;
  }
  sc.cycle_vertices = std::move(cycle);
  sc.cycle_length = static_cast<int>(sc.cycle_vertices.size());
  sc.pendant_count = g.n - sc.cycle_length;
  return sc;
}

/// Replaces edge (u,v) by the path u - (n+1) - v with weights w1, w2.
/// Requires w1 + w2 to equal the existing weight exactly.
inline WeightedGraph subdivide_edge(const WeightedGraph& g, int u, int v,
                                    const Rational& w1, const Rational& w2) {
  auto w = g.edge_weight(u, v);
  if (!w) throw std::invalid_argument("subdivide_edge: edge absent");
  if (w1 <= 0 || w2 <= 0)
    throw std::invalid_argument("subdivide_edge: split weights must be positive");
  if (w1 + w2 != *w)
    throw std::invalid_argument(
        "subdivide_edge: split weights do not sum to the edge weight");
  WeightedGraph out;
  out.n = g.n + 1;
  for (const Edge& e : g.edges)
    if (!(e.u == std::min(u, v) && e.v == std::max(u, v)))
      out.edges.push_back(e);
  out.edges.push_back(make_edge(u, out.n, w1));
  out.edges.push_back(make_edge(out.n, v, w2));
  detail::sort_edges(out.edges);
  return out;
}

}  // namespace dinertia
