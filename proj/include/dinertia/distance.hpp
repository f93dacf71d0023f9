#pragma once

#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "dinertia/graph.hpp"
#include "dinertia/matrix.hpp"

namespace dinertia {

/// Symmetric hollow matrix of exact shortest-path distances (row i is vertex
/// i+1). All arithmetic is rational; sign statements about the spectrum are
/// only trustworthy because ties resolve exactly.
using DistanceMatrix = RationalMatrix;

class DisconnectedError : public std::runtime_error {
 public:
  DisconnectedError() : std::runtime_error("graph is disconnected") {}
};

/// Exact single-source shortest paths. Settles vertices in (distance, label)
/// order so traversal is deterministic. Result is indexed 1..n.
inline std::vector<Rational> distances_from(
    const std::vector<std::vector<std::pair<int, Rational>>>& adj, int n,
    int source) {
  std::vector<Rational> dist(n + 1);
  std::vector<char> known(n + 1, 0);
  std::set<std::pair<Rational, int>> frontier;
  dist[source] = 0;
  frontier.insert({Rational(0), source});
  known[source] = 1;
  int settled = 0;
  while (!frontier.empty()) {
    auto [d, u] = *frontier.begin();
    frontier.erase(frontier.begin());
    ++settled;
    for (const auto& [v, w] : adj[u]) {
      const Rational cand = d + w;
      if (!known[v]) {
        known[v] = 1;
        dist[v] = cand;
        frontier.insert({cand, v});
      } else if (cand < dist[v]) {
        frontier.erase({dist[v], v});
        dist[v] = cand;
        frontier.insert({cand, v});
      }
    }
  }
  if (settled != n) throw DisconnectedError();
  return dist;
}

inline std::vector<Rational> distances_from(const WeightedGraph& g,
                                            int source) {
  return distances_from(g.adjacency(), g.n, source);
}

/// All-pairs exact shortest-path distances, one relaxation pass per source.
inline DistanceMatrix distance_matrix(const WeightedGraph& g) {
  auto adj = g.adjacency();
  DistanceMatrix d(g.n);
  for (int s = 1; s <= g.n; ++s) {
    auto row = distances_from(adj, g.n, s);
    for (int t = 1; t <= g.n; ++t) d(s - 1, t - 1) = row[t];
  }
  return d;
}

/// Entrywise exact scaling by c > 0; preserves inertia.
inline DistanceMatrix scale_matrix(const DistanceMatrix& d, const Rational& c) {
  if (c <= 0) throw std::invalid_argument("scale factor must be positive");
  DistanceMatrix out(d.size());
  for (std::size_t i = 0; i < d.size(); ++i)
    for (std::size_t j = 0; j < d.size(); ++j) out(i, j) = d(i, j) * c;
  return out;
}

}  // namespace dinertia
