#pragma once

#include <algorithm>
#include <deque>
#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "dinertia/distance.hpp"
#include "dinertia/graph.hpp"
#include "dinertia/matrix.hpp"

namespace dinertia {

/// One elementary congruence M -> A M A^T with A = I - E(target, source):
/// subtract row `source` from row `target`, then the same for columns.
/// Indices are 1-based row/column numbers.
struct ElementaryStep {
  int target = 0;
  int source = 0;

  bool operator==(const ElementaryStep&) const = default;
};

/// Result of a pendant-elimination reduction. The matrix it encodes has a
/// zero (1,1) entry, first row/column equal to `border`, diagonal -2*border,
/// and zeros elsewhere -- except for the triangle-unicyclic case, where the
/// (2,3)/(3,2) entries hold the coupling z = d23 - d12 - d13.
struct NormalForm {
  std::vector<Rational> border;
  std::optional<Rational> coupling;

  std::size_t dimension() const { return border.size() + 1; }

  bool operator==(const NormalForm&) const = default;
};

/// Replayable record of a reduction: the vertex ordering used to permute the
/// input, the elementary steps in application order, and the exact result.
struct CongruenceTrace {
  std::vector<int> ordering;
  std::vector<ElementaryStep> steps;
  RationalMatrix result;
};

class ReductionError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

namespace detail {
inline void apply_step_inplace(RationalMatrix& m, const ElementaryStep& s) {
  const std::size_t n = m.size();
  if (s.target < 1 || s.source < 1 || s.target > static_cast<int>(n) ||
      s.source > static_cast<int>(n))
    throw std::invalid_argument("congruence step index out of range");
  if (s.target == s.source)
    throw std::invalid_argument("congruence step with target == source");
  const std::size_t i = static_cast<std::size_t>(s.target) - 1;
  const std::size_t j = static_cast<std::size_t>(s.source) - 1;
  for (std::size_t k = 0; k < n; ++k) m(i, k) -= m(j, k);
  for (std::size_t k = 0; k < n; ++k) m(k, i) -= m(k, j);
}
}  // namespace detail

/// A_{ij} M A_{ij}^T, exactly. The result is congruent to M and symmetric
/// whenever M is.
inline RationalMatrix elementary_congruence(const RationalMatrix& m,
                                            const ElementaryStep& step) {
  RationalMatrix out = m;
  detail::apply_step_inplace(out, step);
  return out;
}

/// Replays every step of `trace` on `m` in order. Total for any symmetric
/// matrix of the right size; used to verify reductions bit-exactly.
inline RationalMatrix apply_trace(const RationalMatrix& m,
                                  const CongruenceTrace& trace) {
  if (!trace.ordering.empty() && trace.ordering.size() != m.size())
    throw std::invalid_argument("trace dimension mismatch");
  RationalMatrix out = m;
  for (const ElementaryStep& s : trace.steps) detail::apply_step_inplace(out, s);
  return out;
}

/// Pendant-elimination ordering: root first (for the triangle case the other
/// two cycle vertices take positions 2 and 3), remaining vertices in
/// non-decreasing unweighted distance from the root, ties by label. `parent`
/// maps every non-root vertex to its unique neighbor nearer the root.
struct EliminationOrdering {
  std::vector<int> ordering;
  std::map<int, int> parent;
  std::map<int, int> depth;  // unweighted BFS distance from the root
};

inline EliminationOrdering elimination_ordering(const WeightedGraph& g,
                                                int root) {
  if (root < 1 || root > g.n)
    throw std::invalid_argument("root out of range");
  const StructureClass sc = classify_structure(g);
  if (sc.kind == GraphKind::Other)
    throw std::invalid_argument(
        "graph must be a tree or unicyclic with a 3-cycle");
  std::vector<int> cycle2;  // the two non-root cycle vertices, ascending
  if (sc.kind == GraphKind::Unicyclic) {
    if (sc.cycle_length != 3)
      throw std::invalid_argument("cycle is not a triangle");
    bool on_cycle = false;
    for (int v : sc.cycle_vertices) {
      if (v == root)
        on_cycle = true;
      else
        cycle2.push_back(v);
    }
    if (!on_cycle)
      throw std::invalid_argument("root must lie on the cycle");
    std::sort(cycle2.begin(), cycle2.end());
  }

  EliminationOrdering out;
  auto adj = g.adjacency();
  out.depth[root] = 0;
  std::deque<int> queue{root};
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop_front();
    for (auto& [v, w] : adj[u])
      if (!out.depth.count(v)) {
        out.depth[v] = out.depth[u] + 1;
        out.parent[v] = u;
        queue.push_back(v);
      }
  }
  if (out.depth.size() != static_cast<std::size_t>(g.n))
    throw std::invalid_argument("graph is disconnected");
  // Both non-root cycle vertices hang directly off the root.
  for (int v : cycle2) out.parent[v] = root;

  out.ordering.push_back(root);
  for (int v : cycle2) out.ordering.push_back(v);
  std::vector<int> rest;
  for (int v = 1; v <= g.n; ++v)
    if (v != root && std::find(cycle2.begin(), cycle2.end(), v) == cycle2.end())
      rest.push_back(v);
  std::sort(rest.begin(), rest.end(), [&](int a, int b) {
    return std::pair{out.depth.at(a), a} < std::pair{out.depth.at(b), b};
  });
  out.ordering.insert(out.ordering.end(), rest.begin(), rest.end());
  return out;
}

namespace detail {

/// Shared reduction engine. Eliminates in from the pendants: deepest BFS
/// layer first, ascending vertex label within a layer, each step subtracting
/// the parent's row/column. For the triangle case the two non-root cycle
/// vertices are treated as pendants of the root in the final layer, which is
/// what leaves the coupling z in the (2,3) entry.
inline std::pair<NormalForm, CongruenceTrace> reduce_impl(
    const DistanceMatrix& d, const EliminationOrdering& ord, bool triangle) {
  const std::size_t n = d.size();
  if (ord.ordering.size() != n)
    throw std::invalid_argument("ordering size does not match matrix");
  if (!is_symmetric(d))
    throw std::invalid_argument("matrix is not symmetric");

  std::map<int, int> position;  // vertex label -> 1-based position
  for (std::size_t i = 0; i < n; ++i) position[ord.ordering[i]] = int(i) + 1;

  CongruenceTrace trace;
  trace.ordering = ord.ordering;
  RationalMatrix m = permute_symmetric(d, ord.ordering);

  int max_depth = 0;
  for (auto& [v, dep] : ord.depth) max_depth = std::max(max_depth, dep);
  for (int layer = max_depth; layer >= 1; --layer) {
    for (int v = 1; v <= static_cast<int>(n); ++v) {
      auto it = ord.depth.find(v);
      if (it == ord.depth.end() || it->second != layer) continue;
      ElementaryStep s{position.at(v), position.at(ord.parent.at(v))};
      apply_step_inplace(m, s);
      trace.steps.push_back(s);
    }
  }

  NormalForm nf;
  for (std::size_t i = 1; i < n; ++i) nf.border.push_back(m(0, i));
  if (triangle && n >= 3) nf.coupling = m(1, 2);

  // The eliminated rows must have zeroed out exactly; anything else means the
  // input was not the distance matrix of the given tree / 3-cycle graph.
  if (m(0, 0) != 0) throw ReductionError("corner entry is nonzero");
  for (std::size_t i = 1; i < n; ++i) {
    if (nf.border[i - 1] <= 0)
      throw ReductionError("border entry is not positive");
    if (m(i, i) != -2 * nf.border[i - 1])
      throw ReductionError("diagonal entry does not match border");
    if (m(i, 0) != m(0, i)) throw ReductionError("result not symmetric");
    for (std::size_t j = i + 1; j < n; ++j) {
      const bool coupling_slot = triangle && i == 1 && j == 2;
      if (!coupling_slot && m(i, j) != 0)
        throw ReductionError("eliminated row failed to zero out");
      if (m(i, j) != m(j, i)) throw ReductionError("result not symmetric");
    }
  }
  if (triangle && n >= 3 && *nf.coupling != d(ord.ordering[1] - 1, ord.ordering[2] - 1) -
                                d(ord.ordering[0] - 1, ord.ordering[1] - 1) -
                                d(ord.ordering[0] - 1, ord.ordering[2] - 1))
    throw ReductionError("coupling does not match d23 - d12 - d13");

  trace.result = std::move(m);
  return {std::move(nf), std::move(trace)};
}

}  // namespace detail

/// Reduces the distance matrix of a weighted tree to the arrowhead normal
/// form. Border entry i is the weight of the edge joining the (i+1)-th
/// ordered vertex to its parent.
inline std::pair<NormalForm, CongruenceTrace> reduce_tree(
    const DistanceMatrix& d, const EliminationOrdering& ord) {
  return detail::reduce_impl(d, ord, /*triangle=*/false);
}

/// Reduces the distance matrix of a unicyclic graph whose cycle is a triangle
/// (cycle vertices occupy ordering positions 1..3). The normal form carries
/// the coupling z = D(2,3) - D(1,2) - D(1,3) computed from shortest-path
/// distances; a redundant direct edge between the second and third cycle
/// vertices makes z exactly 0 and the form degenerates to the tree shape.
inline std::pair<NormalForm, CongruenceTrace> reduce_unicyclic3(
    const DistanceMatrix& d, const EliminationOrdering& ord) {
  if (d.size() < 3)
    throw std::invalid_argument("triangle reduction needs at least 3 vertices");
  return detail::reduce_impl(d, ord, /*triangle=*/true);
}

/// Materializes the matrix a NormalForm encodes.
inline RationalMatrix materialize(const NormalForm& nf) {
  const std::size_t n = nf.dimension();
  RationalMatrix m(n);
  for (std::size_t i = 1; i < n; ++i) {
    m(0, i) = nf.border[i - 1];
    m(i, 0) = nf.border[i - 1];
    m(i, i) = -2 * nf.border[i - 1];
  }
  if (nf.coupling && n >= 3) {
    m(1, 2) = *nf.coupling;
    m(2, 1) = *nf.coupling;
  }
  return m;
}

}  // namespace dinertia
