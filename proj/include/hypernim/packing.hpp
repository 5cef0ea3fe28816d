#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "hypernim/hypergraph.hpp"

namespace hypernim {

/// Per-edge multiplicities, parallel to Hypergraph::edges() (canonical
/// order). Feasible for capacity x when Σ mult[e]·chi(edge e) <= x.
struct MultiplicityVector {
  std::vector<int> mult;
};

struct PackingResult {
  int value = 0;
  MultiplicityVector witness;
};

/// Exact maximum integer edge packing: max Σ_H m_H subject to
/// Σ_H m_H chi(H) <= x, m >= 0 integral.
///
/// Depth-first branch and bound over the edges in canonical order, branching
/// on each edge's multiplicity from its residual cap min_{i in H} x_i
/// downward, with the admissible bound floor(Σ residual / smallest remaining
/// edge size) for early exit, memoized on (edge index, residual capacities
/// restricted to the vertices the remaining edges touch). The problem is
/// NP-hard in general; this is exact at desk scale.
///
/// The memo is shared across calls, so sweeping many positions of one
/// hypergraph through a single solver is much cheaper than fresh calls.
class PackingSolver {
 public:
  explicit PackingSolver(Hypergraph h);

  const Hypergraph& hypergraph() const { return h_; }

  /// Maximum packing value for capacity vector x (length = vertex count).
  int value(const Position& x);

  /// Value plus an attaining witness: the lexicographically greatest optimal
  /// multiplicity vector in canonical edge order (the first optimum the
  /// plain cap-downward DFS reaches), so results are reproducible and match
  /// any parallel schedule that reports the sequential canonical answer.
  PackingResult solve(const Position& x);

 private:
  struct VecHash {
    std::size_t operator()(const std::vector<int>& v) const;
  };

  int best(std::size_t idx, const Position& residual);
  Position project(std::size_t idx, const Position& residual) const;

  Hypergraph h_;
  std::vector<VertexSet> suffix_union_;  // union of edges[idx..]
  std::vector<int> suffix_min_size_;     // smallest |edge| among edges[idx..]
  std::unordered_map<std::vector<int>, int, VecHash> memo_;  // key ends with idx
};

PackingResult max_packing(const Hypergraph& h, const Position& x);

/// Maximum number of pairwise disjoint edges = packing value at all-ones.
int matching_number(const Hypergraph& h);

/// Edges of the family induced by supp(x) that meet every edge of that
/// family, in canonical order.
std::vector<VertexSet> x_all(const Hypergraph& h, const Position& x);

/// Edges taking positive multiplicity in at least one optimal packing of x,
/// in canonical order. Computed by per-edge forcing: whenever x >= chi(H)
/// the packing value drops by at least 1 from x to x - chi(H) (adding one
/// copy of H to an optimum of x - chi(H) is feasible for x), so H is usable
/// in an optimum iff value(x - chi(H)) + 1 == value(x). The equivalence with
/// enumerating all optimal multiplicity vectors is property-tested on small
/// instances.
std::vector<VertexSet> x_pack(const Hypergraph& h, const Position& x);

}  // namespace hypernim
