#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace hypernim {

/// A set of vertex indices in 0..n-1 of an enclosing hypergraph or game,
/// stored as a 64-bit mask. Everything in this library runs at desk scale;
/// kMaxVertices guards the fixed width.
class VertexSet {
 public:
  static constexpr int kMaxVertices = 64;

  constexpr VertexSet() = default;

  static constexpr VertexSet from_bits(std::uint64_t bits) {
    VertexSet s;
    s.bits_ = bits;
    return s;
  }

  static VertexSet single(int v);

  /// {0, 1, ..., n-1}
  static VertexSet full(int n);

  /// Builds from arbitrary vertex indices (order irrelevant). Throws on
  /// indices outside [0, kMaxVertices) and on repeated vertices.
  static VertexSet from_vertices(const std::vector<int>& vertices);

  constexpr std::uint64_t bits() const { return bits_; }
  bool contains(int v) const { return ((bits_ >> v) & 1ULL) != 0; }
  int size() const;
  bool empty() const { return bits_ == 0; }

  bool intersects(VertexSet o) const { return (bits_ & o.bits_) != 0; }
  bool subset_of(VertexSet o) const { return (bits_ & ~o.bits_) == 0; }

  VertexSet& insert(int v) {
    bits_ |= (1ULL << v);
    return *this;
  }

  friend VertexSet operator|(VertexSet a, VertexSet b) {
    return from_bits(a.bits_ | b.bits_);
  }
  friend VertexSet operator&(VertexSet a, VertexSet b) {
    return from_bits(a.bits_ & b.bits_);
  }
  /// Set difference a \ b.
  friend VertexSet operator-(VertexSet a, VertexSet b) {
    return from_bits(a.bits_ & ~b.bits_);
  }
  friend bool operator==(VertexSet a, VertexSet b) { return a.bits_ == b.bits_; }
  friend bool operator!=(VertexSet a, VertexSet b) { return a.bits_ != b.bits_; }

  /// Members in ascending order.
  std::vector<int> vertices() const;

  std::string to_string() const;

 private:
  std::uint64_t bits_ = 0;
};

/// Canonical edge order used everywhere: by size, then by members compared
/// lexicographically as ascending vertex lists. For equal sizes the list
/// comparison reduces to: the set containing the smallest non-shared vertex
/// comes first.
bool canonical_less(VertexSet a, VertexSet b);

/// Finite hypergraph over vertices 0..n-1. Edges are nonempty, pairwise
/// distinct, and kept sorted in canonical order. Immutable after
/// construction and safe to share across threads.
class Hypergraph {
 public:
  Hypergraph() = default;

  /// Validates and canonicalizes. Throws std::invalid_argument on an empty
  /// edge, an out-of-range vertex, or duplicate edges.
  Hypergraph(int n, std::vector<VertexSet> edges);

  static Hypergraph from_vertex_lists(int n,
                                      const std::vector<std::vector<int>>& edges);

  int vertex_count() const { return n_; }
  const std::vector<VertexSet>& edges() const { return edges_; }
  std::size_t edge_count() const { return edges_.size(); }
  bool has_edge(VertexSet e) const;

  friend bool operator==(const Hypergraph& a, const Hypergraph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  int n_ = 0;
  std::vector<VertexSet> edges_;
};

/// A NIM_H position (also reused as a packing capacity vector): per-pile
/// nonnegative stone counts, one entry per vertex.
using Position = std::vector<int>;

/// supp(x) = {i | x_i > 0}.
VertexSet support(const Position& x);

/// x >= chi(H), i.e. H ⊆ supp(x): every pile of H has a stone to take.
bool covers(const Position& x, VertexSet h);

/// x - chi(H). Caller must ensure covers(x, h).
Position minus_chi(const Position& x, VertexSet h);

/// Decrease every coordinate of H by exactly one. Throws "illegal move"
/// unless H ⊆ supp(x).
Position slow_move(const Position& x, VertexSet h);

/// Decrease every coordinate of H to zero. Throws "illegal move" unless
/// H ⊆ supp(x).
Position fast_move(const Position& x, VertexSet h);

/// Subhypergraph induced by s: the edges entirely inside s, over the same
/// vertex count.
Hypergraph induced(const Hypergraph& h, VertexSet s);

/// Size of the largest edge. Throws std::domain_error("undefined dimension")
/// on a hypergraph with no edges.
int dimension(const Hypergraph& h);

/// True iff every pair of edges (including a pair of equal ones) meets.
bool is_intersecting(const Hypergraph& h);

/// An edge meeting every edge of h (first in canonical order), if any.
std::optional<VertexSet> has_transversal_edge(const Hypergraph& h);

/// Verdict of the induced-transversal condition sweep.
struct ConditionResult {
  bool pass = true;
  /// On FAIL: a violating S of minimum cardinality (ties broken by
  /// canonical order), whose induced family is nonempty yet has no edge
  /// meeting all of its edges.
  std::optional<VertexSet> violating;
};

/// Checks, for every S ⊆ V with a nonempty induced family, that some edge of
/// the induced family meets all of its edges.
///
/// The sweep is inherently exponential. Candidates are restricted to unions
/// of edge subfamilies, enumerated as the union-closure of the edge set:
/// replacing S by the union of its induced family leaves that family
/// unchanged, and any minimum-cardinality violating S equals that union, so
/// the restriction loses nothing. Closure size is at most 2^n; a guard
/// rejects sweeps beyond ~4M candidate sets.
ConditionResult intersection_condition(const Hypergraph& h);

/// Fast path for dim <= 2 hypergraphs that contain at least one size-2 edge:
/// there the condition sweep collapses to the existence of a single
/// transversal edge. Throws std::invalid_argument("dim2 fast path
/// inapplicable") outside that precondition domain.
bool dim2_condition(const Hypergraph& h);

/// All subsets of size 1..k over n vertices.
Hypergraph moore_hypergraph(int n, int k);

/// All subsets of size exactly k over n vertices.
Hypergraph exact_hypergraph(int n, int k);

/// Edge family of the combination game: over the disjoint union of the inner
/// vertex sets (block i offset by the prefix sum of inner sizes), one edge
/// per choice of an outer edge H and one inner edge per block of H, equal to
/// the union of the chosen inner edges. Deduplicated. Throws on outer vertex
/// count != inner list length.
Hypergraph combine_hypergraphs(const Hypergraph& outer,
                               const std::vector<Hypergraph>& inner);

/// The 9-vertex example hypergraph served by the `fig1` CLI subcommand:
/// triples T_i = {i, i+1, i+2} and quadruples F_i = {i, i+1, i+4, i+6},
/// indices mod 9. It passes intersection_condition but is not Tetris.
Hypergraph fig1_hypergraph();

}  // namespace hypernim
