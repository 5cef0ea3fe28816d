#include "hypernim/hypergraph.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

namespace hypernim {

VertexSet VertexSet::single(int v) {
  if (v < 0 || v >= kMaxVertices)
    throw std::invalid_argument("vertex index out of range");
  return from_bits(1ULL << v);
}

VertexSet VertexSet::full(int n) {
  if (n < 0 || n > kMaxVertices)
    throw std::invalid_argument("vertex count out of range");
  if (n == kMaxVertices) return from_bits(~0ULL);
  return from_bits((1ULL << n) - 1);
}

VertexSet VertexSet::from_vertices(const std::vector<int>& vertices) {
  VertexSet s;
  for (int v : vertices) {
    if (v < 0 || v >= kMaxVertices)
      throw std::invalid_argument("vertex index out of range");
    if (s.contains(v)) throw std::invalid_argument("repeated vertex in edge");
    s.insert(v);
  }
  return s;
}

int VertexSet::size() const { return std::popcount(bits_); }

std::vector<int> VertexSet::vertices() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(size()));
  std::uint64_t b = bits_;
  while (b != 0) {
    out.push_back(std::countr_zero(b));
    b &= b - 1;
  }
  return out;
}

std::string VertexSet::to_string() const {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (int v : vertices()) {
    if (!first) os << ',';
    os << v;
    first = false;
  }
  os << '}';
  return os.str();
}

bool canonical_less(VertexSet a, VertexSet b) {
  if (a.size() != b.size()) return a.size() < b.size();
  if (a == b) return false;
  // Equal sizes: the member lists first differ at the smallest vertex that
  // is in exactly one of the two sets; the set containing it sorts first.
  std::uint64_t diff = a.bits() ^ b.bits();
  std::uint64_t low = diff & (~diff + 1);
  return (a.bits() & low) != 0;
}

Hypergraph::Hypergraph(int n, std::vector<VertexSet> edges) : n_(n) {
  if (n < 0 || n > VertexSet::kMaxVertices)
    throw std::invalid_argument("vertex count out of range");
  const VertexSet universe = VertexSet::full(n);
  for (VertexSet e : edges) {
    if (e.empty()) throw std::invalid_argument("empty edge");
    if (!e.subset_of(universe))
      throw std::invalid_argument("edge vertex out of range");
  }
  std::sort(edges.begin(), edges.end(), canonical_less);
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
    throw std::invalid_argument("duplicate edge");
  edges_ = std::move(edges);
}

Hypergraph Hypergraph::from_vertex_lists(
    int n, const std::vector<std::vector<int>>& edges) {
  std::vector<VertexSet> sets;
  sets.reserve(edges.size());
  for (const auto& e : edges) sets.push_back(VertexSet::from_vertices(e));
  return Hypergraph(n, std::move(sets));
}

bool Hypergraph::has_edge(VertexSet e) const {
  return std::binary_search(edges_.begin(), edges_.end(), e, canonical_less);
}

VertexSet support(const Position& x) {
  if (x.size() > static_cast<std::size_t>(VertexSet::kMaxVertices))
    throw std::invalid_argument("position too long for vertex mask");
  VertexSet s;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] < 0) throw std::invalid_argument("negative pile");
    if (x[i] > 0) s.insert(static_cast<int>(i));
  }
  return s;
}

bool covers(const Position& x, VertexSet h) { return h.subset_of(support(x)); }

Position minus_chi(const Position& x, VertexSet h) {
  Position y = x;
  for (int v : h.vertices()) --y[static_cast<std::size_t>(v)];
  return y;
}

Position slow_move(const Position& x, VertexSet h) {
  if (!covers(x, h)) throw std::invalid_argument("illegal move");
  return minus_chi(x, h);
}

Position fast_move(const Position& x, VertexSet h) {
  if (!covers(x, h)) throw std::invalid_argument("illegal move");
  Position y = x;
  for (int v : h.vertices()) y[static_cast<std::size_t>(v)] = 0;
  return y;
}

Hypergraph induced(const Hypergraph& h, VertexSet s) {
  std::vector<VertexSet> kept;
  for (VertexSet e : h.edges())
    if (e.subset_of(s)) kept.push_back(e);
  return Hypergraph(h.vertex_count(), std::move(kept));
}

int dimension(const Hypergraph& h) {
  if (h.edges().empty()) throw std::domain_error("undefined dimension");
  int best = 0;
  for (VertexSet e : h.edges()) best = std::max(best, e.size());
  return best;
}

bool is_intersecting(const Hypergraph& h) {
  const auto& es = h.edges();
  for (std::size_t i = 0; i < es.size(); ++i)
    for (std::size_t j = i + 1; j < es.size(); ++j)
      if (!es[i].intersects(es[j])) return false;
  return true;
}

namespace {

// Does some edge of `family` meet every edge of `family`?
std::optional<VertexSet> transversal_of(const std::vector<VertexSet>& family) {
  for (VertexSet cand : family) {
    bool meets_all = true;
    for (VertexSet other : family) {
      if (!cand.intersects(other)) {
        meets_all = false;
        break;
      }
    }
    if (meets_all) return cand;
  }
  return std::nullopt;
}

}  // namespace

std::optional<VertexSet> has_transversal_edge(const Hypergraph& h) {
  return transversal_of(h.edges());
}

ConditionResult intersection_condition(const Hypergraph& h) {
  ConditionResult result;
  if (h.edges().empty()) return result;  // vacuous: no S has a nonempty family

  // Union-closure of the edge set, enumerated once each via a worklist.
  constexpr std::size_t kMaxCandidates = 1u << 22;
  std::unordered_set<std::uint64_t> seen;
  std::vector<std::uint64_t> work;
  for (VertexSet e : h.edges())
    if (seen.insert(e.bits()).second) work.push_back(e.bits());
  for (std::size_t head = 0; head < work.size(); ++head) {
    const std::uint64_t cur = work[head];
    for (VertexSet e : h.edges()) {
      const std::uint64_t u = cur | e.bits();
      if (u != cur && seen.insert(u).second) {
        work.push_back(u);
        if (work.size() > kMaxCandidates)
          throw std::runtime_error(
              "intersection_condition: candidate sweep too large");
      }
    }
  }

  std::optional<VertexSet> best;
  for (std::uint64_t bits : work) {
    const VertexSet s = VertexSet::from_bits(bits);
    std::vector<VertexSet> family;
    for (VertexSet e : h.edges())
      if (e.subset_of(s)) family.push_back(e);
    if (transversal_of(family).has_value()) continue;
    if (!best || canonical_less(s, *best)) best = s;
  }
  if (best) {
    result.pass = false;
    result.violating = best;
  }
  return result;
}

bool dim2_condition(const Hypergraph& h) {
  bool has_pair_edge = false;
  for (VertexSet e : h.edges()) {
    if (e.size() > 2) throw std::invalid_argument("dim2 fast path inapplicable");
    if (e.size() == 2) has_pair_edge = true;
  }
  if (!has_pair_edge) throw std::invalid_argument("dim2 fast path inapplicable");
  return has_transversal_edge(h).has_value();
}

namespace {

void check_family_params(int n, int k) {
  if (k < 1 || k > n) throw std::invalid_argument("k out of range");
  if (n > 20)
    throw std::invalid_argument("explicit subset family too large (n > 20)");
}

}  // namespace

Hypergraph moore_hypergraph(int n, int k) {
  check_family_params(n, k);
  std::vector<VertexSet> edges;
  for (std::uint64_t m = 1; m < (1ULL << n); ++m)
    if (std::popcount(m) <= k) edges.push_back(VertexSet::from_bits(m));
  return Hypergraph(n, std::move(edges));
}

Hypergraph exact_hypergraph(int n, int k) {
  check_family_params(n, k);
  std::vector<VertexSet> edges;
  for (std::uint64_t m = 1; m < (1ULL << n); ++m)
    if (std::popcount(m) == k) edges.push_back(VertexSet::from_bits(m));
  return Hypergraph(n, std::move(edges));
}

Hypergraph combine_hypergraphs(const Hypergraph& outer,
                               const std::vector<Hypergraph>& inner) {
  if (static_cast<std::size_t>(outer.vertex_count()) != inner.size())
    throw std::invalid_argument("size mismatch");
  std::vector<int> offset(inner.size() + 1, 0);
  for (std::size_t i = 0; i < inner.size(); ++i)
    offset[i + 1] = offset[i] + inner[i].vertex_count();
  const int total = offset.back();
  if (total > VertexSet::kMaxVertices)
    throw std::invalid_argument("combined vertex count out of range");

  std::vector<VertexSet> edges;
  for (VertexSet h : outer.edges()) {
    const std::vector<int> blocks = h.vertices();
    bool feasible = true;
    for (int b : blocks)
      if (inner[static_cast<std::size_t>(b)].edges().empty()) feasible = false;
    if (!feasible) continue;
    // Cartesian product of inner edge choices, one per block of h.
    std::vector<std::size_t> pick(blocks.size(), 0);
    bool done = false;
    while (!done) {
      VertexSet combined;
      for (std::size_t j = 0; j < blocks.size(); ++j) {
        const auto b = static_cast<std::size_t>(blocks[j]);
        const VertexSet e = inner[b].edges()[pick[j]];
        combined = combined | VertexSet::from_bits(e.bits() << offset[b]);
      }
      edges.push_back(combined);
      done = true;
      for (std::size_t j = blocks.size(); j > 0;) {
        --j;
        if (++pick[j] <
            inner[static_cast<std::size_t>(blocks[j])].edges().size()) {
          done = false;
          break;
        }
        pick[j] = 0;
      }
    }
  }
  std::sort(edges.begin(), edges.end(), canonical_less);
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return Hypergraph(total, std::move(edges));
}

Hypergraph fig1_hypergraph() {
  std::vector<VertexSet> edges;
  for (int i = 0; i < 9; ++i) {
    edges.push_back(
        VertexSet::from_vertices({i, (i + 1) % 9, (i + 2) % 9}));
    edges.push_back(
        VertexSet::from_vertices({i, (i + 1) % 9, (i + 4) % 9, (i + 6) % 9}));
  }
  return Hypergraph(9, std::move(edges));
}

}  // namespace hypernim
