#include "hypernim/packing.hpp"

#include <algorithm>
#include <stdexcept>

namespace hypernim {

std::size_t PackingSolver::VecHash::operator()(const std::vector<int>& v) const {
  std::size_t h = 1469598103934665603ULL;  // FNV-1a
  for (int e : v) {
    h ^= static_cast<std::size_t>(static_cast<std::uint32_t>(e));
    h *= 1099511628211ULL;
  }
  return h;
}

PackingSolver::PackingSolver(Hypergraph h) : h_(std::move(h)) {
  const std::size_t m = h_.edges().size();
  suffix_union_.assign(m + 1, VertexSet());
  suffix_min_size_.assign(m + 1, VertexSet::kMaxVertices + 1);
  for (std::size_t i = m; i > 0; --i) {
    const VertexSet e = h_.edges()[i - 1];
    suffix_union_[i - 1] = suffix_union_[i] | e;
    suffix_min_size_[i - 1] = std::min(suffix_min_size_[i], e.size());
  }
}

Position PackingSolver::project(std::size_t idx, const Position& residual) const {
  Position p(residual.size(), 0);
  for (int v : suffix_union_[idx].vertices())
    p[static_cast<std::size_t>(v)] = residual[static_cast<std::size_t>(v)];
  return p;
}

int PackingSolver::best(std::size_t idx, const Position& residual) {
  const std::size_t m = h_.edges().size();
  if (idx == m) return 0;
  Position key = project(idx, residual);

  // Admissible bound: every packed copy of a remaining edge consumes at
  // least suffix_min_size_ units of the remaining capacity mass.
  long long mass = 0;
  for (int c : key) mass += c;
  const int bound = static_cast<int>(mass / suffix_min_size_[idx]);
  if (bound == 0) return 0;

  key.push_back(static_cast<int>(idx));
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;
  key.pop_back();

  const VertexSet edge = h_.edges()[idx];
  int cap = VertexSet::kMaxVertices;  // overwritten: edges are nonempty
  for (int v : edge.vertices())
    cap = std::min(cap, key[static_cast<std::size_t>(v)]);

  int found = 0;
  Position next = key;
  for (int v : edge.vertices()) next[static_cast<std::size_t>(v)] -= cap;
  for (int mult = cap; mult >= 0; --mult) {
    found = std::max(found, mult + best(idx + 1, next));
    if (found >= bound) break;
    for (int v : edge.vertices()) ++next[static_cast<std::size_t>(v)];
  }

  key.push_back(static_cast<int>(idx));
  memo_.emplace(std::move(key), found);
  return found;
}

int PackingSolver::value(const Position& x) {
  if (x.size() != static_cast<std::size_t>(h_.vertex_count()))
    throw std::invalid_argument("capacity length mismatch");
  for (int c : x)
    if (c < 0) throw std::invalid_argument("negative capacity");
  return best(0, x);
}

PackingResult PackingSolver::solve(const Position& x) {
  PackingResult result;
  result.value = value(x);
  result.witness.mult.assign(h_.edges().size(), 0);
  // Walk the memoized recursion, at each edge taking the largest
  // multiplicity whose completion still attains the optimum.
  Position residual = x;
  int remaining = result.value;
  for (std::size_t idx = 0; idx < h_.edges().size() && remaining > 0; ++idx) {
    const VertexSet edge = h_.edges()[idx];
    int cap = VertexSet::kMaxVertices;
    for (int v : edge.vertices())
      cap = std::min(cap, residual[static_cast<std::size_t>(v)]);
    for (int mult = cap; mult >= 0; --mult) {
      Position next = residual;
      for (int v : edge.vertices()) next[static_cast<std::size_t>(v)] -= mult;
      if (mult + best(idx + 1, next) == remaining) {
        result.witness.mult[idx] = mult;
        residual = std::move(next);
        remaining -= mult;
        break;
      }
    }
  }
  return result;
}

PackingResult max_packing(const Hypergraph& h, const Position& x) {
  PackingSolver solver(h);
  return solver.solve(x);
}

int matching_number(const Hypergraph& h) {
  return max_packing(h, Position(static_cast<std::size_t>(h.vertex_count()), 1))
      .value;
}

std::vector<VertexSet> x_all(const Hypergraph& h, const Position& x) {
  const VertexSet supp = support(x);
  std::vector<VertexSet> family;
  for (VertexSet e : h.edges())
    if (e.subset_of(supp)) family.push_back(e);
  std::vector<VertexSet> out;
  for (VertexSet cand : family) {
    bool meets_all = true;
    for (VertexSet other : family)
      if (!cand.intersects(other)) {
        meets_all = false;
        break;
      }
    if (meets_all) out.push_back(cand);
  }
  return out;
}

std::vector<VertexSet> x_pack(const Hypergraph& h, const Position& x) {
  PackingSolver solver(h);
  const int total = solver.value(x);
  std::vector<VertexSet> out;
  if (total == 0) return out;
  const VertexSet supp = support(x);
  for (VertexSet e : h.edges()) {
    if (!e.subset_of(supp)) continue;
    if (1 + solver.value(minus_chi(x, e)) == total) out.push_back(e);
  }
  return out;
}

}  // namespace hypernim
