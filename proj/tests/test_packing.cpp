#include "doctest.h"

#include <algorithm>
#include <set>

#include "hypernim/packing.hpp"
#include "hypernim/rng.hpp"

using namespace hypernim;

namespace {

Hypergraph hg(int n, const std::vector<std::vector<int>>& edges) {
  return Hypergraph::from_vertex_lists(n, edges);
}

// Test-side oracle: exhaustive recursion over all multiplicity assignments,
// no memo, no bound. Independent of the production solver.
int brute_value(const Hypergraph& h, Position x, std::size_t idx = 0) {
  if (idx == h.edges().size()) return 0;
  const VertexSet e = h.edges()[idx];
  int cap = x[static_cast<std::size_t>(e.vertices()[0])];
  for (int v : e.vertices()) cap = std::min(cap, x[static_cast<std::size_t>(v)]);
  int best = 0;
  for (int m = 0; m <= cap; ++m) {
    Position next = x;
    for (int v : e.vertices()) next[static_cast<std::size_t>(v)] -= m;
    best = std::max(best, m + brute_value(h, next, idx + 1));
  }
  return best;
}

// All optimal multiplicity vectors, by the same exhaustive recursion.
void brute_optima(const Hypergraph& h, const Position& x, std::size_t idx,
                  std::vector<int>& current, int total, int target,
                  Position residual, std::vector<std::vector<int>>& out) {
  if (idx == h.edges().size()) {
    if (total == target) out.push_back(current);
    return;
  }
  const VertexSet e = h.edges()[idx];
  int cap = residual[static_cast<std::size_t>(e.vertices()[0])];
  for (int v : e.vertices())
    cap = std::min(cap, residual[static_cast<std::size_t>(v)]);
  for (int m = 0; m <= cap; ++m) {
    Position next = residual;
    for (int v : e.vertices()) next[static_cast<std::size_t>(v)] -= m;
    current.push_back(m);
    brute_optima(h, x, idx + 1, current, total + m, target, next, out);
    current.pop_back();
  }
}

std::vector<std::vector<int>> all_optima(const Hypergraph& h, const Position& x) {
  std::vector<std::vector<int>> out;
  std::vector<int> current;
  brute_optima(h, x, 0, current, 0, brute_value(h, x), x, out);
  return out;
}

// Independent matching oracle: largest pairwise disjoint subfamily, by
// subset enumeration.
int brute_matching(const Hypergraph& h) {
  const std::size_t m = h.edges().size();
  REQUIRE(m <= 20);
  int best = 0;
  for (std::uint64_t subset = 0; subset < (1ULL << m); ++subset) {
    VertexSet used;
    bool ok = true;
    int size = 0;
    for (std::size_t i = 0; i < m && ok; ++i) {
      if (!((subset >> i) & 1ULL)) continue;
      if (h.edges()[i].intersects(used)) ok = false;
      used = used | h.edges()[i];
      ++size;
    }
    if (ok) best = std::max(best, size);
  }
  return best;
}

Hypergraph random_family(SplitMix64& rng, int max_n, int max_dim,
                         int max_edges) {
  const int n = rng.next_int(1, max_n);
  std::set<std::uint64_t> masks;
  for (int i = 0, target = rng.next_int(1, max_edges); i < target; ++i) {
    VertexSet e;
    const int size = rng.next_int(1, std::min(max_dim, n));
    while (e.size() < size) e.insert(rng.next_int(0, n - 1));
    masks.insert(e.bits());
  }
  std::vector<VertexSet> edges;
  for (auto mask : masks) edges.push_back(VertexSet::from_bits(mask));
  return Hypergraph(n, edges);
}

}  // namespace

TEST_CASE("max_packing worked examples") {
  CHECK(max_packing(fig1_hypergraph(), Position(9, 1)).value == 3);
  CHECK(max_packing(hg(2, {{0, 1}}), {3, 5}).value == 3);
  CHECK(max_packing(hg(2, {{0}, {1}}), {2, 3}).value == 5);
  CHECK(max_packing(hg(2, {}), {4, 4}).value == 0);
}

TEST_CASE("max_packing equals the exhaustive recursion on random instances") {
  SplitMix64 rng(21);
  for (int t = 0; t < 60; ++t) {
    const Hypergraph h = random_family(rng, 5, 5, 6);
    Position x(static_cast<std::size_t>(h.vertex_count()));
    for (int& c : x) c = rng.next_int(0, 3);
    CHECK(max_packing(h, x).value == brute_value(h, x));
  }
}

TEST_CASE("witness attains the value and fits under the capacities") {
  SplitMix64 rng(22);
  for (int t = 0; t < 40; ++t) {
    const Hypergraph h = random_family(rng, 6, 5, 7);
    Position x(static_cast<std::size_t>(h.vertex_count()));
    for (int& c : x) c = rng.next_int(0, 4);
    const PackingResult r = max_packing(h, x);
    Position used(x.size(), 0);
    int total = 0;
    for (std::size_t i = 0; i < h.edges().size(); ++i) {
      REQUIRE(r.witness.mult[i] >= 0);
      total += r.witness.mult[i];
      for (int v : h.edges()[i].vertices())
        used[static_cast<std::size_t>(v)] += r.witness.mult[i];
    }
    CHECK(total == r.value);
    for (std::size_t i = 0; i < x.size(); ++i) CHECK(used[i] <= x[i]);
  }
}

TEST_CASE("witness is the lexicographically greatest optimum") {
  SplitMix64 rng(23);
  for (int t = 0; t < 30; ++t) {
    const Hypergraph h = random_family(rng, 4, 4, 4);
    Position x(static_cast<std::size_t>(h.vertex_count()));
    for (int& c : x) c = rng.next_int(0, 3);
    const auto optima = all_optima(h, x);
    REQUIRE(!optima.empty());
    const auto greatest = *std::max_element(optima.begin(), optima.end());
    CHECK(max_packing(h, x).witness.mult == greatest);
  }
}

TEST_CASE("matching_number") {
  CHECK(matching_number(hg(4, {{0, 1}, {2, 3}, {0, 2}})) == 2);
  CHECK(matching_number(fig1_hypergraph()) == 3);
  CHECK(brute_matching(fig1_hypergraph()) == 3);
  CHECK(matching_number(hg(3, {{0, 1}, {0, 2}, {1, 2}})) == 1);  // intersecting

  SplitMix64 rng(24);
  for (int t = 0; t < 40; ++t) {
    const Hypergraph h = random_family(rng, 7, 7, 8);
    CHECK(matching_number(h) == brute_matching(h));
  }
}

TEST_CASE("x_all") {
  const Hypergraph five = hg(3, {{0, 1}, {0, 2}, {0}, {1}, {2}});
  CHECK(x_all(five, {1, 1, 1}).empty());  // no edge meets all five
  CHECK(x_all(hg(2, {{0, 1}}), {1, 1}) ==
        std::vector<VertexSet>{VertexSet::from_vertices({0, 1})});
  CHECK(x_all(five, {0, 0, 0}).empty());

  // at all-ones only the quadruples meet the whole fig1 family
  const auto a = x_all(fig1_hypergraph(), Position(9, 1));
  REQUIRE(a.size() == 9);
  for (VertexSet e : a) CHECK(e.size() == 4);
}

TEST_CASE("x_pack worked examples") {
  const auto both = x_pack(hg(2, {{0, 1}, {0}}), {1, 1});
  REQUIRE(both.size() == 2);
  CHECK(both[0] == VertexSet::from_vertices({0}));
  CHECK(both[1] == VertexSet::from_vertices({0, 1}));

  CHECK(x_pack(hg(2, {{0, 1}}), {0, 1}).empty());

  // at all-ones exactly the triples appear in optimal packings of fig1
  const auto p = x_pack(fig1_hypergraph(), Position(9, 1));
  REQUIRE(p.size() == 9);
  for (VertexSet e : p) CHECK(e.size() == 3);
}

TEST_CASE("x_pack forcing identity matches enumeration of all optima") {
  SplitMix64 rng(25);
  for (int t = 0; t < 30; ++t) {
    const Hypergraph h = random_family(rng, 4, 4, 4);
    Position x(static_cast<std::size_t>(h.vertex_count()));
    for (int& c : x) c = rng.next_int(0, 3);
    std::set<std::uint64_t> by_enumeration;
    for (const auto& m : all_optima(h, x))
      for (std::size_t i = 0; i < m.size(); ++i)
        if (m[i] > 0) by_enumeration.insert(h.edges()[i].bits());
    if (brute_value(h, x) == 0) by_enumeration.clear();
    std::set<std::uint64_t> by_forcing;
    for (VertexSet e : x_pack(h, x)) by_forcing.insert(e.bits());
    CHECK(by_forcing == by_enumeration);
  }
}

TEST_CASE("value is monotone with unit-step drops") {
  SplitMix64 rng(26);
  for (int t = 0; t < 40; ++t) {
    const Hypergraph h = random_family(rng, 5, 4, 6);
    PackingSolver solver(h);
    Position x(static_cast<std::size_t>(h.vertex_count()));
    for (int& c : x) c = rng.next_int(0, 3);
    const int value = solver.value(x);
    for (int k : support(x).vertices()) {
      const int lower = solver.value(minus_chi(x, VertexSet::single(k)));
      CHECK(lower <= value);
      CHECK(lower >= value - 1);
    }
  }
}
