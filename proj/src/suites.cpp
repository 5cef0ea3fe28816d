#include "hypernim/suites.hpp"

#include <algorithm>
#include <chrono>
#include <set>
#include <sstream>

#include "hypernim/packing.hpp"

namespace hypernim {

namespace {

class Stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(
               std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_ =
      std::chrono::steady_clock::now();
};

std::string params_note(std::uint64_t seed, int trials, int cap) {
  std::ostringstream os;
  os << "seed=" << seed << " trials=" << trials;
  if (cap >= 0) os << " caps=" << cap;
  return os.str();
}

VertexSet random_edge(SplitMix64& rng, int n, int max_dim) {
  const int size = rng.next_int(1, std::min(max_dim, n));
  VertexSet e;
  while (e.size() < size) e.insert(rng.next_int(0, n - 1));
  return e;
}

void fail_trial(VerificationReport& report, int trial, const Witness* w,
                const std::string& what) {
  report.pass = false;
  Witness out;
  if (w != nullptr) out = *w;
  std::ostringstream os;
  os << "trial " << trial << ": " << what;
  out.detail = out.detail.empty() ? os.str() : os.str() + " (" + out.detail + ")";
  report.witness = std::move(out);
}

}  // namespace

Hypergraph random_hypergraph(SplitMix64& rng, int max_n, int max_dim,
                             int max_edges) {
  return random_hypergraph_exact(rng, rng.next_int(1, max_n), max_dim,
                                 max_edges);
}

Hypergraph random_hypergraph_exact(SplitMix64& rng, int n, int max_dim,
                                   int max_edges) {
  const int target = rng.next_int(1, max_edges);
  std::set<std::uint64_t> masks;
  for (int i = 0; i < target; ++i) masks.insert(random_edge(rng, n, max_dim).bits());
  std::vector<VertexSet> edges;
  edges.reserve(masks.size());
  for (std::uint64_t m : masks) edges.push_back(VertexSet::from_bits(m));
  return Hypergraph(n, std::move(edges));
}

Hypergraph random_intersecting_hypergraph(SplitMix64& rng, int max_n,
                                          int max_edges) {
  const int n = rng.next_int(1, max_n);
  const int target = rng.next_int(1, max_edges);
  std::vector<VertexSet> edges;
  for (int i = 0; i < target; ++i) {
    for (int attempt = 0; attempt < 20; ++attempt) {
      const VertexSet cand = random_edge(rng, n, n);
      bool ok = true;
      for (VertexSet e : edges)
        if (!cand.intersects(e) || cand == e) {
          ok = false;
          break;
        }
      if (ok) {
        edges.push_back(cand);
        break;
      }
    }
  }
  std::sort(edges.begin(), edges.end(), canonical_less);
  return Hypergraph(n, std::move(edges));
}

Hypergraph random_tetris_hypergraph(SplitMix64& rng, int n) {
  for (int attempt = 0; attempt < 50; ++attempt) {
    Hypergraph h = random_hypergraph_exact(rng, n, 3, 5);
    if (intersection_condition(h).pass) return h;
  }
  return Hypergraph(n, {random_edge(rng, n, std::min(3, n))});
}

GameGraph random_dag_game(SplitMix64& rng, int max_positions) {
  const int m = rng.next_int(1, max_positions);
  GameGraph g;
  g.num_positions = m;
  g.moves.resize(static_cast<std::size_t>(m));
  for (int p = 1; p < m; ++p) {
    const int degree = rng.next_int(0, std::min(p, 3));
    std::set<int> targets;
    while (static_cast<int>(targets.size()) < degree)
      targets.insert(rng.next_int(0, p - 1));
    g.moves[static_cast<std::size_t>(p)].assign(targets.begin(), targets.end());
  }
  return g;
}

Fig1Numbers fig1_numbers() {
  const Hypergraph h = fig1_hypergraph();
  const Position ones(9, 1);
  const ValueTable t = tetris_table(GameSpec::nim_h(h, ones));
  Fig1Numbers out;
  out.condition_pass = intersection_condition(h).pass;
  out.longest_play_all_ones = t.at(ones);
  for (int j = 0; j < 9; ++j) {
    const VertexSet triple =
        VertexSet::from_vertices({j, (j + 1) % 9, (j + 2) % 9});
    const VertexSet quad =
        VertexSet::from_vertices({j, (j + 1) % 9, (j + 4) % 9, (j + 6) % 9});
    out.after_slow_triple[static_cast<std::size_t>(j)] =
        t.at(slow_move(ones, triple));
    out.after_slow_quad[static_cast<std::size_t>(j)] =
        t.at(slow_move(ones, quad));
  }
  out.gap = find_gap_violation(h, ones);
  return out;
}

VerificationReport verify_bouton(int cap) {
  Stopwatch timer;
  VerificationReport report;
  report.check = "bouton";
  report.note = "caps=" + std::to_string(cap);

  const std::vector<int> caps(3, cap);
  const GameSpec spec = GameSpec::nim_sum(caps);
  const ValueTable sg = sg_table(spec);
  const Box box(caps);
  report.positions_examined = box.size();
  for (std::size_t id = 0; id < box.size(); ++id) {
    const Position x = box.pos_of(id);
    if (sg.values[id] != nim_xor(x)) {
      report.pass = false;
      Witness w;
      w.position = x;
      w.expected = nim_xor(x);
      w.actual = sg.values[id];
      w.detail = "SG value differs from the XOR of the piles";
      report.witness = std::move(w);
      break;
    }
  }
  report.elapsed_seconds = timer.seconds();
  return report;
}

VerificationReport verify_moore(int cap) {
  Stopwatch timer;
  VerificationReport report;
  report.check = "moore";
  report.note = "caps=" + std::to_string(cap);

  for (int n = 3; n <= 4 && report.pass; ++n) {
    for (int k = 1; k < n && report.pass; ++k) {
      const std::vector<int> caps(static_cast<std::size_t>(n), cap);
      const GameSpec spec = GameSpec::nim_moore(n, k, caps);
      const std::vector<char> flags = p_position_flags(spec);
      const Box box(caps);
      report.positions_examined += box.size();
      for (std::size_t id = 0; id < box.size(); ++id) {
        const Position x = box.pos_of(id);
        const bool by_criterion = moore_p_criterion(x, k);
        if (by_criterion != (flags[id] != 0)) {
          report.pass = false;
          Witness w;
          w.position = x;
          w.expected = flags[id] != 0 ? 1 : 0;
          w.actual = by_criterion ? 1 : 0;
          w.detail = "digit-column criterion disagrees with the peeled P-set"
                     " at n=" +
                     std::to_string(n) + " k=" + std::to_string(k);
          report.witness = std::move(w);
          break;
        }
      }
    }
  }
  report.elapsed_seconds = timer.seconds();
  return report;
}

namespace {

Hypergraph random_outer(SplitMix64& rng, int m, int max_edges) {
  return random_hypergraph_exact(rng, m, m, max_edges);
}

}  // namespace

VerificationReport verify_theorem1_suite(std::uint64_t seed, int trials) {
  Stopwatch timer;
  VerificationReport report;
  report.check = "theorem1";
  report.note = params_note(seed, trials, -1);

  for (int t = 0; t < trials && report.pass; ++t) {
    SplitMix64 rng = trial_rng(seed, static_cast<std::uint64_t>(t));
    const int m = rng.next_int(1, 3);
    CombinationInstance inst;
    for (int i = 0; i < m; ++i) {
      const GameGraph g = random_sg_decreasing_game(
          rng.next_u64(), rng.next_int(1, 12), rng.next_int(0, 4));
      inst.inner.push_back(GameSpec::explicit_game(g));
    }
    inst.outer = random_outer(rng, m, 6);
    const VerificationReport sub = verify_theorem1(inst, true);
    report.positions_examined += sub.positions_examined;
    if (!sub.pass)
      fail_trial(report, t, sub.witness ? &*sub.witness : nullptr,
                 "SG reduction failed on SG-decreasing components");
  }

  if (report.pass) {
    // The pile/sum product instance: the reduction must fail without the
    // SG-decreasing precondition, with a concrete witness.
    CombinationInstance inst;
    inst.inner.push_back(GameSpec::nim_pile(2));
    inst.inner.push_back(GameSpec::nim_sum({1, 1}));
    inst.outer = Hypergraph::from_vertex_lists(2, {{0, 1}});
    const VerificationReport sub = verify_theorem1(inst, false);
    report.positions_examined += sub.positions_examined;
    if (sub.pass || !sub.witness) {
      report.pass = false;
      Witness w;
      w.detail =
          "pile+sum product instance unexpectedly satisfies the SG reduction";
      report.witness = std::move(w);
    }
  }
  report.elapsed_seconds = timer.seconds();
  return report;
}

VerificationReport verify_theorem2_suite(std::uint64_t seed, int trials) {
  Stopwatch timer;
  VerificationReport report;
  report.check = "theorem2";
  report.note = params_note(seed, trials, -1);

  for (int t = 0; t < trials && report.pass; ++t) {
    SplitMix64 rng = trial_rng(seed, static_cast<std::uint64_t>(t));
    CombinationInstance inst;
    while (true) {
      inst.inner.clear();
      const int m = rng.next_int(1, 4);
      std::size_t joint = 1;
      for (int i = 0; i < m; ++i) {
        const GameGraph g = random_dag_game(rng, 20);
        joint *= static_cast<std::size_t>(g.num_positions);
        inst.inner.push_back(GameSpec::explicit_game(g));
      }
      if (joint <= 60000) {
        inst.outer = random_outer(rng, m, 6);
        break;
      }
    }
    const VerificationReport sub = verify_theorem2(inst);
    report.positions_examined += sub.positions_examined;
    if (!sub.pass)
      fail_trial(report, t, sub.witness ? &*sub.witness : nullptr,
                 "longest-play reduction failed");
  }
  report.elapsed_seconds = timer.seconds();
  return report;
}

namespace {

// Shared body of the theorem-3 sweep for one hypergraph.
bool theorem3_case(const Hypergraph& h, int cap, VerificationReport& report,
                   int trial) {
  const std::vector<int> caps(static_cast<std::size_t>(h.vertex_count()), cap);
  const bool condition = intersection_condition(h).pass;
  const auto gap = find_gap_violation(h, caps);
  if (condition == gap.has_value()) {
    Witness w;
    if (gap) {
      w.position = gap->first;
      w.expected = gap->second;
    }
    w.detail = condition ? "condition passes yet a value gap exists"
                         : "condition fails yet the box shows no value gap";
    fail_trial(report, trial, &w, "equivalence broken");
    return false;
  }
  if (!condition) {
    const std::vector<int> ones(static_cast<std::size_t>(h.vertex_count()), 1);
    const VerificationReport zp = verify_z_equals_p(h, ones);
    if (zp.pass) {
      Witness w;
      w.detail = "condition fails yet the all-ones box shows no SG-zero "
                 "position of positive longest-play value";
      fail_trial(report, trial, &w, "missing witness");
      return false;
    }
  }
  report.positions_examined += Box(caps).size();
  return true;
}

}  // namespace

VerificationReport verify_theorem3_suite(std::uint64_t seed, int trials,
                                         int cap) {
  Stopwatch timer;
  VerificationReport report;
  report.check = "theorem3";
  report.note = params_note(seed, trials, cap);

  int case_index = 0;
  for (int t = 0; t < trials && report.pass; ++t, ++case_index) {
    SplitMix64 rng = trial_rng(seed, static_cast<std::uint64_t>(t));
    const Hypergraph h = random_hypergraph(rng, 5, 3, 8);
    theorem3_case(h, cap, report, case_index);
  }

  // Every graph (2-uniform family) on at most 4 vertices, empty included.
  for (int n = 2; n <= 4 && report.pass; ++n) {
    std::vector<VertexSet> pairs;
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b)
        pairs.push_back(VertexSet::from_vertices({a, b}));
    for (std::uint64_t subset = 0; subset < (1ULL << pairs.size()); ++subset) {
      std::vector<VertexSet> edges;
      for (std::size_t i = 0; i < pairs.size(); ++i)
        if ((subset >> i) & 1ULL) edges.push_back(pairs[i]);
      if (!theorem3_case(Hypergraph(n, edges), cap, report, case_index++))
        break;
    }
  }
  report.elapsed_seconds = timer.seconds();
  return report;
}

VerificationReport verify_zp_suite(std::uint64_t seed, int trials, int cap) {
  Stopwatch timer;
  VerificationReport report;
  report.check = "zp";
  report.note = params_note(seed, trials, cap);

  for (int t = 0; t < trials && report.pass; ++t) {
    SplitMix64 rng = trial_rng(seed, static_cast<std::uint64_t>(t));
    const Hypergraph h = random_hypergraph(rng, 5, 5, 8);
    const bool condition = intersection_condition(h).pass;
    const int n = h.vertex_count();
    const std::vector<int> caps(static_cast<std::size_t>(n),
                                condition ? cap : 1);
    const VerificationReport sub = verify_z_equals_p(h, caps);
    report.positions_examined += sub.positions_examined;
    if (sub.pass != condition)
      fail_trial(report, t, sub.witness ? &*sub.witness : nullptr,
                 condition ? "condition passes yet Z != P on the box"
                           : "condition fails yet Z = P on the all-ones box");
  }
  report.elapsed_seconds = timer.seconds();
  return report;
}

VerificationReport verify_superposition_suite(std::uint64_t seed, int trials) {
  Stopwatch timer;
  VerificationReport report;
  report.check = "superposition";
  report.note = params_note(seed, trials, 2);

  for (int t = 0; t < trials && report.pass; ++t) {
    SplitMix64 rng = trial_rng(seed, static_cast<std::uint64_t>(t));
    const int m = rng.next_int(1, 2);
    const Hypergraph outer = random_tetris_hypergraph(rng, m);
    std::vector<Hypergraph> inner;
    inner.reserve(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i)
      inner.push_back(random_tetris_hypergraph(rng, rng.next_int(1, 3)));
    const VerificationReport sub = verify_superposition(outer, inner, 2);
    report.positions_examined += sub.positions_examined;
    if (!sub.pass)
      fail_trial(report, t, sub.witness ? &*sub.witness : nullptr,
                 "combined family is not clean on the all-2 box");
  }
  report.elapsed_seconds = timer.seconds();
  return report;
}

VerificationReport verify_packing_oracle_suite(std::uint64_t seed, int trials,
                                               int cap) {
  Stopwatch timer;
  VerificationReport report;
  report.check = "packing-oracle";
  report.note = params_note(seed, trials, cap);

  for (int t = 0; t < trials && report.pass; ++t) {
    SplitMix64 rng = trial_rng(seed, static_cast<std::uint64_t>(t));
    const Hypergraph h = random_hypergraph(rng, 6, 6, 10);
    std::vector<int> caps(static_cast<std::size_t>(h.vertex_count()));
    for (int& c : caps) c = rng.next_int(0, cap);
    const ValueTable t_game = tetris_table(GameSpec::nim_h(h, caps));
    PackingSolver solver(h);
    const Box box(caps);
    report.positions_examined += box.size();
    for (std::size_t id = 0; id < box.size(); ++id) {
      const Position x = box.pos_of(id);
      const int by_packing = solver.value(x);
      if (by_packing != t_game.values[id]) {
        Witness w;
        w.position = x;
        w.expected = t_game.values[id];
        w.actual = by_packing;
        w.detail = "longest play vs. exact packing";
        fail_trial(report, t, &w, "the two definitions disagree");
        break;
      }
    }
  }
  report.elapsed_seconds = timer.seconds();
  return report;
}

VerificationReport verify_gadget_suite(std::uint64_t seed, int trials) {
  Stopwatch timer;
  VerificationReport report;
  report.check = "gadget";
  report.note = params_note(seed, trials, -1);

  for (int t = 0; t < trials && report.pass; ++t) {
    SplitMix64 rng = trial_rng(seed, static_cast<std::uint64_t>(t));
    const Hypergraph h = random_hypergraph(rng, 8, 8, 10);
    const auto [hstar, x] = np_gadget(h);
    const int mu = matching_number(h);
    const int gadget_value = max_packing(hstar, x).value;

    if (!is_intersecting(hstar)) {
      Witness w;
      w.detail = "gadget family is not intersecting";
      fail_trial(report, t, &w, "gadget construction broken");
      break;
    }
    if (gadget_value != mu) {
      Witness w;
      w.position = x;
      w.expected = mu;
      w.actual = gadget_value;
      w.detail = "gadget packing value vs. matching number";
      fail_trial(report, t, &w, "gadget value mismatch");
      break;
    }
    const ValueTable sg = sg_table(GameSpec::nim_h(hstar, x));
    report.positions_examined += sg.values.size();
    if (sg.at(x) != mu) {
      Witness w;
      w.position = x;
      w.expected = mu;
      w.actual = sg.at(x);
      w.detail = "SG value at the gadget position vs. matching number";
      fail_trial(report, t, &w, "SG chain mismatch");
      break;
    }
  }
  report.elapsed_seconds = timer.seconds();
  return report;
}

VerificationReport verify_intersecting_suite(std::uint64_t seed, int trials,
                                             int cap) {
  Stopwatch timer;
  VerificationReport report;
  report.check = "intersecting";
  report.note = params_note(seed, trials, cap);

  for (int t = 0; t < trials && report.pass; ++t) {
    SplitMix64 rng = trial_rng(seed, static_cast<std::uint64_t>(t));
    const Hypergraph h = random_intersecting_hypergraph(rng, 5, 8);
    const std::vector<int> caps(static_cast<std::size_t>(h.vertex_count()),
                                cap);
    const GameSpec spec = GameSpec::nim_h(h, caps);
    const ValueTable sg = sg_table(spec);
    const ValueTable tetris = tetris_table(spec);
    const Box box(caps);
    report.positions_examined += box.size();
    for (std::size_t id = 0; id < box.size(); ++id) {
      if (sg.values[id] != tetris.values[id]) {
        Witness w;
        w.position = box.pos_of(id);
        w.expected = tetris.values[id];
        w.actual = sg.values[id];
        w.detail = "SG vs. longest play on an intersecting family";
        fail_trial(report, t, &w, "sufficiency broken");
        break;
      }
    }
  }
  report.elapsed_seconds = timer.seconds();
  return report;
}

VerificationReport verify_packing_properties_suite(std::uint64_t seed,
                                                   int trials) {
  Stopwatch timer;
  VerificationReport report;
  report.check = "packing-properties";
  report.note = params_note(seed, trials, 3);

  for (int t = 0; t < trials && report.pass; ++t) {
    SplitMix64 rng = trial_rng(seed, static_cast<std::uint64_t>(t));
    const Hypergraph h = random_hypergraph(rng, 6, 4, 8);
    Position x(static_cast<std::size_t>(h.vertex_count()));
    for (int& c : x) c = rng.next_int(0, 3);
    PackingSolver solver(h);
    const int value = solver.value(x);
    const VertexSet supp = support(x);
    ++report.positions_examined;

    auto fail = [&](const Position& pos, long long expected, long long actual,
                    const char* what) {
      Witness w;
      w.position = pos;
      w.expected = expected;
      w.actual = actual;
      w.detail = what;
      fail_trial(report, t, &w, "packing property violated");
    };

    // Unit decrements change the value by at most one, never upward.
    for (int k : supp.vertices()) {
      const int lower = solver.value(minus_chi(x, VertexSet::single(k)));
      if (!(value >= lower && lower >= value - 1)) {
        fail(x, value, lower, "unit decrement bound");
        break;
      }
    }

    for (VertexSet e : h.edges()) {
      if (!report.pass || !e.subset_of(supp)) continue;
      const int slow = solver.value(slow_move(x, e));
      const int fast = solver.value(fast_move(x, e));
      if (!(value > slow && slow >= fast && fast >= 0))
        fail(x, value, slow, "slow/fast sandwich");
      else if (slow < value - e.size())
        fail(x, value - e.size(), slow, "drop bounded by the edge size");
    }

    if (report.pass) {
      for (VertexSet e : x_pack(h, x)) {
        if (solver.value(slow_move(x, e)) != value - 1) {
          fail(x, value - 1, solver.value(slow_move(x, e)),
               "usable edge must drop the value by exactly one");
          break;
        }
      }
    }
    if (report.pass) {
      const auto all = x_all(h, x);
      for (VertexSet e : h.edges()) {
        if (!e.subset_of(supp)) continue;
        const bool zeroes = solver.value(fast_move(x, e)) == 0;
        const bool in_all = std::find(all.begin(), all.end(), e) != all.end();
        if (zeroes != in_all) {
          fail(x, in_all ? 0 : 1, zeroes ? 0 : 1,
               "fast move zeroes the value iff the edge meets the whole "
               "induced family");
          break;
        }
      }
    }
  }
  report.elapsed_seconds = timer.seconds();
  return report;
}

}  // namespace hypernim
