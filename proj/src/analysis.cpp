#include "hypernim/analysis.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>

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

}  // namespace

int mex(const std::vector<int>& values) {
  std::vector<char> present(values.size() + 1, 0);
  for (int v : values)
    if (v >= 0 && static_cast<std::size_t>(v) < present.size())
      present[static_cast<std::size_t>(v)] = 1;
  int m = 0;
  while (present[static_cast<std::size_t>(m)] != 0) ++m;
  return m;
}

int nim_xor(const std::vector<int>& values) {
  int acc = 0;
  for (int v : values) acc ^= v;
  return acc;
}

int ValueTable::at(const Position& x) const {
  if (!caps) throw std::logic_error("table has no box domain");
  return values[Box(*caps).id_of(x)];
}

int ValueTable::max_value() const {
  int best = 0;
  for (int v : values) best = std::max(best, v);
  return best;
}

namespace {

// Runs `fold` over each position in a successors-first order, passing the
// position id and its move targets' ids.
template <typename Fold>
void scan_game(const GameSpec& spec, Fold&& fold) {
  if (spec.is_boxed()) {
    const Box box = spec.boxed().box();
    std::vector<std::size_t> targets;
    for (std::size_t id = 0; id < box.size(); ++id) {
      targets.clear();
      const Position x = box.pos_of(id);
      for_each_nimh_move(spec.boxed().h, x, [&](const Position& y) {
        targets.push_back(box.id_of(y));
      });
      fold(id, targets);
    }
  } else {
    const GameGraph& g = spec.graph();
    std::vector<std::size_t> targets;
    for (int p : g.topological_order()) {
      targets.clear();
      for (int q : g.moves[static_cast<std::size_t>(p)])
        targets.push_back(static_cast<std::size_t>(q));
      fold(static_cast<std::size_t>(p), targets);
    }
  }
}

ValueTable empty_table(const GameSpec& spec, TableKind kind) {
  ValueTable t;
  t.kind = kind;
  if (spec.is_boxed()) t.caps = spec.boxed().caps;
  t.values.assign(spec.position_count(), 0);
  return t;
}

}  // namespace

ValueTable sg_table(const GameSpec& spec) {
  ValueTable t = empty_table(spec, TableKind::SG);
  std::vector<int> succ;
  scan_game(spec, [&](std::size_t id, const std::vector<std::size_t>& targets) {
    succ.clear();
    for (std::size_t q : targets) succ.push_back(t.values[q]);
    t.values[id] = mex(succ);
  });
  return t;
}

ValueTable tetris_table(const GameSpec& spec) {
  ValueTable t = empty_table(spec, TableKind::Tetris);
  scan_game(spec, [&](std::size_t id, const std::vector<std::size_t>& targets) {
    int best = -1;
    for (std::size_t q : targets) best = std::max(best, t.values[q]);
    t.values[id] = best + 1;
  });
  return t;
}

std::vector<char> p_position_flags(const GameSpec& spec) {
  std::vector<char> in_p(spec.position_count(), 0);
  scan_game(spec, [&](std::size_t id, const std::vector<std::size_t>& targets) {
    char p = 1;
    for (std::size_t q : targets)
      if (in_p[q] != 0) {
        p = 0;
        break;
      }
    in_p[id] = p;
  });
  return in_p;
}

std::vector<Position> p_positions_recursive(const GameSpec& spec) {
  const std::vector<char> flags = p_position_flags(spec);
  std::vector<Position> out;
  if (spec.is_boxed()) {
    const Box box = spec.boxed().box();
    for (std::size_t id = 0; id < flags.size(); ++id)
      if (flags[id] != 0) out.push_back(box.pos_of(id));
  } else {
    for (std::size_t id = 0; id < flags.size(); ++id)
      if (flags[id] != 0) out.push_back({static_cast<int>(id)});
  }
  return out;
}

namespace {

Position id_to_position(const GameSpec& spec, std::size_t id) {
  if (spec.is_boxed()) return spec.boxed().box().pos_of(id);
  return {static_cast<int>(id)};
}

}  // namespace

VerificationReport is_sg_decreasing(const GameSpec& spec) {
  Stopwatch timer;
  VerificationReport report;
  report.check = "sg-decreasing";

  const ValueTable sg = sg_table(spec);
  const ValueTable tetris = tetris_table(spec);

  bool every_move_drops = true;
  bool tables_equal = true;
  bool gap_free = true;
  std::optional<Witness> witness;

  std::vector<char> reachable;
  scan_game(spec, [&](std::size_t id, const std::vector<std::size_t>& targets) {
    ++report.positions_examined;
    if (sg.values[id] != tetris.values[id]) tables_equal = false;
    const int t_here = tetris.values[id];
    reachable.assign(static_cast<std::size_t>(t_here) + 1, 0);
    for (std::size_t q : targets) {
      if (sg.values[q] >= sg.values[id]) {
        every_move_drops = false;
        if (!witness) {
          Witness w;
          w.position = id_to_position(spec, id);
          w.move = id_to_position(spec, q);
          w.expected = sg.values[id];
          w.actual = sg.values[q];
          w.detail = "move must strictly decrease the SG value";
          witness = std::move(w);
        }
      }
      if (tetris.values[q] < t_here)
        reachable[static_cast<std::size_t>(tetris.values[q])] = 1;
    }
    for (int v = 0; v < t_here; ++v)
      if (reachable[static_cast<std::size_t>(v)] == 0) gap_free = false;
  });

  if (every_move_drops != tables_equal || tables_equal != gap_free)
    throw std::logic_error("SG-decrease criteria disagree (internal error)");

  report.pass = every_move_drops;
  report.witness = std::move(witness);
  report.elapsed_seconds = timer.seconds();
  return report;
}

std::vector<Position> z_set(const Hypergraph& h, const std::vector<int>& caps) {
  const Box box(caps);
  std::vector<Position> out;
  for (std::size_t id = 0; id < box.size(); ++id) {
    const Position x = box.pos_of(id);
    const VertexSet supp = support(x);
    bool zero = true;
    for (VertexSet e : h.edges())
      if (e.subset_of(supp)) {
        zero = false;
        break;
      }
    if (zero) out.push_back(x);
  }
  return out;
}

VerificationReport verify_z_equals_p(const Hypergraph& h,
                                     const std::vector<int>& caps) {
  Stopwatch timer;
  VerificationReport report;
  report.check = "zero-longest-play equals P";

  const GameSpec spec = GameSpec::nim_h(h, caps);
  const ValueTable sg = sg_table(spec);
  const ValueTable tetris = tetris_table(spec);
  const Box box(caps);
  report.positions_examined = box.size();

  // T(x) = 0 forces a terminal, hence SG 0; the only possible mismatch is a
  // position with SG 0 but positive longest-play value.
  for (std::size_t id = 0; id < box.size(); ++id) {
    if (sg.values[id] == 0 && tetris.values[id] != 0) {
      report.pass = false;
      Witness w;
      w.position = box.pos_of(id);
      w.expected = 0;
      w.actual = tetris.values[id];
      w.detail = "SG-zero position with positive longest-play value";
      report.witness = std::move(w);
      break;
    }
  }
  report.elapsed_seconds = timer.seconds();
  return report;
}

bool moore_p_criterion(const Position& x, int k) {
  if (k < 1) throw std::invalid_argument("k out of range");
  for (int v : x)
    if (v < 0) throw std::invalid_argument("negative pile");
  for (int bit = 0; bit < 31; ++bit) {
    int column = 0;
    for (int v : x) column += (v >> bit) & 1;
    if (column % (k + 1) != 0) return false;
  }
  return true;
}

std::optional<std::pair<Position, int>> find_gap_violation(
    const Hypergraph& h, const std::vector<int>& caps) {
  const GameSpec spec = GameSpec::nim_h(h, caps);
  const ValueTable tetris = tetris_table(spec);
  const Box box(caps);

  // Colex ascending: odometer with coordinate 0 fastest.
  Position x(caps.size(), 0);
  std::vector<char> covered;
  while (true) {
    const int t_here = tetris.values[box.id_of(x)];
    if (t_here > 0) {
      covered.assign(static_cast<std::size_t>(t_here), 0);
      const VertexSet supp = support(x);
      for (VertexSet e : h.edges()) {
        if (!e.subset_of(supp)) continue;
        const int lo = tetris.values[box.id_of(fast_move(x, e))];
        const int hi = tetris.values[box.id_of(slow_move(x, e))];
        for (int v = lo; v <= hi && v < t_here; ++v)
          covered[static_cast<std::size_t>(v)] = 1;
      }
      for (int v = 0; v < t_here; ++v)
        if (covered[static_cast<std::size_t>(v)] == 0)
          return std::make_pair(x, v);
    }
    std::size_t j = 0;
    while (j < x.size() && x[j] == caps[j]) {
      x[j] = 0;
      ++j;
    }
    if (j == x.size()) break;
    ++x[j];
  }
  return std::nullopt;
}

TetrisVerdict is_tetris(const Hypergraph& h, const std::vector<int>& caps) {
  TetrisVerdict verdict;
  if (h.edges().empty()) {
    verdict.status = TetrisStatus::Tetris;
    verdict.note = "no edges: the game has no moves";
    return verdict;
  }

  const ConditionResult cond = intersection_condition(h);
  if (!cond.pass) {
    verdict.status = TetrisStatus::NotTetris;
    verdict.violating_subset = cond.violating;
    verdict.gap = find_gap_violation(h, caps);
    return verdict;
  }

  if (dimension(h) <= 3) {
    verdict.status = TetrisStatus::Tetris;
    return verdict;
  }

  // Dimension >= 4: the condition is necessary but not sufficient; search
  // the cap box for a counterexample, else stay agnostic.
  verdict.gap = find_gap_violation(h, caps);
  if (verdict.gap) {
    verdict.status = TetrisStatus::NotTetris;
    return verdict;
  }
  const GameSpec spec = GameSpec::nim_h(h, caps);
  const ValueTable sg = sg_table(spec);
  const ValueTable tetris = tetris_table(spec);
  const Box box(caps);
  for (std::size_t id = 0; id < box.size(); ++id) {
    if (sg.values[id] != tetris.values[id]) {
      verdict.status = TetrisStatus::NotTetris;
      verdict.gap = std::make_pair(box.pos_of(id), sg.values[id]);
      verdict.note = "SG differs from longest-play value inside the box";
      return verdict;
    }
  }
  verdict.status = TetrisStatus::Unknown;
  verdict.note =
      "condition holds and no counterexample within caps; dimension >= 4 "
      "admits no finite certificate here";
  return verdict;
}

}  // namespace hypernim
