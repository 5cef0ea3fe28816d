#include "hypernim/games.hpp"

#include <algorithm>
#include <stdexcept>

namespace hypernim {

namespace {
constexpr std::size_t kMaxBoxSize = 1ULL << 31;
}

Box::Box(std::vector<int> caps) : caps_(std::move(caps)) {
  stride_.assign(caps_.size(), 1);
  for (std::size_t i = caps_.size(); i > 0; --i) {
    const int c = caps_[i - 1];
    if (c < 0) throw std::invalid_argument("negative cap");
    stride_[i - 1] = size_;
    size_ *= static_cast<std::size_t>(c) + 1;
    if (size_ > kMaxBoxSize) throw std::invalid_argument("box too large");
  }
}

bool Box::contains(const Position& x) const {
  if (x.size() != caps_.size()) return false;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i] < 0 || x[i] > caps_[i]) return false;
  return true;
}

std::size_t Box::id_of(const Position& x) const {
  if (!contains(x)) throw std::invalid_argument("position outside box");
  std::size_t id = 0;
  for (std::size_t i = 0; i < x.size(); ++i)
    id += static_cast<std::size_t>(x[i]) * stride_[i];
  return id;
}

Position Box::pos_of(std::size_t id) const {
  if (id >= size_) throw std::invalid_argument("position id out of range");
  Position x(caps_.size());
  for (std::size_t i = 0; i < caps_.size(); ++i) {
    x[i] = static_cast<int>(id / stride_[i]);
    id %= stride_[i];
  }
  return x;
}

std::vector<int> GameGraph::topological_order() const {
  // Kahn over reversed edges: pop positions whose targets are all emitted.
  std::vector<int> pending(static_cast<std::size_t>(num_positions), 0);
  std::vector<std::vector<int>> preds(static_cast<std::size_t>(num_positions));
  for (int p = 0; p < num_positions; ++p) {
    for (int q : moves[static_cast<std::size_t>(p)]) {
      if (q < 0 || q >= num_positions)
        throw std::invalid_argument("move target out of range");
      preds[static_cast<std::size_t>(q)].push_back(p);
    }
    pending[static_cast<std::size_t>(p)] =
        static_cast<int>(moves[static_cast<std::size_t>(p)].size());
  }
  std::vector<int> order;
  order.reserve(static_cast<std::size_t>(num_positions));
  for (int p = 0; p < num_positions; ++p)
    if (pending[static_cast<std::size_t>(p)] == 0) order.push_back(p);
  for (std::size_t head = 0; head < order.size(); ++head) {
    for (int p : preds[static_cast<std::size_t>(order[head])])
      if (--pending[static_cast<std::size_t>(p)] == 0) order.push_back(p);
  }
  if (order.size() != static_cast<std::size_t>(num_positions))
    throw std::invalid_argument("cycle detected");
  return order;
}

void GameGraph::validate() const {
  if (num_positions < 0) throw std::invalid_argument("negative position count");
  if (moves.size() != static_cast<std::size_t>(num_positions))
    throw std::invalid_argument("move table size mismatch");
  if (start && (*start < 0 || *start >= num_positions))
    throw std::invalid_argument("start position out of range");
  for (const auto& list : moves) {
    auto sorted = list;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw std::invalid_argument("duplicate move target");
  }
  (void)topological_order();  // range + acyclicity
}

const BoxedNimH& GameSpec::boxed() const {
  if (!boxed_) throw std::logic_error("explicit game has no box");
  return *boxed_;
}

const GameGraph& GameSpec::graph() const {
  if (!graph_) throw std::logic_error("boxed game has no explicit graph");
  return *graph_;
}

std::size_t GameSpec::position_count() const {
  if (is_boxed()) return boxed_->box().size();
  return static_cast<std::size_t>(graph_->num_positions);
}

namespace {

void check_caps(const std::vector<int>& caps, std::size_t n) {
  if (caps.size() != n) throw std::invalid_argument("caps length mismatch");
  for (int c : caps)
    if (c < 0) throw std::invalid_argument("negative cap");
}

}  // namespace

GameSpec GameSpec::nim_pile(int cap) {
  GameSpec s = nim_h(Hypergraph::from_vertex_lists(1, {{0}}), {cap});
  s.kind_ = Kind::NimPile;
  return s;
}

GameSpec GameSpec::nim_sum(std::vector<int> caps) {
  const int n = static_cast<int>(caps.size());
  std::vector<VertexSet> singles;
  singles.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) singles.push_back(VertexSet::single(i));
  GameSpec s = nim_h(Hypergraph(n, std::move(singles)), std::move(caps));
  s.kind_ = Kind::NimSum;
  return s;
}

GameSpec GameSpec::nim_moore(int n, int k, std::vector<int> caps) {
  check_caps(caps, static_cast<std::size_t>(n));
  GameSpec s = nim_h(moore_hypergraph(n, k), std::move(caps));
  s.kind_ = Kind::NimMoore;
  s.k_ = k;
  return s;
}

GameSpec GameSpec::nim_exact(int n, int k, std::vector<int> caps) {
  check_caps(caps, static_cast<std::size_t>(n));
  GameSpec s = nim_h(exact_hypergraph(n, k), std::move(caps));
  s.kind_ = Kind::NimExact;
  s.k_ = k;
  return s;
}

GameSpec GameSpec::nim_h(Hypergraph h, std::vector<int> caps) {
  check_caps(caps, static_cast<std::size_t>(h.vertex_count()));
  GameSpec s;
  s.kind_ = Kind::NimH;
  s.boxed_ = BoxedNimH{std::move(h), std::move(caps)};
  (void)s.boxed_->box();  // size guard
  return s;
}

GameSpec GameSpec::explicit_game(GameGraph g) {
  g.validate();
  GameSpec s;
  s.kind_ = Kind::Explicit;
  s.graph_ = std::move(g);
  return s;
}

namespace {

void check_legal_position(const GameSpec& spec, const Position& pos) {
  if (spec.is_boxed()) {
    if (!spec.boxed().box().contains(pos))
      throw std::invalid_argument("illegal position");
  } else {
    if (pos.size() != 1 || pos[0] < 0 ||
        pos[0] >= spec.graph().num_positions)
      throw std::invalid_argument("illegal position");
  }
}

}  // namespace

std::vector<Position> enumerate_moves(const GameSpec& spec, const Position& pos) {
  check_legal_position(spec, pos);
  std::vector<Position> out;
  if (spec.is_boxed()) {
    for_each_nimh_move(spec.boxed().h, pos,
                       [&](const Position& y) { out.push_back(y); });
  } else {
    for (int q : spec.graph().moves[static_cast<std::size_t>(pos[0])])
      out.push_back({q});
  }
  return out;
}

bool is_terminal(const GameSpec& spec, const Position& pos) {
  check_legal_position(spec, pos);
  if (spec.is_boxed()) {
    const VertexSet supp = support(pos);
    for (VertexSet e : spec.boxed().h.edges())
      if (e.subset_of(supp)) return false;
    return true;
  }
  return spec.graph().moves[static_cast<std::size_t>(pos[0])].empty();
}

GameGraph explicit_from_boxed(const GameSpec& spec) {
  if (!spec.is_boxed()) return spec.graph();
  const BoxedNimH& game = spec.boxed();
  const Box box = game.box();
  GameGraph g;
  g.num_positions = static_cast<int>(box.size());
  g.moves.resize(box.size());
  for (std::size_t id = 0; id < box.size(); ++id) {
    const Position x = box.pos_of(id);
    for_each_nimh_move(game.h, x, [&](const Position& y) {
      g.moves[id].push_back(static_cast<int>(box.id_of(y)));
    });
  }
  return g;
}

GameGraph h_combination(const std::vector<GameSpec>& inner,
                        const Hypergraph& outer) {
  if (static_cast<std::size_t>(outer.vertex_count()) != inner.size())
    throw std::invalid_argument("size mismatch");
  std::vector<GameGraph> graphs;
  graphs.reserve(inner.size());
  std::vector<int> counts;
  for (const GameSpec& spec : inner) {
    graphs.push_back(explicit_from_boxed(spec));
    counts.push_back(graphs.back().num_positions - 1);
    if (graphs.back().num_positions == 0)
      throw std::invalid_argument("inner game has no positions");
  }
  const Box joint(counts);  // component ids as mixed-radix digits

  GameGraph g;
  g.num_positions = static_cast<int>(joint.size());
  g.moves.resize(joint.size());
  for (std::size_t id = 0; id < joint.size(); ++id) {
    const Position ids = joint.pos_of(id);
    for (VertexSet h : outer.edges()) {
      const std::vector<int> blocks = h.vertices();
      bool feasible = true;
      for (int b : blocks) {
        const auto& targets =
            graphs[static_cast<std::size_t>(b)]
                .moves[static_cast<std::size_t>(ids[static_cast<std::size_t>(b)])];
        if (targets.empty()) {
          feasible = false;
          break;
        }
      }
      if (!feasible) continue;
      std::vector<std::size_t> pick(blocks.size(), 0);
      bool done = false;
      while (!done) {
        Position target = ids;
        for (std::size_t j = 0; j < blocks.size(); ++j) {
          const auto b = static_cast<std::size_t>(blocks[j]);
          target[b] = graphs[b].moves[static_cast<std::size_t>(ids[b])][pick[j]];
        }
        g.moves[id].push_back(static_cast<int>(joint.id_of(target)));
        done = true;
        for (std::size_t j = blocks.size(); j > 0;) {
          --j;
          const auto b = static_cast<std::size_t>(blocks[j]);
          if (++pick[j] < graphs[b].moves[static_cast<std::size_t>(ids[b])].size()) {
            done = false;
            break;
          }
          pick[j] = 0;
        }
      }
    }
  }
  return g;
}

GameGraph random_sg_decreasing_game(std::uint64_t seed, int num_positions,
                                    int max_tetris) {
  if (num_positions < 1) throw std::invalid_argument("need at least 1 position");
  if (max_tetris < 0) throw std::invalid_argument("negative max_tetris");
  SplitMix64 rng(mix64(seed));

  const int top = std::min(max_tetris, num_positions - 1);
  std::vector<int> level(static_cast<std::size_t>(num_positions));
  std::vector<std::vector<int>> by_level(static_cast<std::size_t>(top) + 1);
  for (int p = 0; p < num_positions; ++p) {
    // The first top+1 positions pin one inhabitant per level so every lower
    // level is always nonempty; the rest draw levels uniformly.
    level[static_cast<std::size_t>(p)] = p <= top ? p : rng.next_int(0, top);
    by_level[static_cast<std::size_t>(level[static_cast<std::size_t>(p)])]
        .push_back(p);
  }

  GameGraph g;
  g.num_positions = num_positions;
  g.moves.resize(static_cast<std::size_t>(num_positions));
  for (int p = 0; p < num_positions; ++p) {
    const int lv = level[static_cast<std::size_t>(p)];
    if (lv == 0) continue;
    std::vector<int> targets;
    for (int v = 0; v < lv; ++v) {
      const auto& pool = by_level[static_cast<std::size_t>(v)];
      targets.push_back(pool[static_cast<std::size_t>(rng.next_below(pool.size()))]);
    }
    for (int q = 0; q < num_positions; ++q)
      if (level[static_cast<std::size_t>(q)] < lv && rng.chance(1, 4))
        targets.push_back(q);
    std::sort(targets.begin(), targets.end());
    targets.erase(std::unique(targets.begin(), targets.end()), targets.end());
    g.moves[static_cast<std::size_t>(p)] = std::move(targets);
  }
  return g;
}

}  // namespace hypernim
