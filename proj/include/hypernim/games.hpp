#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "hypernim/hypergraph.hpp"
#include "hypernim/rng.hpp"

namespace hypernim {

/// Mixed-radix position indexing over a cap box [0,caps_0] x ... x
/// [0,caps_{n-1}]: row-major, last coordinate fastest. Because every NIM_H
/// move strictly decreases some coordinates and increases none, ascending id
/// order is a topological order of the boxed game.
class Box {
 public:
  explicit Box(std::vector<int> caps);

  std::size_t size() const { return size_; }
  int dims() const { return static_cast<int>(caps_.size()); }
  const std::vector<int>& caps() const { return caps_; }

  bool contains(const Position& x) const;
  std::size_t id_of(const Position& x) const;  // throws if outside the box
  Position pos_of(std::size_t id) const;

 private:
  std::vector<int> caps_;
  std::vector<std::size_t> stride_;
  std::size_t size_ = 1;
};

/// Finite explicit game: positions 0..num_positions-1 with move lists.
/// The universal representation for arbitrary impartial games.
struct GameGraph {
  int num_positions = 0;
  std::vector<std::vector<int>> moves;
  std::optional<int> start;

  /// Throws std::invalid_argument on out-of-range targets or a cycle.
  void validate() const;

  /// An order in which every position appears after all its move targets.
  std::vector<int> topological_order() const;
};

/// NIM_H restricted to a cap box. Moves only decrease coordinates, so the
/// box is downward closed and all tables computed on it are exact.
struct BoxedNimH {
  Hypergraph h;
  std::vector<int> caps;

  Box box() const { return Box(caps); }
};

/// A finite impartial game, either one of the built-in NIM_H family members
/// or an explicit DAG. The NIM-family constructors normalize to BoxedNimH:
/// a sum is NIM over singleton edges, the bounded-pile-count variants are
/// NIM over the corresponding subset families. Tests check those identities
/// against independently enumerated move sets.
class GameSpec {
 public:
  enum class Kind { NimPile, NimSum, NimMoore, NimExact, NimH, Explicit };

  static GameSpec nim_pile(int cap);
  static GameSpec nim_sum(std::vector<int> caps);
  static GameSpec nim_moore(int n, int k, std::vector<int> caps);
  static GameSpec nim_exact(int n, int k, std::vector<int> caps);
  static GameSpec nim_h(Hypergraph h, std::vector<int> caps);
  static GameSpec explicit_game(GameGraph g);

  Kind kind() const { return kind_; }
  bool is_boxed() const { return kind_ != Kind::Explicit; }
  const BoxedNimH& boxed() const;
  const GameGraph& graph() const;
  /// k parameter of the NimMoore/NimExact kinds (for serialization).
  int subset_bound() const { return k_; }

  std::size_t position_count() const;

 private:
  GameSpec() = default;
  Kind kind_ = Kind::Explicit;
  std::optional<BoxedNimH> boxed_;
  std::optional<GameGraph> graph_;
  int k_ = 0;
};

/// Calls fn(y) for every move x -> y of NIM_H, i.e. for every edge
/// H ⊆ supp(x) and every y with y_i < x_i exactly on H. Edges in canonical
/// order; within an edge, targets as a row-major odometer (last member of H
/// fastest). Move counts grow as Π_{i in H} x_i, hence the visitor shape;
/// nothing is materialized here.
template <typename F>
void for_each_nimh_move(const Hypergraph& h, const Position& x, F&& fn) {
  const VertexSet supp = support(x);
  for (VertexSet edge : h.edges()) {
    if (!edge.subset_of(supp)) continue;
    const std::vector<int> vs = edge.vertices();
    Position y = x;
    for (int v : vs) y[static_cast<std::size_t>(v)] = 0;
    while (true) {
      fn(static_cast<const Position&>(y));
      std::size_t j = vs.size();
      bool advanced = false;
      while (j > 0) {
        --j;
        const auto v = static_cast<std::size_t>(vs[j]);
        if (y[v] + 1 < x[v]) {
          ++y[v];
          advanced = true;
          break;
        }
        y[v] = 0;
      }
      if (!advanced) break;
    }
  }
}

/// Complete duplicate-free move list of `pos`. For an explicit game, `pos`
/// is the one-element vector {id} and so are the returned positions.
/// Throws std::invalid_argument on a position outside the game.
std::vector<Position> enumerate_moves(const GameSpec& spec, const Position& pos);

/// True iff there is no move; for NIM_H: no edge fits inside supp(x).
bool is_terminal(const GameSpec& spec, const Position& pos);

/// Materializes a finite spec as a GameGraph with canonical ids (row-major
/// over the cap box). An explicit spec is returned as-is.
GameGraph explicit_from_boxed(const GameSpec& spec);

/// The combination game: positions are tuples of component positions (ids
/// row-major over the component counts); one move picks an outer edge H and
/// moves in every component game indexed by H simultaneously. Acyclic since
/// each move strictly decreases the sum of component longest-play values.
GameGraph h_combination(const std::vector<GameSpec>& inner,
                        const Hypergraph& outer);

/// Deterministic generator of games whose SG value drops on every move.
/// Each position gets a level in [0, max_tetris]; a positive-level position
/// moves to one mandatory target of every lower level plus a random subset
/// of further lower-level positions. By induction SG = Tetris = level. The
/// validity is not assumed anywhere: the SG-decrease checker is run against
/// the output in tests.
GameGraph random_sg_decreasing_game(std::uint64_t seed, int num_positions,
                                    int max_tetris);

}  // namespace hypernim
