#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hypernim/games.hpp"
#include "hypernim/hypergraph.hpp"

namespace hypernim {

/// Smallest nonnegative integer not in `values`.
int mex(const std::vector<int>& values);

/// Bitwise XOR fold.
int nim_xor(const std::vector<int>& values);

enum class TableKind { SG, Tetris };

/// Exact value table over a finite game: indexed by position id (row-major
/// over the cap box for boxed games, graph id for explicit ones). Immutable
/// once built.
struct ValueTable {
  TableKind kind = TableKind::SG;
  std::optional<std::vector<int>> caps;  // present for boxed domains
  std::vector<int> values;

  int at_id(std::size_t id) const { return values[id]; }
  /// Boxed domains only.
  int at(const Position& x) const;
  int max_value() const;
};

/// Exact SG values for all positions: mex recursion evaluated iteratively
/// along a topological order (ascending box id for boxed games), so deep
/// boxes cannot overflow the stack.
ValueTable sg_table(const GameSpec& spec);

/// Exact longest-play lengths: 0 at terminals, else 1 + max over all moves.
ValueTable tetris_table(const GameSpec& spec);

/// The unique independent absorbing position set, computed by terminal
/// peeling without any SG values: a position belongs to it iff none of its
/// moves stays in it. Returned in ascending id order (one-element id vectors
/// for explicit games).
std::vector<Position> p_positions_recursive(const GameSpec& spec);

/// Flag form of p_positions_recursive, indexed by position id.
std::vector<char> p_position_flags(const GameSpec& spec);

struct Witness {
  Position position;
  std::optional<Position> move;
  long long expected = 0;
  long long actual = 0;
  std::string detail;
};

struct VerificationReport {
  bool pass = true;
  std::string check;
  std::optional<Witness> witness;
  std::size_t positions_examined = 0;
  double elapsed_seconds = 0.0;
  std::string note;
};

/// PASS iff every move strictly decreases the SG value. Also recomputes the
/// two equivalent formulations — SG table equals the longest-play table, and
/// from every position each value below the longest-play value is realized
/// by one move — and throws std::logic_error if the three verdicts ever
/// disagree (that would be a bug here, not a property of the input).
VerificationReport is_sg_decreasing(const GameSpec& spec);

/// Positions of the box with longest-play value zero: no edge inside the
/// support.
std::vector<Position> z_set(const Hypergraph& h, const std::vector<int>& caps);

/// PASS iff the zero-longest-play set equals the SG-zero set on the box.
VerificationReport verify_z_equals_p(const Hypergraph& h,
                                     const std::vector<int>& caps);

/// true iff every binary digit column of x sums to 0 mod k+1. Classical
/// winning criterion for the bounded-pile-count NIM variant; validated here
/// purely against the brute-force position partition (see tests).
bool moore_p_criterion(const Position& x, int k);

/// First (x, v) in the box, x in colex order and v ascending, such that
/// 0 <= v < T(x) and no move from x reaches longest-play value v. Moves only
/// decrease coordinates, so targets stay inside the box and the box table is
/// exact. For each edge H ⊆ supp(x), the values reachable by H-moves form
/// exactly the interval [T(fast), T(slow)] — slow/fast bound every H-target
/// coordinatewise and single decrements change T by at most 1 — so the scan
/// is pure interval arithmetic on the table.
std::optional<std::pair<Position, int>> find_gap_violation(
    const Hypergraph& h, const std::vector<int>& caps);

enum class TetrisStatus { Tetris, NotTetris, Unknown };

struct TetrisVerdict {
  TetrisStatus status = TetrisStatus::Unknown;
  /// Condition-sweep counterexample, when the sweep fails.
  std::optional<VertexSet> violating_subset;
  /// A concrete (position, unreachable value) pair found within the caps.
  std::optional<std::pair<Position, int>> gap;
  std::string note;
};

/// Decides whether NIM_h drops its SG value on every move. Exact for
/// dimension <= 3 via the induced-transversal condition; for dimension >= 4
/// the condition is only necessary, so a passing condition with no
/// counterexample inside the cap box yields Unknown rather than an unsound
/// Tetris claim.
TetrisVerdict is_tetris(const Hypergraph& h, const std::vector<int>& caps);

}  // namespace hypernim
