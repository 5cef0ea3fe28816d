#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <utility>

#include "hypernim/analysis.hpp"
#include "hypernim/combine.hpp"
#include "hypernim/rng.hpp"

namespace hypernim {

// Deterministic instance generators for the seeded verification suites.
// Everything draws from SplitMix64 only (see rng.hpp).

/// 1..max_edges distinct random nonempty edges of size <= max_dim over
/// 1..max_n vertices.
Hypergraph random_hypergraph(SplitMix64& rng, int max_n, int max_dim,
                             int max_edges);

/// Same, but over exactly n vertices.
Hypergraph random_hypergraph_exact(SplitMix64& rng, int n, int max_dim,
                                   int max_edges);

/// Pairwise intersecting family, grown edge by edge (each candidate must
/// meet everything accepted so far).
Hypergraph random_intersecting_hypergraph(SplitMix64& rng, int max_n,
                                          int max_edges);

/// dim <= 3 family over exactly n vertices that passes the condition sweep
/// (rejection sampling; falls back to a single random edge, which always
/// passes).
Hypergraph random_tetris_hypergraph(SplitMix64& rng, int n);

/// Random DAG game: edges only point to lower ids, out-degree <= 3, some
/// positions terminal.
GameGraph random_dag_game(SplitMix64& rng, int max_positions);

/// Exact numbers of the `fig1` example (9-vertex family of triples and
/// quadruples): condition verdict, longest-play value at all-ones, the value
/// after each slow edge move, and the first (position, value) pair no move
/// can reach.
struct Fig1Numbers {
  bool condition_pass = false;
  int longest_play_all_ones = 0;
  std::array<int, 9> after_slow_triple{};  // after the move by T_j
  std::array<int, 9> after_slow_quad{};    // after the move by F_j
  std::optional<std::pair<Position, int>> gap;
};
Fig1Numbers fig1_numbers();

// Suite runners behind `verify <name>`. Each report's note records the
// parameters of the run.

/// SG of the 3-pile sum equals the XOR of the piles on the full cap box.
VerificationReport verify_bouton(int cap);

/// Digit-column criterion equals the peeled P-set for n in {3,4}, k < n.
VerificationReport verify_moore(int cap);

/// Seeded SG-decreasing combinations: the SG reduction holds on every
/// trial; additionally the fixed pile+sum product instance must FAIL
/// without the precondition.
VerificationReport verify_theorem1_suite(std::uint64_t seed, int trials);

/// Seeded arbitrary combinations: the longest-play reduction always holds.
VerificationReport verify_theorem2_suite(std::uint64_t seed, int trials);

/// Seeded dim<=3 families on <=5 vertices plus every graph on <=4 vertices:
/// condition PASS iff no gap violation on the all-`cap` box, and every
/// condition failure shows an SG-zero position with positive longest-play
/// value already inside the all-ones box.
VerificationReport verify_theorem3_suite(std::uint64_t seed, int trials,
                                         int cap);

/// Seeded families of any dimension: zero-longest-play set equals the P-set
/// on the all-`cap` box iff the condition sweep passes.
VerificationReport verify_zp_suite(std::uint64_t seed, int trials, int cap);

/// Seeded pairs of small Tetris families: the combined family stays clean
/// on the all-2 box.
VerificationReport verify_superposition_suite(std::uint64_t seed, int trials);

/// Seeded NIM_H boxes: the game-level longest-play table equals the exact
/// packing value at every position (the two definitions agree).
VerificationReport verify_packing_oracle_suite(std::uint64_t seed, int trials,
                                               int cap);

/// Seeded hardness gadgets: gadget value = matching number, the gadget
/// family is intersecting, and the SG value at the gadget position equals
/// the same number.
VerificationReport verify_gadget_suite(std::uint64_t seed, int trials);

/// Seeded intersecting families: SG table equals longest-play table
/// pointwise on the all-`cap` box.
VerificationReport verify_intersecting_suite(std::uint64_t seed, int trials,
                                             int cap);

/// Seeded (h, x) pairs: the slow/fast sandwich, the |H| drop bound, the
/// usable-edge slow-move identity, the fast-move zero identity, and the
/// unit-decrement bound for exact packing values.
VerificationReport verify_packing_properties_suite(std::uint64_t seed,
                                                   int trials);

}  // namespace hypernim
