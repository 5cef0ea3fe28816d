#pragma once

#include <utility>
#include <vector>

#include "hypernim/analysis.hpp"
#include "hypernim/games.hpp"
#include "hypernim/hypergraph.hpp"

namespace hypernim {

/// A combination of finite inner games through an outer edge family over
/// the component indices.
struct CombinationInstance {
  std::vector<GameSpec> inner;
  Hypergraph outer;
};

/// SG value of the combination at a joint position via the theorem-1
/// reduction: take each component's SG value, then read off the SG value of
/// the outer NIM game at that vector (its table built on the componentwise
/// maximum SG values, which always covers the needed box). `component_ids`
/// holds one position id per component. The reduction is an identity when
/// every component drops its SG value on each move; verify_theorem1 checks
/// exactly that.
int sg_via_theorem1(const CombinationInstance& inst,
                    const std::vector<int>& component_ids);

/// Longest-play analogue of the reduction (theorem 2); an identity for all
/// finite games, with no side condition.
int tetris_via_theorem2(const CombinationInstance& inst,
                        const std::vector<int>& component_ids);

/// Compares the direct SG table of the combination game against the
/// reduction at every joint position. With `require_sg_decreasing` the
/// precondition is checked first and a non-SG-decreasing component raises
/// std::invalid_argument; without it the comparison may legitimately FAIL,
/// and the report carries the first mismatch in row-major joint order.
VerificationReport verify_theorem1(const CombinationInstance& inst,
                                   bool require_sg_decreasing);

/// Compares the direct longest-play table of the combination against the
/// reduction at every joint position. Must PASS on every instance; a FAIL
/// report indicates a bug, and tests assert it never happens.
VerificationReport verify_theorem2(const CombinationInstance& inst);

/// Checks that a combination of Tetris edge families is again Tetris at box
/// scale: preconditions via is_tetris on every input (throws, naming the
/// offender, if one is not Tetris on its caps), then the combined family
/// must show no gap violation on the cap box and, when its dimension stays
/// <= 3, must pass the condition sweep (an exact verdict). For combined
/// dimension >= 4 the report notes that the verdict is box-limited.
VerificationReport verify_superposition(const Hypergraph& outer,
                                        const std::vector<Hypergraph>& inner,
                                        int cap);

/// Hardness gadget: append a fresh vertex w to every edge and play from the
/// position with one stone per original vertex and |edges| stones on w. The
/// result is intersecting (all edges share w) and its longest-play value
/// equals the matching number of the input, which chains into NP-hardness
/// of both the longest-play and the SG value. Throws on an edgeless input.
std::pair<Hypergraph, Position> np_gadget(const Hypergraph& h);

}  // namespace hypernim
