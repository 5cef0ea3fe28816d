#pragma once

#include <string>

#include "json.hpp"

#include "hypernim/analysis.hpp"
#include "hypernim/combine.hpp"
#include "hypernim/games.hpp"
#include "hypernim/hypergraph.hpp"

namespace hypernim {

using json = nlohmann::json;

// Wire formats (canonical serialization re-parses to an equal value and
// re-serializes byte-identically):
//   Hypergraph     {"n": int, "edges": [[v,...], ...]}   edges (size, lex)-sorted
//   Position       [int, ...]
//   GameGraph      {"positions": int, "moves": [[id,...], ...], "start"?: int}
//   GameSpec       {"kind": "nim_pile"|"nim_sum"|"moore"|"exact"|"nim_h"|"explicit", ...}
//   ValueTable     {"kind": "sg"|"tetris", "caps": [...]|"positions": n, "values": [...]}
//   Report         {"check", "status", "witness", "stats", "note"?}
// Parsers throw std::invalid_argument with a field diagnostic on bad input.

json hypergraph_to_json(const Hypergraph& h);
Hypergraph hypergraph_from_json(const json& j);

json position_to_json(const Position& x);
Position position_from_json(const json& j);

json game_graph_to_json(const GameGraph& g);
GameGraph game_graph_from_json(const json& j);

json game_spec_to_json(const GameSpec& spec);
GameSpec game_spec_from_json(const json& j);

json value_table_to_json(const ValueTable& table);

json witness_to_json(const Witness& w);
json report_to_json(const VerificationReport& report);

json condition_result_to_json(const ConditionResult& result);
json tetris_verdict_to_json(const TetrisVerdict& verdict);

json combination_to_json(const CombinationInstance& inst);
CombinationInstance combination_from_json(const json& j);

/// Compact dump with alphabetically ordered keys: the byte-exact canonical
/// form used by the CLI's default output.
std::string canonical_dump(const json& j);

}  // namespace hypernim
