#include "hypernim/json_io.hpp"

#include <stdexcept>

namespace hypernim {

namespace {

const json& require_field(const json& j, const char* key, const char* what) {
  if (!j.is_object())
    throw std::invalid_argument(std::string(what) + ": expected an object");
  auto it = j.find(key);
  if (it == j.end())
    throw std::invalid_argument(std::string(what) + ": missing field '" + key +
                                "'");
  return *it;
}

int require_int(const json& j, const char* what, int min_value = 0) {
  if (!j.is_number_integer())
    throw std::invalid_argument(std::string(what) + ": expected an integer");
  const auto v = j.get<long long>();
  if (v < min_value || v > 1'000'000'000)
    throw std::invalid_argument(std::string(what) + ": value out of range");
  return static_cast<int>(v);
}

std::vector<int> require_int_array(const json& j, const char* what,
                                   int min_value = 0) {
  if (!j.is_array())
    throw std::invalid_argument(std::string(what) + ": expected an array");
  std::vector<int> out;
  out.reserve(j.size());
  for (const json& e : j) out.push_back(require_int(e, what, min_value));
  return out;
}

}  // namespace

json hypergraph_to_json(const Hypergraph& h) {
  json edges = json::array();
  for (VertexSet e : h.edges()) edges.push_back(e.vertices());
  return json{{"n", h.vertex_count()}, {"edges", std::move(edges)}};
}

Hypergraph hypergraph_from_json(const json& j) {
  const int n = require_int(require_field(j, "n", "hypergraph"), "hypergraph.n");
  const json& edges = require_field(j, "edges", "hypergraph");
  if (!edges.is_array())
    throw std::invalid_argument("hypergraph.edges: expected an array");
  std::vector<std::vector<int>> lists;
  lists.reserve(edges.size());
  for (const json& e : edges)
    lists.push_back(require_int_array(e, "hypergraph.edges[]"));
  try {
    return Hypergraph::from_vertex_lists(n, lists);
  } catch (const std::invalid_argument& err) {
    throw std::invalid_argument(std::string("hypergraph.edges: ") + err.what());
  }
}

json position_to_json(const Position& x) { return json(x); }

Position position_from_json(const json& j) {
  return require_int_array(j, "position");
}

json game_graph_to_json(const GameGraph& g) {
  json moves = json::array();
  for (const auto& m : g.moves) moves.push_back(m);
  json out{{"positions", g.num_positions}, {"moves", std::move(moves)}};
  if (g.start) out["start"] = *g.start;
  return out;
}

GameGraph game_graph_from_json(const json& j) {
  GameGraph g;
  g.num_positions =
      require_int(require_field(j, "positions", "game"), "game.positions");
  const json& moves = require_field(j, "moves", "game");
  if (!moves.is_array())
    throw std::invalid_argument("game.moves: expected an array");
  for (const json& m : moves)
    g.moves.push_back(require_int_array(m, "game.moves[]"));
  if (auto it = j.find("start"); it != j.end())
    g.start = require_int(*it, "game.start");
  try {
    g.validate();
  } catch (const std::invalid_argument& err) {
    throw std::invalid_argument(std::string("game: ") + err.what());
  }
  return g;
}

json game_spec_to_json(const GameSpec& spec) {
  switch (spec.kind()) {
    case GameSpec::Kind::NimPile:
      return json{{"kind", "nim_pile"}, {"cap", spec.boxed().caps[0]}};
    case GameSpec::Kind::NimSum:
      return json{{"kind", "nim_sum"}, {"caps", spec.boxed().caps}};
    case GameSpec::Kind::NimMoore:
      return json{{"kind", "moore"},
                  {"n", spec.boxed().h.vertex_count()},
                  {"k", spec.subset_bound()},
                  {"caps", spec.boxed().caps}};
    case GameSpec::Kind::NimExact:
      return json{{"kind", "exact"},
                  {"n", spec.boxed().h.vertex_count()},
                  {"k", spec.subset_bound()},
                  {"caps", spec.boxed().caps}};
    case GameSpec::Kind::NimH:
      return json{{"kind", "nim_h"},
                  {"hypergraph", hypergraph_to_json(spec.boxed().h)},
                  {"caps", spec.boxed().caps}};
    case GameSpec::Kind::Explicit:
      return json{{"kind", "explicit"},
                  {"game", game_graph_to_json(spec.graph())}};
  }
  throw std::logic_error("unreachable");
}

GameSpec game_spec_from_json(const json& j) {
  const json& kind_field = require_field(j, "kind", "game spec");
  if (!kind_field.is_string())
    throw std::invalid_argument("game spec.kind: expected a string");
  const std::string kind = kind_field.get<std::string>();
  try {
    if (kind == "nim_pile")
      return GameSpec::nim_pile(
          require_int(require_field(j, "cap", "nim_pile"), "nim_pile.cap"));
    if (kind == "nim_sum")
      return GameSpec::nim_sum(require_int_array(
          require_field(j, "caps", "nim_sum"), "nim_sum.caps"));
    if (kind == "moore" || kind == "exact") {
      const int n = require_int(require_field(j, "n", kind.c_str()), "n", 1);
      const int k = require_int(require_field(j, "k", kind.c_str()), "k", 1);
      auto caps =
          require_int_array(require_field(j, "caps", kind.c_str()), "caps");
      return kind == "moore" ? GameSpec::nim_moore(n, k, std::move(caps))
                             : GameSpec::nim_exact(n, k, std::move(caps));
    }
    if (kind == "nim_h")
      return GameSpec::nim_h(
          hypergraph_from_json(require_field(j, "hypergraph", "nim_h")),
          require_int_array(require_field(j, "caps", "nim_h"), "nim_h.caps"));
    if (kind == "explicit")
      return GameSpec::explicit_game(
          game_graph_from_json(require_field(j, "game", "explicit")));
  } catch (const std::invalid_argument& err) {
    throw std::invalid_argument(std::string("game spec: ") + err.what());
  }
  throw std::invalid_argument("game spec.kind: unknown kind '" + kind + "'");
}

json value_table_to_json(const ValueTable& table) {
  json out{{"kind", table.kind == TableKind::SG ? "sg" : "tetris"},
           {"values", table.values}};
  if (table.caps)
    out["caps"] = *table.caps;
  else
    out["positions"] = table.values.size();
  return out;
}

json witness_to_json(const Witness& w) {
  json out{{"position", w.position},
           {"expected", w.expected},
           {"actual", w.actual},
           {"detail", w.detail}};
  if (w.move) out["move"] = *w.move;
  return out;
}

json report_to_json(const VerificationReport& report) {
  json out{{"check", report.check},
           {"status", report.pass ? "PASS" : "FAIL"},
           {"witness", report.witness ? witness_to_json(*report.witness)
                                      : json(nullptr)},
           {"stats",
            json{{"positions_examined", report.positions_examined},
                 {"elapsed_seconds", report.elapsed_seconds}}}};
  if (!report.note.empty()) out["note"] = report.note;
  return out;
}

json condition_result_to_json(const ConditionResult& result) {
  return json{{"status", result.pass ? "PASS" : "FAIL"},
              {"witness",
               result.violating ? json(result.violating->vertices())
                                : json(nullptr)}};
}

json tetris_verdict_to_json(const TetrisVerdict& verdict) {
  const char* status = verdict.status == TetrisStatus::Tetris ? "TETRIS"
                       : verdict.status == TetrisStatus::NotTetris
                           ? "NOT_TETRIS"
                           : "UNKNOWN";
  json out{{"status", status}};
  out["violating_subset"] = verdict.violating_subset
                                ? json(verdict.violating_subset->vertices())
                                : json(nullptr);
  out["gap"] = verdict.gap ? json{{"position", verdict.gap->first},
                                  {"unreachable_value", verdict.gap->second}}
                           : json(nullptr);
  if (!verdict.note.empty()) out["note"] = verdict.note;
  return out;
}

json combination_to_json(const CombinationInstance& inst) {
  json inner = json::array();
  for (const GameSpec& spec : inst.inner)
    inner.push_back(game_spec_to_json(spec));
  return json{{"outer", hypergraph_to_json(inst.outer)},
              {"inner", std::move(inner)}};
}

CombinationInstance combination_from_json(const json& j) {
  CombinationInstance inst;
  inst.outer = hypergraph_from_json(require_field(j, "outer", "combination"));
  const json& inner = require_field(j, "inner", "combination");
  if (!inner.is_array())
    throw std::invalid_argument("combination.inner: expected an array");
  for (const json& spec : inner)
    inst.inner.push_back(game_spec_from_json(spec));
  if (static_cast<std::size_t>(inst.outer.vertex_count()) != inst.inner.size())
    throw std::invalid_argument(
        "combination: outer vertex count must equal the inner game count");
  return inst;
}

std::string canonical_dump(const json& j) { return j.dump(); }

}  // namespace hypernim
