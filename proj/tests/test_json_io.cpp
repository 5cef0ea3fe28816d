#include "doctest.h"

#include "hypernim/json_io.hpp"

using namespace hypernim;

namespace {

Hypergraph hg(int n, const std::vector<std::vector<int>>& edges) {
  return Hypergraph::from_vertex_lists(n, edges);
}

}  // namespace

TEST_CASE("hypergraph canonical round trip is byte-exact") {
  const std::string canonical = R"({"edges":[[0],[0,1],[1,2]],"n":3})";
  const Hypergraph h = hypergraph_from_json(json::parse(canonical));
  CHECK(canonical_dump(hypergraph_to_json(h)) == canonical);

  // unsorted input canonicalizes to the same bytes
  const Hypergraph shuffled =
      hypergraph_from_json(json::parse(R"({"edges":[[2,1],[0,1],[0]],"n":3})"));
  CHECK(shuffled == h);
  CHECK(canonical_dump(hypergraph_to_json(shuffled)) == canonical);
}

TEST_CASE("hypergraph parser rejections") {
  CHECK_THROWS_AS(hypergraph_from_json(json::parse(R"({"n":2})")),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      hypergraph_from_json(json::parse(R"({"n":2,"edges":[[]]})")),
      std::invalid_argument);
  CHECK_THROWS_AS(
      hypergraph_from_json(json::parse(R"({"n":2,"edges":[[0,2]]})")),
      std::invalid_argument);
  CHECK_THROWS_AS(
      hypergraph_from_json(json::parse(R"({"n":2,"edges":[[0,1],[1,0]]})")),
      std::invalid_argument);
  CHECK_THROWS_AS(
      hypergraph_from_json(json::parse(R"({"n":2,"edges":[[0,0]]})")),
      std::invalid_argument);
  CHECK_THROWS_AS(
      hypergraph_from_json(json::parse(R"({"n":-1,"edges":[]})")),
      std::invalid_argument);
  CHECK_THROWS_AS(
      hypergraph_from_json(json::parse(R"({"n":2,"edges":[[0.5]]})")),
      std::invalid_argument);
}

TEST_CASE("position parsing") {
  CHECK(position_from_json(json::parse("[0,3,2]")) == Position{0, 3, 2});
  CHECK_THROWS_AS(position_from_json(json::parse("[-1]")),
                  std::invalid_argument);
  CHECK_THROWS_AS(position_from_json(json::parse("3")), std::invalid_argument);
}

TEST_CASE("game graph round trip and validation") {
  const std::string canonical = R"({"moves":[[],[0],[0,1]],"positions":3})";
  const GameGraph g = game_graph_from_json(json::parse(canonical));
  CHECK(canonical_dump(game_graph_to_json(g)) == canonical);

  CHECK_THROWS_AS(game_graph_from_json(
                      json::parse(R"({"positions":2,"moves":[[1],[0]]})")),
                  std::invalid_argument);  // cycle
  CHECK_THROWS_AS(game_graph_from_json(
                      json::parse(R"({"positions":1,"moves":[[3]]})")),
                  std::invalid_argument);  // out of range
  CHECK_THROWS_AS(game_graph_from_json(
                      json::parse(R"({"positions":2,"moves":[[]]})")),
                  std::invalid_argument);  // table size mismatch
  CHECK_THROWS_AS(game_graph_from_json(
                      json::parse(R"({"positions":2,"moves":[[],[0,0]]})")),
                  std::invalid_argument);  // duplicate move target
}

TEST_CASE("game spec round trips per kind") {
  const std::vector<std::string> docs = {
      R"({"cap":4,"kind":"nim_pile"})",
      R"({"caps":[1,2,3],"kind":"nim_sum"})",
      R"({"caps":[2,2,2],"k":2,"kind":"moore","n":3})",
      R"({"caps":[2,2,2],"k":2,"kind":"exact","n":3})",
      R"({"caps":[1,1],"hypergraph":{"edges":[[0,1]],"n":2},"kind":"nim_h"})",
      R"({"game":{"moves":[[],[0]],"positions":2},"kind":"explicit"})",
  };
  for (const std::string& doc : docs) {
    const GameSpec spec = game_spec_from_json(json::parse(doc));
    CHECK(canonical_dump(game_spec_to_json(spec)) == doc);
  }
}

TEST_CASE("game spec rejections") {
  CHECK_THROWS_AS(game_spec_from_json(json::parse(R"({"kind":"mystery"})")),
                  std::invalid_argument);
  CHECK_THROWS_AS(game_spec_from_json(json::parse(R"({"kind":"nim_pile"})")),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      game_spec_from_json(json::parse(
          R"({"kind":"nim_h","hypergraph":{"n":2,"edges":[[0]]},"caps":[1]})")),
      std::invalid_argument);  // caps length mismatch
  CHECK_THROWS_AS(
      game_spec_from_json(json::parse(R"({"kind":"moore","n":3,"k":4,"caps":[0,0,0]})")),
      std::invalid_argument);  // k out of range
}

TEST_CASE("value table export carries the domain") {
  const ValueTable boxed = sg_table(GameSpec::nim_sum({1, 1}));
  const json jb = value_table_to_json(boxed);
  CHECK(jb["kind"] == "sg");
  CHECK(jb["caps"] == json::parse("[1,1]"));
  CHECK(jb["values"] == json::parse("[0,1,1,0]"));

  GameGraph g;
  g.num_positions = 2;
  g.moves = {{}, {0}};
  const ValueTable explicit_table =
      tetris_table(GameSpec::explicit_game(g));
  const json je = value_table_to_json(explicit_table);
  CHECK(je["kind"] == "tetris");
  CHECK(je.contains("positions"));
  CHECK(!je.contains("caps"));
}

TEST_CASE("report and verdict exports") {
  const VerificationReport report = verify_z_equals_p(hg(2, {{0}, {1}}), {1, 1});
  const json j = report_to_json(report);
  CHECK(j["status"] == "FAIL");
  CHECK(j["witness"]["position"] == json::parse("[1,1]"));
  CHECK(j["stats"]["positions_examined"] == 4);

  const json cond = condition_result_to_json(intersection_condition(
      hg(2, {{0}, {1}})));
  CHECK(cond["status"] == "FAIL");
  CHECK(cond["witness"] == json::parse("[0,1]"));

  const json verdict =
      tetris_verdict_to_json(is_tetris(hg(2, {{0}, {1}}), {1, 1}));
  CHECK(verdict["status"] == "NOT_TETRIS");
  CHECK(verdict["violating_subset"] == json::parse("[0,1]"));
}

TEST_CASE("combination instance round trip") {
  const std::string doc =
      R"({"inner":[{"cap":2,"kind":"nim_pile"},{"caps":[1,1],"kind":"nim_sum"}],)"
      R"("outer":{"edges":[[0,1]],"n":2}})";
  const CombinationInstance inst = combination_from_json(json::parse(doc));
  CHECK(canonical_dump(combination_to_json(inst)) == doc);
  CHECK_THROWS_AS(
      combination_from_json(json::parse(
          R"({"outer":{"n":2,"edges":[[0,1]]},"inner":[{"kind":"nim_pile","cap":1}]})")),
      std::invalid_argument);  // arity mismatch
}
