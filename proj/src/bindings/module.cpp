#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hypernim/analysis.hpp"
#include "hypernim/combine.hpp"
#include "hypernim/json_io.hpp"
#include "hypernim/packing.hpp"
#include "hypernim/suites.hpp"

namespace py = pybind11;

namespace {

using namespace hypernim;

std::vector<std::vector<int>> edges_as_lists(const Hypergraph& h) {
  std::vector<std::vector<int>> out;
  out.reserve(h.edges().size());
  for (VertexSet e : h.edges()) out.push_back(e.vertices());
  return out;
}

std::vector<std::vector<int>> sets_as_lists(const std::vector<VertexSet>& sets) {
  std::vector<std::vector<int>> out;
  out.reserve(sets.size());
  for (VertexSet e : sets) out.push_back(e.vertices());
  return out;
}

std::string tetris_status_name(TetrisStatus s) {
  switch (s) {
    case TetrisStatus::Tetris:
      return "TETRIS";
    case TetrisStatus::NotTetris:
      return "NOT_TETRIS";
    case TetrisStatus::Unknown:
      return "UNKNOWN";
  }
  return "UNKNOWN";
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "exact analysis of impartial games under hypergraph combination";

  py::class_<Hypergraph>(m, "Hypergraph")
      .def(py::init([](int n, const std::vector<std::vector<int>>& edges) {
             return Hypergraph::from_vertex_lists(n, edges);
           }),
           py::arg("n"), py::arg("edges"))
      .def_property_readonly("n", &Hypergraph::vertex_count)
      .def_property_readonly("edges", &edges_as_lists)
      .def("__eq__",
           [](const Hypergraph& a, const Hypergraph& b) { return a == b; })
      .def("__repr__", [](const Hypergraph& h) {
        return "Hypergraph(" + canonical_dump(hypergraph_to_json(h)) + ")";
      });

  py::class_<ConditionResult>(m, "ConditionResult")
      .def_property_readonly("ok",
                             [](const ConditionResult& r) { return r.pass; })
      .def_property_readonly(
          "violating",
          [](const ConditionResult& r) -> std::optional<std::vector<int>> {
            if (!r.violating) return std::nullopt;
            return r.violating->vertices();
          })
      .def("__bool__", [](const ConditionResult& r) { return r.pass; })
      .def("__repr__", [](const ConditionResult& r) {
        return canonical_dump(condition_result_to_json(r));
      });

  m.def("induced", [](const Hypergraph& h, const std::vector<int>& s) {
    return induced(h, VertexSet::from_vertices(s));
  });
  m.def("dimension", &dimension);
  m.def("is_intersecting", &is_intersecting);
  m.def("has_transversal_edge",
        [](const Hypergraph& h) -> std::optional<std::vector<int>> {
          const auto e = has_transversal_edge(h);
          if (!e) return std::nullopt;
          return e->vertices();
        });
  m.def("intersection_condition", &intersection_condition);
  m.def("dim2_condition", &dim2_condition);
  m.def("slow_move", [](const Position& x, const std::vector<int>& h) {
    return slow_move(x, VertexSet::from_vertices(h));
  });
  m.def("fast_move", [](const Position& x, const std::vector<int>& h) {
    return fast_move(x, VertexSet::from_vertices(h));
  });
  m.def("moore_hypergraph", &moore_hypergraph);
  m.def("exact_hypergraph", &exact_hypergraph);
  m.def("combine_hypergraphs", &combine_hypergraphs);
  m.def("fig1_hypergraph", &fig1_hypergraph);

  m.def("max_packing", [](const Hypergraph& h, const Position& x) {
    const PackingResult r = max_packing(h, x);
    return py::make_tuple(r.value, r.witness.mult);
  });
  m.def("matching_number", &matching_number);
  m.def("x_all", [](const Hypergraph& h, const Position& x) {
    return sets_as_lists(x_all(h, x));
  });
  m.def("x_pack", [](const Hypergraph& h, const Position& x) {
    return sets_as_lists(x_pack(h, x));
  });

  py::class_<GameGraph>(m, "GameGraph")
      .def(py::init([](int num_positions, std::vector<std::vector<int>> moves,
                       std::optional<int> start) {
             GameGraph g{num_positions, std::move(moves), start};
             g.validate();
             return g;
           }),
           py::arg("num_positions"), py::arg("moves"),
           py::arg("start") = std::nullopt)
      .def_readonly("num_positions", &GameGraph::num_positions)
      .def_readonly("moves", &GameGraph::moves)
      .def_readonly("start", &GameGraph::start);

  py::class_<GameSpec>(m, "GameSpec")
      .def_static("nim_pile", &GameSpec::nim_pile)
      .def_static("nim_sum", &GameSpec::nim_sum)
      .def_static("nim_moore", &GameSpec::nim_moore)
      .def_static("nim_exact", &GameSpec::nim_exact)
      .def_static("nim_h", &GameSpec::nim_h)
      .def_static("explicit_game", &GameSpec::explicit_game)
      .def_property_readonly("is_boxed", &GameSpec::is_boxed)
      .def_property_readonly("position_count", &GameSpec::position_count)
      .def("__repr__", [](const GameSpec& s) {
        return "GameSpec(" + canonical_dump(game_spec_to_json(s)) + ")";
      });

  m.def("enumerate_moves", &enumerate_moves);
  m.def("is_terminal", &is_terminal);
  m.def("explicit_from_boxed", &explicit_from_boxed);
  m.def("h_combination", &h_combination);
  m.def("random_sg_decreasing_game", &random_sg_decreasing_game,
        py::arg("seed"), py::arg("num_positions"), py::arg("max_tetris"));

  py::class_<ValueTable>(m, "ValueTable")
      .def_property_readonly("kind",
                             [](const ValueTable& t) {
                               return t.kind == TableKind::SG ? "sg" : "tetris";
                             })
      .def_readonly("caps", &ValueTable::caps)
      .def_readonly("values", &ValueTable::values)
      .def("at", &ValueTable::at)
      .def("__repr__", [](const ValueTable& t) {
        return canonical_dump(value_table_to_json(t));
      });

  py::class_<Witness>(m, "Witness")
      .def_readonly("position", &Witness::position)
      .def_readonly("move", &Witness::move)
      .def_readonly("expected", &Witness::expected)
      .def_readonly("actual", &Witness::actual)
      .def_readonly("detail", &Witness::detail);

  py::class_<VerificationReport>(m, "VerificationReport")
      .def_property_readonly("ok",
                             [](const VerificationReport& r) { return r.pass; })
      .def_readonly("check", &VerificationReport::check)
      .def_readonly("witness", &VerificationReport::witness)
      .def_readonly("positions_examined",
                    &VerificationReport::positions_examined)
      .def_readonly("elapsed_seconds", &VerificationReport::elapsed_seconds)
      .def_readonly("note", &VerificationReport::note)
      .def("__bool__", [](const VerificationReport& r) { return r.pass; })
      .def("__repr__", [](const VerificationReport& r) {
        return canonical_dump(report_to_json(r));
      });

  py::class_<TetrisVerdict>(m, "TetrisVerdict")
      .def_property_readonly("status",
                             [](const TetrisVerdict& v) {
                               return tetris_status_name(v.status);
                             })
      .def_property_readonly(
          "violating_subset",
          [](const TetrisVerdict& v) -> std::optional<std::vector<int>> {
            if (!v.violating_subset) return std::nullopt;
            return v.violating_subset->vertices();
          })
      .def_readonly("gap", &TetrisVerdict::gap)
      .def_readonly("note", &TetrisVerdict::note)
      .def("__repr__", [](const TetrisVerdict& v) {
        return canonical_dump(tetris_verdict_to_json(v));
      });

  m.def("mex", &mex);
  m.def("nim_xor", &nim_xor);
  m.def("sg_table", &sg_table);
  m.def("tetris_table", &tetris_table);
  m.def("p_positions_recursive", &p_positions_recursive);
  m.def("is_sg_decreasing", &is_sg_decreasing);
  m.def("z_set", &z_set);
  m.def("verify_z_equals_p", &verify_z_equals_p);
  m.def("moore_p_criterion", &moore_p_criterion);
  m.def("find_gap_violation", &find_gap_violation);
  m.def("is_tetris", &is_tetris);

  py::class_<CombinationInstance>(m, "CombinationInstance")
      .def(py::init([](std::vector<GameSpec> inner, Hypergraph outer) {
             return CombinationInstance{std::move(inner), std::move(outer)};
           }),
           py::arg("inner"), py::arg("outer"))
      .def_readonly("inner", &CombinationInstance::inner)
      .def_readonly("outer", &CombinationInstance::outer);

  m.def("sg_via_theorem1", &sg_via_theorem1);
  m.def("tetris_via_theorem2", &tetris_via_theorem2);
  m.def("verify_theorem1", &verify_theorem1, py::arg("instance"),
        py::arg("require_sg_decreasing") = true);
  m.def("verify_theorem2", &verify_theorem2);
  m.def("verify_superposition", &verify_superposition);
  m.def("np_gadget", [](const Hypergraph& h) {
    auto [hstar, x] = np_gadget(h);
    return py::make_tuple(std::move(hstar), std::move(x));
  });

  py::class_<Fig1Numbers>(m, "Fig1Numbers")
      .def_readonly("condition_pass", &Fig1Numbers::condition_pass)
      .def_readonly("longest_play_all_ones",
                    &Fig1Numbers::longest_play_all_ones)
      .def_readonly("after_slow_triple", &Fig1Numbers::after_slow_triple)
      .def_readonly("after_slow_quad", &Fig1Numbers::after_slow_quad)
      .def_readonly("gap", &Fig1Numbers::gap);
  m.def("fig1_numbers", &fig1_numbers);

  m.def("verify_bouton", &verify_bouton, py::arg("cap") = 7);
  m.def("verify_moore", &verify_moore, py::arg("cap") = 3);
  m.def("verify_theorem1_suite", &verify_theorem1_suite, py::arg("seed") = 1,
        py::arg("trials") = 100);
  m.def("verify_theorem2_suite", &verify_theorem2_suite, py::arg("seed") = 1,
        py::arg("trials") = 100);
  m.def("verify_theorem3_suite", &verify_theorem3_suite, py::arg("seed") = 1,
        py::arg("trials") = 100, py::arg("cap") = 3);
  m.def("verify_zp_suite", &verify_zp_suite, py::arg("seed") = 1,
        py::arg("trials") = 100, py::arg("cap") = 3);
  m.def("verify_superposition_suite", &verify_superposition_suite,
        py::arg("seed") = 1, py::arg("trials") = 30);
  m.def("verify_packing_oracle_suite", &verify_packing_oracle_suite,
        py::arg("seed") = 1, py::arg("trials") = 100, py::arg("cap") = 3);
  m.def("verify_gadget_suite", &verify_gadget_suite, py::arg("seed") = 1,
        py::arg("trials") = 50);
  m.def("verify_intersecting_suite", &verify_intersecting_suite,
        py::arg("seed") = 1, py::arg("trials") = 100, py::arg("cap") = 3);
  m.def("verify_packing_properties_suite", &verify_packing_properties_suite,
        py::arg("seed") = 1, py::arg("trials") = 100);

  // JSON round trips (canonical compact dumps).
  m.def("hypergraph_to_json",
        [](const Hypergraph& h) { return canonical_dump(hypergraph_to_json(h)); });
  m.def("hypergraph_from_json", [](const std::string& text) {
    return hypergraph_from_json(json::parse(text));
  });
  m.def("game_spec_to_json",
        [](const GameSpec& s) { return canonical_dump(game_spec_to_json(s)); });
  m.def("game_spec_from_json", [](const std::string& text) {
    return game_spec_from_json(json::parse(text));
  });
}
