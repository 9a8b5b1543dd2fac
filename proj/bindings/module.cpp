#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "symrep/aut.hpp"
#include "symrep/checks.hpp"
#include "symrep/constructions.hpp"
#include "symrep/graph_io.hpp"
#include "symrep/hitting.hpp"
#include "symrep/representativeness.hpp"
#include "symrep/symmetrize.hpp"

namespace py = pybind11;
using namespace symrep;

namespace {

py::object rational_to_fraction(const Rational& q) {
  static py::object fraction = py::module_::import("fractions").attr("Fraction");
  std::ostringstream text;
  text << boost::multiprecision::numerator(q) << "/" << boost::multiprecision::denominator(q);
  return fraction(py::str(text.str()));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "representativeness invariants and invariant transversals of finite graphs";

  py::register_exception<Error>(m, "SymrepError");

  py::class_<GraphKind>(m, "GraphKind")
      .def(py::init([](bool directed, bool loops) {
             return GraphKind{directed, loops};
           }),
           py::arg("directed") = false, py::arg("loops_allowed") = false)
      .def_readwrite("directed", &GraphKind::directed)
      .def_readwrite("loops_allowed", &GraphKind::loops_allowed)
      .def(py::self == py::self);

  py::class_<Graph>(m, "Graph")
      .def(py::init<GraphKind, int, const std::vector<Edge>&>(), py::arg("kind"), py::arg("n"),
           py::arg("edges"))
      .def_property_readonly("kind", &Graph::kind)
      .def_property_readonly("n", &Graph::vertex_count)
      .def_property_readonly("edges", &Graph::edges)
      .def("edge_count", &Graph::edge_count)
      .def("has_edge", &Graph::has_edge)
      .def("edge_id", &Graph::edge_id)
      .def("degree", &Graph::degree)
      .def("__repr__", [](const Graph& g) {
        return "<Graph " + std::string(g.kind().directed ? "directed" : "undirected") + " n=" +
               std::to_string(g.vertex_count()) + " m=" + std::to_string(g.edge_count()) + ">";
      });

  m.def("make_graph", &make_graph, py::arg("kind"), py::arg("n"), py::arg("edges"));
  m.def("induced_subgraph", &induced_subgraph);
  m.def("components", &components);
  m.def("disjoint_union", &disjoint_union);

  py::class_<Perm>(m, "Perm")
      .def(py::init<std::vector<int>>(), py::arg("images"))
      .def_property_readonly("images", &Perm::images)
      .def("__call__", [](const Perm& p, int i) { return p(i); })
      .def("compose", &Perm::compose)
      .def("inverse", &Perm::inverse)
      .def_static("identity", &Perm::identity);

  py::class_<PermAction>(m, "PermAction")
      .def(py::init<int, std::vector<Perm>>(), py::arg("n"), py::arg("generators"))
      .def_readonly("n", &PermAction::n)
      .def_readonly("generators", &PermAction::generators);

  py::class_<OrbitPartition>(m, "OrbitPartition")
      .def_readonly("classes", &OrbitPartition::classes)
      .def_readonly("point_to_class", &OrbitPartition::point_to_class)
      .def("class_of", &OrbitPartition::class_of);

  m.def("orbits", &orbits);
  m.def("act_on_set", &act_on_set);

  py::class_<SetFamily>(m, "SetFamily")
      .def(py::init<std::vector<std::vector<int>>>(), py::arg("sets"))
      .def_property_readonly("sets", &SetFamily::sets)
      .def("max_cardinality", &SetFamily::max_cardinality)
      .def("__len__", &SetFamily::size);

  m.def("is_invariant_family", &is_invariant_family);
  m.def("verify_transversal", &verify_transversal);

  py::class_<SymmetrizeResult>(m, "SymmetrizeResult")
      .def_readonly("invariant_transversal", &SymmetrizeResult::invariant_transversal)
      .def_readonly("max_member_size", &SymmetrizeResult::max_member_size)
      .def_readonly("bound", &SymmetrizeResult::bound)
      .def_property_readonly("neumann_sums", [](const SymmetrizeResult& r) {
        py::list sums;
        for (const Rational& q : r.neumann_sums) sums.append(rational_to_fraction(q));
        return sums;
      });

  m.def("symmetrize", &symmetrize, py::arg("action"), py::arg("family"), py::arg("transversal"));
  m.def("neumann_sum",
        [](const PermAction& a, const std::vector<int>& f, const std::vector<int>& x) {
          return rational_to_fraction(neumann_sum(a, f, x));
        });

  py::enum_<Mode>(m, "Mode").value("VERTEX", Mode::Vertex).value("EDGE", Mode::Edge);

  py::class_<OccurrenceFamily>(m, "OccurrenceFamily")
      .def_readonly("mode", &OccurrenceFamily::mode)
      .def_readonly("host", &OccurrenceFamily::host)
      .def_readonly("sets", &OccurrenceFamily::sets)
      .def_readonly("pattern_sizes", &OccurrenceFamily::pattern_sizes);

  m.def("enumerate_occurrences", &enumerate_occurrences, py::arg("host"), py::arg("patterns"),
        py::arg("mode"));
  m.def("contains_subgraph", &contains_subgraph);
  m.def("isomorphic", &isomorphic);
  m.def("predicate_family", &predicate_family, py::arg("host"), py::arg("subset_size"),
        py::arg("predicate"));

  py::class_<AutResult>(m, "AutResult")
      .def_readonly("generators", &AutResult::generators)
      .def_readonly("order", &AutResult::order)
      .def_readonly("order_exact", &AutResult::order_exact)
      .def_readonly("vertex_orbits", &AutResult::vertex_orbits)
      .def_readonly("edge_orbits", &AutResult::edge_orbits);

  m.def("automorphisms", [](const Graph& g) { return automorphisms(g); });
  m.def("is_vertex_transitive", [](const Graph& g) { return is_vertex_transitive(g); });
  m.def("is_edge_transitive", [](const Graph& g) { return is_edge_transitive(g); });

  py::class_<HittingResult>(m, "HittingResult")
      .def_readonly("size", &HittingResult::size)
      .def_readonly("witness", &HittingResult::witness)
      .def_readonly("nodes_explored", &HittingResult::nodes_explored)
      .def_readonly("optimal", &HittingResult::optimal);

  py::class_<InvariantHittingResult>(m, "InvariantHittingResult")
      .def_readonly("size", &InvariantHittingResult::size)
      .def_readonly("witness", &InvariantHittingResult::witness)
      .def_readonly("chosen_classes", &InvariantHittingResult::chosen_classes)
      .def_readonly("nodes_explored", &InvariantHittingResult::nodes_explored)
      .def_readonly("optimal", &InvariantHittingResult::optimal);

  m.def("min_hitting_set", [](const SetFamily& fam) { return min_hitting_set(fam); });
  m.def("min_invariant_hitting", [](const SetFamily& fam, const OrbitPartition& part) {
    return min_invariant_hitting(fam, part);
  });

  py::class_<RepResult>(m, "RepResult")
      .def_readonly("value", &RepResult::value)
      .def_readonly("witness", &RepResult::witness)
      .def_readonly("has_symmetric", &RepResult::has_symmetric)
      .def_readonly("symmetric_value", &RepResult::symmetric_value)
      .def_readonly("symmetric_witness", &RepResult::symmetric_witness)
      .def_readonly("mode", &RepResult::mode)
      .def_readonly("bound_factor", &RepResult::bound_factor);

  m.def(
      "representativeness",
      [](const Graph& host, const std::vector<Graph>& patterns, Mode mode, bool with_symmetric) {
        return representativeness(host, patterns, mode, with_symmetric);
      },
      py::arg("host"), py::arg("patterns"), py::arg("mode"), py::arg("with_symmetric") = true);

  py::enum_<StarOrientation>(m, "StarOrientation")
      .value("NONE", StarOrientation::None)
      .value("OUT", StarOrientation::Out)
      .value("IN", StarOrientation::In);

  m.def("cycle", &cycle);
  m.def("path", &path);
  m.def("star", &star, py::arg("leaf_count"), py::arg("orientation") = StarOrientation::None);
  m.def("complete", &complete);
  m.def("complete_bipartite", &complete_bipartite, py::arg("left"), py::arg("right"),
        py::arg("directed_across") = false);
  m.def("cube_q3", &cube_q3);
  m.def("petersen", &petersen);
  m.def("chair", &chair);
  m.def("circulant", &circulant);
  m.def("vt_completion", &vt_completion);
  m.def("disjoint_copies", &disjoint_copies);
  m.def("chained_copies", &chained_copies);
  m.def("joined_stars", &joined_stars);

  py::class_<HoneycombTorus>(m, "HoneycombTorus")
      .def_readonly("graph", &HoneycombTorus::graph)
      .def_readonly("marked_edge_ids", &HoneycombTorus::marked_edge_ids);
  m.def("honeycomb_torus", &honeycomb_torus);

  py::class_<CheckReport>(m, "CheckReport")
      .def_readonly("name", &CheckReport::name)
      .def_readonly("instance", &CheckReport::instance)
      .def_readonly("quantities", &CheckReport::quantities)
      .def_readonly("pass_", &CheckReport::pass)
      .def_property_readonly("passed", [](const CheckReport& r) { return r.pass; })
      .def_readonly("witnesses", &CheckReport::witnesses);

  py::enum_<Lemma1Class>(m, "Lemma1Class")
      .value("CYCLE", Lemma1Class::Cycle)
      .value("CHAIN", Lemma1Class::Chain)
      .value("STAR", Lemma1Class::Star)
      .value("FOUR_VERTEX", Lemma1Class::FourVertex)
      .value("CONTAINS_D5", Lemma1Class::ContainsD5)
      .value("DISCONNECTED", Lemma1Class::Disconnected);

  py::enum_<Prop1Case>(m, "Prop1Case")
      .value("NO_HANGING_EDGES", Prop1Case::NoHangingEdges)
      .value("DIRECTED_STAR", Prop1Case::DirectedStar)
      .value("PATH_STAR", Prop1Case::PathStar)
      .value("CLAW_HONEYCOMB", Prop1Case::ClawHoneycomb)
      .value("JOINED_STARS", Prop1Case::JoinedStars);

  py::class_<Prop1Params>(m, "Prop1Params")
      .def(py::init<>())
      .def_readwrite("kase", &Prop1Params::kase)
      .def_readwrite("k", &Prop1Params::k)
      .def_readwrite("m", &Prop1Params::m)
      .def_readwrite("l", &Prop1Params::l)
      .def_readwrite("n", &Prop1Params::n);

  m.def("check_corollary1", &check_corollary1);
  m.def("check_theorem1", &check_theorem1, py::arg("k"), py::arg("copies"),
        py::arg("connected_variant") = false);
  m.def("check_disconnected_bound", &check_disconnected_bound);
  m.def("lemma1_classify", &lemma1_classify);
  m.def("check_lemma1_exhaustive", &check_lemma1_exhaustive);
  m.def("find_lemma1_graph", &find_lemma1_graph);
  m.def("check_theorem2", &check_theorem2);
  m.def("check_proposition1", &check_proposition1);
  m.def("check_2k2_example", &check_2k2_example);
  m.def("mars_demo", &mars_demo);

  m.def("parse_graph", py::overload_cast<const std::string&>(&parse_graph));
  m.def("serialize_graph", &serialize_graph);
  m.def("load_graph_file", &load_graph_file);
  m.def("save_graph_file", &save_graph_file);

#ifdef VERSION_INFO
#define SYMREP_STR2(x) #x
#define SYMREP_STR(x) SYMREP_STR2(x)
  m.attr("__version__") = SYMREP_STR(VERSION_INFO);
#else
  m.attr("__version__") = "dev";
#endif
}
