#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "modcomp/braid.hpp"
#include "modcomp/patch.hpp"
#include "modcomp/report.hpp"

namespace py = pybind11;
using namespace modcomp;

namespace {

Signature make_signature(const std::array<int, 4>& periods) {
  Signature s{periods};
  s.validate();
  return s;
}

GeneratingVector make_vector(const std::array<int, 4>& c) {
  return GeneratingVector{c};
}

}  // namespace

PYBIND11_MODULE(modcomp, m) {
  m.doc() = "finite group actions on surfaces over a four-cone-point "
            "sphere: generating vectors, modular orbits, tilings, and "
            "partial isometries";

  py::register_exception<SpecError>(m, "SpecError");
  py::register_exception<CapExceeded>(m, "CapExceeded");

  py::class_<GroupTable>(m, "GroupTable")
      .def_property_readonly("order", &GroupTable::order)
      .def_property_readonly("name", &GroupTable::name)
      .def_property_readonly("ordering_fingerprint",
                             &GroupTable::ordering_fingerprint)
      .def("mul", &GroupTable::mul)
      .def("inv", &GroupTable::inv)
      .def("elem_order", &GroupTable::elem_order)
      .def("elem_name", &GroupTable::elem_name)
      .def("generates", &GroupTable::generates)
      .def("__repr__", [](const GroupTable& g) {
        return "<GroupTable " + g.name() + " order " +
               std::to_string(g.order()) + ">";
      });

  py::class_<Automorphism>(m, "Automorphism")
      .def_readonly("image", &Automorphism::image)
      .def("__call__", &Automorphism::operator());

  py::class_<Signature>(m, "Signature")
      .def(py::init(&make_signature))
      .def_readonly("periods", &Signature::periods);

  py::class_<GeneratingVector>(m, "GeneratingVector")
      .def(py::init(&make_vector))
      .def_readonly("entries", &GeneratingVector::c)
      .def("__eq__", [](const GeneratingVector& a,
                        const GeneratingVector& b) { return a == b; });

  py::class_<VectorClass>(m, "VectorClass")
      .def_readonly("representative", &VectorClass::representative)
      .def_readonly("class_index", &VectorClass::class_index)
      .def_readonly("orbit_size", &VectorClass::orbit_size);

  py::class_<BraidMove>(m, "BraidMove")
      .def_static("phi", &BraidMove::phi)
      .def_static("phi_inverse", &BraidMove::phi_inverse)
      .def_static("pure", &BraidMove::pure)
      .def("label", &BraidMove::label);

  py::class_<StratumPartition>(m, "StratumPartition")
      .def_readonly("orbits", &StratumPartition::orbits);

  py::enum_<CutId>(m, "CutId")
      .value("E1", CutId::E1)
      .value("E2", CutId::E2)
      .value("E3", CutId::E3)
      .value("E4", CutId::E4);

  py::class_<CrossoverSequence>(m, "CrossoverSequence")
      .def_readonly("taus", &CrossoverSequence::taus)
      .def_readonly("cut", &CrossoverSequence::cut);

  py::class_<DegeneracyReport>(m, "DegeneracyReport")
      .def_readonly("collapsed_positions",
                    &DegeneracyReport::collapsed_positions)
      .def_readonly("multi_edge_groups", &DegeneracyReport::multi_edge_groups)
      .def("has_edge_collapse", &DegeneracyReport::has_edge_collapse);

  py::class_<ModifiedCayleyGraph>(m, "ModifiedCayleyGraph")
      .def_property_readonly("node_count", &ModifiedCayleyGraph::node_count)
      .def_property_readonly("edge_count", &ModifiedCayleyGraph::edge_count)
      .def("connected", &ModifiedCayleyGraph::connected);

  py::class_<GraphFingerprint>(m, "GraphFingerprint")
      .def_readonly("tau_multiplicities",
                    &GraphFingerprint::tau_multiplicities)
      .def("__eq__", [](const GraphFingerprint& a,
                        const GraphFingerprint& b) { return a == b; })
      .def("__str__", &GraphFingerprint::to_string);

  py::class_<PatchOptions> patch_options(m, "PatchOptions");
  py::enum_<PatchOptions::Selection>(patch_options, "Selection")
      .value("CayleyDistance", PatchOptions::Selection::CayleyDistance)
      .value("Random", PatchOptions::Selection::Random);
  patch_options.def(py::init([](const std::string& selection,
                                std::uint64_t seed) {
                      PatchOptions o;
                      if (selection == "random")
                        o.selection = PatchOptions::Selection::Random;
                      else if (selection != "cayley-distance")
                        throw SpecError("selection must be cayley-distance "
                                        "or random");
                      o.seed = seed;
                      return o;
                    }),
                    py::arg("selection") = "cayley-distance",
                    py::arg("seed") = 0);

  py::class_<PatchResult>(m, "PatchResult")
      .def_readonly("H", &PatchResult::H)
      .def_readonly("w", &PatchResult::w)
      .def_readonly("size", &PatchResult::size)
      .def_readonly("complete", &PatchResult::complete);

  py::class_<IsometryMatrix>(m, "IsometryMatrix")
      .def_readonly("sizes", &IsometryMatrix::sizes)
      .def_property_readonly("flagged", [](const IsometryMatrix& m) {
        std::vector<bool> out(m.flagged.begin(), m.flagged.end());
        return out;
      });

  m.def("build_preset", &build_preset, py::arg("token"),
        py::arg("order_cap") = kDefaultOrderCap);
  m.def("build_from_permutations",
        [](const std::vector<std::string>& perms, int cap) {
          GroupSpec spec;
          spec.permutations = perms;
          spec.order_cap = cap;
          return build_group(spec);
        },
        py::arg("permutations"), py::arg("order_cap") = kDefaultOrderCap);
  m.def("build_from_table",
        [](const std::vector<std::vector<int>>& table, int cap) {
          GroupSpec spec;
          spec.table = table;
          spec.order_cap = cap;
          return build_group(spec);
        },
        py::arg("table"), py::arg("order_cap") = kDefaultOrderCap);
  m.def("element_order", &element_order);
  m.def("automorphisms", &automorphisms);
  m.def("inner_automorphism", &inner_automorphism);
  m.def("genus", &genus);
  m.def("enumerate_vectors", &enumerate_vectors);
  m.def("aut_classes", &aut_classes);
  m.def("canonicalize",
        [](const std::vector<Automorphism>& auts, const GeneratingVector& v) {
          return canonicalize(auts, v);
        });
  m.def("braid_act", &braid_act);
  m.def("modular_generators", &modular_generators);
  m.def("induced_permutation", &induced_permutation);
  m.def("strata", &strata);
  m.def("crossover_sequence", &crossover_sequence);
  m.def("detect_degeneracies", &detect_degeneracies);
  m.def("sector_sequence", &sector_sequence, py::arg("group"),
        py::arg("sequence"), py::arg("vertex"),
        py::arg("h") = GroupTable::identity);
  m.def("validate_spoke_cycles", &validate_spoke_cycles);
  m.def("build_graph", &build_graph);
  m.def("graph_fingerprint",
        py::overload_cast<const GroupTable&, const CrossoverSequence&>(
            &graph_fingerprint));
  m.def("grow_patch", &grow_patch, py::arg("group"), py::arg("seq1"),
        py::arg("seq2"), py::arg("options") = PatchOptions{});
  m.def("verify_patch", &verify_patch);
  m.def("isometry_matrix", &isometry_matrix, py::arg("group"),
        py::arg("signature"), py::arg("cut"), py::arg("classes"),
        py::arg("options") = PatchOptions{}, py::arg("threads") = 1);
}
