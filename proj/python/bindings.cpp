#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ccloops/amalgam.hpp"
#include "ccloops/cli.hpp"
#include "ccloops/cohomology.hpp"
#include "ccloops/coxeter.hpp"
#include "ccloops/dsl.hpp"
#include "ccloops/errors.hpp"
#include "ccloops/group_corpus.hpp"
#include "ccloops/loop.hpp"
#include "ccloops/morphism.hpp"

namespace py = pybind11;
using namespace ccl;

namespace {

std::vector<std::vector<int>> rows_of(const CayleyTable& t) {
  std::vector<std::vector<int>> out;
  for (Elem x = 0; x < t.order(); ++x) out.emplace_back(t.row(x).begin(), t.row(x).end());
  return out;
}

CayleyTable table_from_rows(const std::vector<std::vector<int>>& rows) {
  std::vector<Elem> data;
  for (const auto& r : rows) {
    if (r.size() != rows.size()) throw PreconditionError("table must be square");
    data.insert(data.end(), r.begin(), r.end());
  }
  return CayleyTable(static_cast<int>(rows.size()), std::move(data));
}

py::dict identity_dict(const IdentityReport& r) {
  py::dict d;
  d["name"] = r.name;
  d["statement"] = r.statement;
  d["holds"] = r.holds;
  d["counterexample"] = r.counterexample;
  return d;
}

std::vector<int> bits(const BitMatrix& m, int r) {
  std::vector<int> out;
  for (int c = 0; c < m.cols(); ++c) out.push_back(m.get(r, c));
  return out;
}

std::vector<std::vector<int>> rows_of(const BitMatrix& m) {
  std::vector<std::vector<int>> out;
  for (int r = 0; r < m.rows(); ++r) out.push_back(bits(m, r));
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Chein loops of Coxeter groups";

  py::register_exception<Error>(m, "CclError");
  py::register_exception<ParseError>(m, "ParseError", m.attr("CclError"));
  py::register_exception<ResourceLimitError>(m, "ResourceLimitError", m.attr("CclError"));
  py::register_exception<PreconditionError>(m, "PreconditionError", m.attr("CclError"));
  py::register_exception<DiagramError>(m, "DiagramError", m.attr("CclError"));

  m.attr("INFINITY") = kInfinity;
  m.attr("DEFAULT_CAP") = kDefaultCap;
  m.attr("DEFAULT_BUDGET") = kDefaultBudget;

  py::class_<CoxeterDiagram>(m, "CoxeterDiagram")
      .def(py::init(&CoxeterDiagram::Validate), py::arg("matrix"))
      .def_static("parse", &parse_coxeter, py::arg("text"))
      .def_property_readonly("rank", &CoxeterDiagram::rank)
      .def("label", &CoxeterDiagram::label)
      .def("matrix", &CoxeterDiagram::matrix)
      .def("all_finite", &CoxeterDiagram::all_finite)
      .def("spherical_type", [](const CoxeterDiagram& d) -> py::object {
        const auto cls = recognize_spherical(d);
        if (!cls.spherical) return py::none();
        std::string s;
        for (const auto& t : cls.components) s += (s.empty() ? "" : " x ") + t.name();
        return py::str(s.empty() ? "trivial" : s);
      })
      .def("edges", [](const CoxeterDiagram& d) {
        std::vector<std::pair<int, int>> out;
        for (const Edge& e : underlying_graph(d).edges()) out.push_back({e.a, e.b});
        return out;
      });

  py::class_<GroupTable>(m, "Group")
      .def_property_readonly("order", &GroupTable::order)
      .def("mul", &GroupTable::mul)
      .def("inverse", &GroupTable::inverse)
      .def_property_readonly("generators", &GroupTable::generators)
      .def("label", &GroupTable::label)
      .def("is_abelian", &GroupTable::is_abelian)
      .def("element_order", &GroupTable::element_order)
      .def("table", [](const GroupTable& g) { return rows_of(g); });

  py::class_<LoopTable>(m, "Loop")
      .def_static("from_table", [](const std::vector<std::vector<int>>& rows) {
        return LoopTable::FromCayley(table_from_rows(rows));
      })
      .def_static("parse", &parse_table, py::arg("text"))
      .def_property_readonly("order", &LoopTable::order)
      .def("mul", &LoopTable::mul)
      .def("label", &LoopTable::label)
      .def("table", [](const LoopTable& l) { return rows_of(l); });

  m.def("enumerate_group", &enumerate_group, py::arg("diagram"), py::arg("cap") = kDefaultCap);
  m.def("group_from_table", [](const std::vector<std::vector<int>>& rows) {
    const CayleyTable t = table_from_rows(rows);
    return GroupTable::FromCayley(t, greedy_generators(t));
  });
  m.def("cyclic", &corpus::cyclic);
  m.def("dihedral", &corpus::dihedral);
  m.def("quaternion8", &corpus::quaternion8);
  m.def("alternating4", &corpus::alternating4);

  m.def("chein_loop", &chein_loop, py::arg("group"));
  m.def("is_moufang", [](const LoopTable& l) {
    py::list out;
    for (const auto& r : is_moufang(l)) out.append(identity_dict(r));
    return out;
  });
  m.def("is_associative", [](const LoopTable& l) { return identity_dict(is_associative(l)); });
  m.def("chein_consequences", [](const GroupTable& g) {
    py::list out;
    for (const auto& r : verify_chein_consequences(g)) out.append(identity_dict(r));
    return out;
  });

  m.def("automorphism_group_order",
        [](const LoopTable& l, std::int64_t budget) { return automorphism_group(l, budget).order(); },
        py::arg("loop"), py::arg("budget") = kDefaultBudget);
  m.def("automorphisms",
        [](const LoopTable& l, std::int64_t budget) {
          std::vector<std::vector<int>> out;
          for (const Morphism& f : automorphism_group(l, budget).elements) out.push_back(f.image);
          return out;
        },
        py::arg("loop"), py::arg("budget") = kDefaultBudget);
  m.def("classify_trichotomy", [](const GroupTable& g) { return to_string(classify_trichotomy(g)); });

  m.def("cohomology",
        [](int vertices, const std::vector<std::pair<int, int>>& edges, bool strict) {
          std::vector<Edge> es;
          for (auto [a, b] : edges) es.push_back({a, b});
          const CohomologyResult r = cohomology(Graph(vertices, es), strict);
          py::dict d;
          d["C0"] = r.c_dims[0];
          d["C1"] = r.c_dims[1];
          d["C2"] = r.c_dims[2];
          d["Z1"] = r.z1;
          d["B1"] = r.b1;
          d["H1"] = r.h1;
          d["components"] = r.components;
          d["ok"] = r.ok();
          d["h_basis"] = rows_of(r.h_basis);
          return d;
        },
        py::arg("vertices"), py::arg("edges"), py::arg("strict") = false);

  m.def("classify_amalgams",
        [](const CoxeterDiagram& d, std::int64_t budget) {
          const AmalgamClassification c = classify_amalgams(d, budget);
          py::dict out;
          out["n"] = c.n;
          out["representatives"] = c.representatives;
          out["class_of"] = c.class_of;
          out["valid"] = c.invalid_twists.empty() && c.cocycle_mismatches.empty();
          return out;
        },
        py::arg("diagram"), py::arg("budget") = kDefaultBudget);

  m.def("coefficient_groups", [](const CoxeterDiagram& d) {
    const Amalgam a = standard_amalgam(d);
    py::list out;
    for (int s = 0; s < static_cast<int>(a.simplices.size()); ++s) {
      const CoefficientGroup c = coefficient_group(a, s);
      py::dict e;
      e["simplex"] = simplex_name(a, s);
      e["closed_form_order"] = c.closed_form.size();
      e["brute_force_order"] = c.brute_force ? py::cast(c.brute_force->size()) : py::none();
      e["cofaces_cover_apex"] = c.cofaces_cover_apex;
      out.append(e);
    }
    return out;
  });

  m.def("run",
        [](const std::string& command, const std::string& text, bool json, int cap,
           std::int64_t budget, bool strict, bool cross_check) {
          RunConfig c;
          c.command = command;
          c.json = json;
          c.cap = cap;
          c.budget = budget;
          c.strict = strict;
          c.cross_check = cross_check;
          const RunResult r = run(c, text);
          return std::make_pair(r.exit_code, r.output);
        },
        py::arg("command"), py::arg("text"), py::arg("json") = true, py::arg("cap") = kDefaultCap,
        py::arg("budget") = kDefaultBudget, py::arg("strict") = false, py::arg("cross_check") = true);
}
