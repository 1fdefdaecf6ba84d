#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <array>
#include <limits>

#include "critdg/condensation.hpp"
#include "critdg/criticality.hpp"
#include "critdg/error.hpp"
#include "critdg/families.hpp"
#include "critdg/formulas.hpp"
#include "critdg/io.hpp"
#include "critdg/metrics.hpp"
#include "critdg/oracle.hpp"
#include "critdg/scenarios.hpp"

namespace py = pybind11;
using namespace critdg;

namespace {

Invariant to_invariant(const std::string& name) {
  if (auto inv = parse_invariant(name)) return *inv;
  throw Error(ErrorCode::kUnsupportedInvariant, "unknown invariant '" + name + "'");
}

py::object distance_to_py(Distance d) {
  if (d.is_infinite()) return py::float_(std::numeric_limits<double>::infinity());
  return py::int_(d.value());
}

py::int_ bigint_to_py(const BigInt& v) {
  return py::reinterpret_steal<py::int_>(PyLong_FromString(v.str().c_str(), nullptr, 10));
}

Digraph make_digraph(std::size_t n, const std::vector<std::pair<Vertex, Vertex>>& arcs) {
  std::vector<Arc> list;
  list.reserve(arcs.size());
  for (const auto& [u, v] : arcs) list.push_back({u, v});
  return Digraph::from_arc_list(n, list);
}

std::vector<std::pair<Vertex, Vertex>> arc_pairs(const Digraph& g) {
  std::vector<std::pair<Vertex, Vertex>> out;
  for (const Arc& a : g.arcs()) out.emplace_back(a.from, a.to);
  return out;
}

}  // namespace

PYBIND11_MODULE(_critdg, m) {
  m.doc() = "Critical and maximal digraphs: metrics, families, closed forms, exhaustive oracle";

  py::register_exception<Error>(m, "CritdgError", PyExc_ValueError);

  py::class_<Digraph>(m, "Digraph")
      .def(py::init(&make_digraph), py::arg("n"), py::arg("arcs") = std::vector<std::pair<Vertex, Vertex>>{})
      .def_property_readonly("n", &Digraph::n)
      .def_property_readonly("arc_count", &Digraph::arc_count)
      .def("arcs", &arc_pairs)
      .def("has_arc", &Digraph::has_arc)
      .def("with_arc", [](const Digraph& g, Vertex u, Vertex v) { return g.with_arc({u, v}); })
      .def("arc_mask", &Digraph::arc_mask)
      .def_static("from_arc_mask", &Digraph::from_arc_mask)
      .def("to_json", [](const Digraph& g) { return to_json(g); })
      .def("to_dot", [](const Digraph& g) { return to_dot(g); })
      .def_static("parse", [](const std::string& text) { return parse_digraph(text); })
      .def("__eq__", [](const Digraph& a, const Digraph& b) { return a == b; })
      .def("__repr__", [](const Digraph& g) { return "Digraph(" + to_json(g) + ")"; });

  m.def("reverse", &reverse);
  m.def("transitive_closure", &transitive_closure);

  m.def("metric_invariants", [](const Digraph& g) {
    const Invariants inv = metric_invariants(g);
    py::dict out;
    out["d"] = distance_to_py(inv.d);
    out["d_m"] = distance_to_py(inv.d_m);
    out["r"] = distance_to_py(inv.r);
    out["r_m"] = distance_to_py(inv.r_m);
    return out;
  });
  m.def("centers", [](const Digraph& g) {
    const CenterSets c = centers_and_quasicenters(g);
    return std::make_pair(c.centers, c.quasi_centers);
  });
  m.def("condensation", [](const Digraph& g) {
    const Condensation c = condensation(g);
    return std::make_pair(c.components, c.hertz);
  });

  m.def("is_critical", [](const Digraph& g, const std::string& inv) {
    return is_critical(g, to_invariant(inv));
  });
  m.def("is_maximal", [](const Digraph& g, const std::string& inv) {
    return is_maximal(g, to_invariant(inv));
  });

  m.def("gamma_k", [](std::size_t k) { return build_family(GammaK{k}); });
  m.def("gamma_ki", [](std::size_t k, std::size_t i) { return build_family(GammaKI{k, i}); });
  m.def("gamma_k0", [](std::size_t k) { return build_family(GammaK0{k}); });
  m.def("d4", [] { return build_family(D4{}); });
  m.def("partition", [](const std::vector<std::size_t>& blocks) {
    std::size_t k = 0;
    for (std::size_t b : blocks) k += b;
    return build_family(GammaPartition{k, blocks});
  });
  m.def("blow_up", &blow_up, py::arg("hertz"), py::arg("sizes"));
  m.def("max_radius",
        [](std::size_t n, std::size_t k, std::size_t pos, std::size_t a, std::size_t b) {
          return build_family(MaximalRadius{n, k, pos, a, b});
        },
        py::arg("n"), py::arg("k"), py::arg("pos"), py::arg("a"), py::arg("b"));
  m.def("qd3", [](std::array<std::size_t, 4> sizes) { return build_family(MaximalQD3{sizes}); });
  m.def("recognize_hertz_family",
        [](const Digraph& h) { return recognize_hertz_family(h).label(); });

  m.def("count_formula", [](const std::string& name, std::int64_t n, std::int64_t k) {
    if (auto f = parse_count_formula(name)) return bigint_to_py(count_closed_form(*f, n, k));
    if (auto f = parse_bound_formula(name)) return bigint_to_py(bound_closed_form(*f, n, k));
    throw Error(ErrorCode::kDomainError, "unknown formula '" + name + "'");
  });

  m.def("count_labeled",
        [](std::size_t n, const std::string& pred, std::size_t workers) {
          py::gil_scoped_release release;
          return count_labeled(n, parse_predicate(pred), {workers});
        },
        py::arg("n"), py::arg("predicate") = "", py::arg("workers") = 0);
  m.def("iso_class_count",
        [](std::size_t n, const std::string& pred, std::size_t workers) {
          py::gil_scoped_release release;
          return iso_class_count(n, parse_predicate(pred), {workers});
        },
        py::arg("n"), py::arg("predicate") = "", py::arg("workers") = 0);
  m.def("max_arcs_where",
        [](std::size_t n, const std::string& pred, std::size_t workers) {
          ExtremalResult r = [&] {
            py::gil_scoped_release release;
            return max_arcs_where(n, parse_predicate(pred), {workers});
          }();
          return std::make_pair(r.arcs, r.witness);
        },
        py::arg("n"), py::arg("predicate"), py::arg("workers") = 0);
  m.def("canonical_form", &canonical_form);
  m.def("are_isomorphic", &are_isomorphic);

  m.def("scenario_names", &scenario_names);
  m.def("run_scenario_json",
        [](const std::string& name, std::size_t max_n, std::size_t workers) {
          VerificationReport r = [&] {
            py::gil_scoped_release release;
            return run_scenario(name, max_n, {workers});
          }();
          return report_to_json(r);
        },
        py::arg("name"), py::arg("max_n"), py::arg("workers") = 0);
}
