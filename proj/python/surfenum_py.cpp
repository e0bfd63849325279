#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "surfenum/canon.hpp"
#include "surfenum/counts.hpp"
#include "surfenum/enumerate.hpp"
#include "surfenum/moves.hpp"
#include "surfenum/oracle.hpp"
#include "surfenum/surface.hpp"
#include "surfenum/text.hpp"

namespace py = pybind11;
using namespace py::literals;
using namespace surfenum;

namespace {

using Triples = std::vector<std::array<int, 3>>;

// Triangle lists cross the boundary as lists of 3-tuples or as text.
Triangulation from_py(const py::object& o) {
  if (py::isinstance<py::str>(o)) return parse_triangulation_text(o.cast<std::string>());
  std::vector<Triangle> tris;
  for (const auto& t : o.cast<Triples>()) tris.push_back(make_triangle(t[0], t[1], t[2]));
  return Triangulation(std::move(tris));
}

py::list to_py(const Triangulation& t) {
  py::list out;
  for (const auto& f : t.triangles()) out.append(py::make_tuple(f[0], f[1], f[2]));
  return out;
}

py::dict rows_to_py(const CountsTable& table) {
  py::dict out;
  for (const auto& [k, row] : table.rows()) {
    out[py::make_tuple(k.vertices, k.surface.name())] =
        py::make_tuple(row.triangulations, row.roots, row.nonroots);
  }
  return out;
}

SearchConfig make_config(int n, bool specialized, const std::optional<std::string>& surface, unsigned workers) {
  SearchConfig cfg;
  cfg.max_vertices = n;
  cfg.specialized = specialized;
  cfg.workers = workers;
  if (surface) cfg.target = SurfaceClass::parse(*surface);
  return cfg;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Enumeration of triangulated closed surfaces";

  static py::exception<Error> error(m, "SurfenumError");
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      PyErr_SetString(error.ptr(), e.what());
    }
  });

  m.def("parse", [](const std::string& s) { return to_py(parse_triangulation_text(s)); }, py::arg("text"));
  m.def("format_triangulation", [](const py::object& t) { return format_triangulation(from_py(t)); });

  m.def("validate", [](const py::object& t) {
    const auto r = validate(from_py(t));
    return py::make_tuple(to_string(r.kind), r.offending);
  });
  m.def("euler_characteristic", [](const py::object& t) { return euler_characteristic(from_py(t)); });
  m.def("classify", [](const py::object& t) { return classify(from_py(t)).name(); });
  m.def("heawood_min_vertices", [](const std::string& s) { return heawood_min_vertices(SurfaceClass::parse(s)); });

  m.def("canonical_form", [](const py::object& t) { return to_py(canonical_form(from_py(t))); });
  m.def("is_isomorphic", [](const py::object& a, const py::object& b) {
    return is_isomorphic(from_py(a), from_py(b));
  });

  m.def("t_move", [](const py::object& t, std::array<int, 3> f) {
    return to_py(t_move(from_py(t), make_triangle(f[0], f[1], f[2])));
  });
  m.def("inverse_t_move", [](const py::object& t, Vertex v) { return to_py(inverse_t_move(from_py(t), v)); });
  m.def("is_root", [](const py::object& t) { return is_root(from_py(t)); });
  m.def("compute_root", [](const py::object& t) { return to_py(compute_root(from_py(t))); });
  m.def("edge_expand_4valent", [](const py::object& t, Vertex a, Vertex b) {
    return to_py(edge_expand_4valent(from_py(t), make_edge(a, b)));
  });

  m.def(
      "enumerate_all",
      [](int n, bool specialized, std::optional<std::string> surface, unsigned workers) {
        Enumeration e;
        {
          py::gil_scoped_release release;
          e = enumerate_all(make_config(n, specialized, surface, workers));
        }
        py::dict out;
        auto put = [&](const ClassSets& sets, const char* kind) {
          for (const auto& [k, set] : sets) {
            const auto key = py::make_tuple(k.vertices, k.surface.name());
            if (!out.contains(key)) out[key] = py::dict("roots"_a = py::list(), "nonroots"_a = py::list());
            py::list dst = out[key].cast<py::dict>()[kind];
            for (const auto& t : set) dst.append(to_py(t));
          }
        };
        put(e.roots, "roots");
        put(e.nonroots, "nonroots");
        return out;
      },
      py::arg("max_vertices"), py::arg("specialized") = false, py::arg("surface") = py::none(),
      py::arg("workers") = 1u);

  m.def(
      "counts",
      [](int n, bool specialized, std::optional<std::string> surface, unsigned workers) {
        CountsTable table;
        {
          py::gil_scoped_release release;
          table = enumerate_all(make_config(n, specialized, surface, workers)).counts();
        }
        return rows_to_py(table);
      },
      py::arg("max_vertices"), py::arg("specialized") = false, py::arg("surface") = py::none(),
      py::arg("workers") = 1u);

  m.def("reference_counts", [] { return rows_to_py(reference_counts()); });

  m.def(
      "cross_validate",
      [](int n, bool specialized, unsigned workers) {
        CrossReport r;
        {
          py::gil_scoped_release release;
          r = cross_validate(n, specialized, workers);
        }
        return py::dict("equal"_a = r.equal, "oracle_total"_a = r.oracle_total,
                        "pipeline_total"_a = r.pipeline_total, "summary"_a = r.summary());
      },
      py::arg("max_vertices"), py::arg("specialized") = false, py::arg("workers") = 1u);
}
