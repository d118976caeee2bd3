#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "udgpath/decomposition.hpp"
#include "udgpath/errors.hpp"
#include "udgpath/generators.hpp"
#include "udgpath/instance_io.hpp"
#include "udgpath/oracle.hpp"
#include "udgpath/pipeline.hpp"
#include "udgpath/render.hpp"
#include "udgpath/report.hpp"

namespace py = pybind11;
using namespace udgpath;

namespace {

using PointList = std::vector<std::pair<double, double>>;

DiskSet to_disks(const PointList& points) {
  DiskSet d;
  d.points.reserve(points.size());
  for (const auto& [x, y] : points) d.points.push_back({x, y});
  return d;
}

PointList from_disks(const DiskSet& d) {
  PointList out;
  out.reserve(d.points.size());
  for (const Point& p : d.points) out.emplace_back(p.x, p.y);
  return out;
}

MarkingBudgets budgets_of(std::optional<int> q1, std::optional<int> q2) {
  MarkingBudgets b;
  if (q1) b.q1 = *q1;
  if (q2) b.q2 = *q2;
  b.validate();
  return b;
}

py::object optional_value(const std::optional<std::int64_t>& v) { return v ? py::cast(*v) : py::none(); }

py::tuple oracle_tuple(const OracleResult& r) { return py::make_tuple(optional_value(r.value), r.witness); }

}  // namespace

PYBIND11_MODULE(_udgpath, m) {
  m.doc() = "Long path and long cycle on unit disk graphs";

  py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
  py::register_exception<RefusalError>(m, "RefusalError", PyExc_RuntimeError);
  py::register_exception<ContractViolation>(m, "ContractViolation", PyExc_AssertionError);

  py::class_<SolveStats>(m, "SolveStats")
      .def_readonly("timings", &SolveStats::timings)
      .def_readonly("mark_histogram", &SolveStats::mark_histogram)
      .def_readonly("marked_vertices", &SolveStats::marked_vertices)
      .def_readonly("occupied_cells", &SolveStats::occupied_cells)
      .def_readonly("reduced_n", &SolveStats::reduced_n)
      .def_readonly("reduced_m", &SolveStats::reduced_m)
      .def_readonly("delta", &SolveStats::delta)
      .def_readonly("width", &SolveStats::width)
      .def_readonly("dp_states", &SolveStats::dp_states)
      .def_readonly("components_solved", &SolveStats::components_solved)
      .def_readonly("lower_bound", &SolveStats::lower_bound)
      .def_readonly("threshold", &SolveStats::threshold)
      .def_readonly("certified", &SolveStats::certified)
      .def_readonly("best_weight", &SolveStats::best_weight);

  py::class_<SolveReport>(m, "SolveReport")
      .def_property_readonly("answer", [](const SolveReport& r) { return std::string(to_string(r.answer)); })
      .def_property_readonly("branch", [](const SolveReport& r) { return std::string(to_string(r.branch)); })
      .def_property_readonly("variant", [](const SolveReport& r) { return std::string(to_string(r.variant)); })
      .def_readonly("k", &SolveReport::k)
      .def_readonly("n", &SolveReport::n)
      .def_readonly("m", &SolveReport::m)
      .def_readonly("witness", &SolveReport::witness)
      .def_readonly("stats", &SolveReport::stats)
      .def("__bool__", [](const SolveReport& r) { return r.answer == Answer::yes; })
      .def(
          "to_json", [](const SolveReport& r, bool with_timings) { return report_json(r, with_timings); },
          py::arg("with_timings") = true)
      .def("__repr__", [](const SolveReport& r) { return "<SolveReport " + report_line(r) + ">"; });

  m.def(
      "solve",
      [](const PointList& points, int k, const std::string& variant, bool witness, std::optional<int> q1,
         std::optional<int> q2, std::optional<std::int64_t> tw_threshold, const std::string& engine,
         std::int64_t max_states) {
        SolveRequest req;
        req.disks = to_disks(points);
        req.k = k;
        req.variant = parse_variant(variant);
        req.budgets = budgets_of(q1, q2);
        req.want_witness = witness;
        req.threshold_override = tw_threshold;
        req.engine = parse_engine(engine);
        req.dp_state_budget = max_states;
        py::gil_scoped_release release;
        return solve(req);
      },
      py::arg("points"), py::arg("k"), py::arg("variant") = "path", py::arg("witness") = false,
      py::arg("q1") = py::none(), py::arg("q2") = py::none(), py::arg("tw_threshold") = py::none(),
      py::arg("engine") = "matching", py::arg("max_states") = SolveRequest{}.dp_state_budget,
      "Decide whether the unit disk graph of `points` has a path (cycle) on at least k vertices.");

  m.def(
      "generate",
      [](const std::string& kind, int n, double box, std::uint64_t seed, int clusters, double spread, double spacing,
         double pitch) {
        GeneratorSpec spec;
        spec.kind = parse_generator_kind(kind);
        spec.n = n;
        spec.box = box;
        spec.seed = seed;
        spec.clusters = clusters;
        spec.spread = spread;
        spec.spacing = spacing;
        spec.pitch = pitch;
        return from_disks(generate(spec));
      },
      py::arg("kind") = "uniform", py::arg("n") = 10, py::arg("box") = 10.0, py::arg("seed") = 1,
      py::arg("clusters") = 4, py::arg("spread") = 1.0, py::arg("spacing") = 1.9, py::arg("pitch") = 1.5);

  m.def(
      "read_instance", [](const std::string& path) { return from_disks(read_instance_file(path)); }, py::arg("path"));
  m.def(
      "write_instance",
      [](const std::string& path, const PointList& points) { write_instance_file(path, to_disks(points)); },
      py::arg("path"), py::arg("points"));

  m.def(
      "unit_disk_edges",
      [](const PointList& points) {
        const Graph g = build_udg(to_disks(points));
        std::vector<Edge> edges = g.edges();
        return edges;
      },
      py::arg("points"), "Edges {i, j}, i < j, of disks whose centers are at distance at most 2.");

  m.def(
      "summary",
      [](const PointList& points, std::optional<int> q1, std::optional<int> q2) {
        const Prepared p = prepare(to_disks(points), budgets_of(q1, q2));
        py::dict d;
        d["n"] = p.graph.num_vertices();
        d["m"] = p.graph.num_edges();
        d["occupied_cells"] = p.rep.cells.size();
        std::int64_t marked = 0;
        for (const auto& [cell, ids] : p.marks.mark_star) marked += static_cast<std::int64_t>(ids.size());
        d["marked_vertices"] = marked;
        d["reduced_n"] = p.reduced.num_vertices();
        d["reduced_m"] = p.reduced.graph.num_edges();
        d["delta"] = p.reduced.max_degree;
        d["width"] = p.reduced.num_vertices() > 0 ? heuristic_decomposition(p.reduced.graph).width() : -1;
        d["mark_bound"] = p.marks.budgets.mark_bound();
        return d;
      },
      py::arg("points"), py::arg("q1") = py::none(), py::arg("q2") = py::none());

  m.def(
      "longest_path",
      [](const PointList& points) { return oracle_tuple(longest_path_bruteforce(build_udg(to_disks(points)))); },
      py::arg("points"), "Exhaustive oracle (at most 14 points): (vertex count or None, witness).");
  m.def(
      "longest_cycle",
      [](const PointList& points) { return oracle_tuple(longest_cycle_bruteforce(build_udg(to_disks(points)))); },
      py::arg("points"), "Exhaustive oracle (at most 14 points): (vertex count or None, witness).");

  m.def(
      "render_svg",
      [](const PointList& points, std::optional<std::vector<Vertex>> witness, const std::string& variant,
         std::optional<int> q1, std::optional<int> q2, double scale, bool draw_edges) {
        const DiskSet d = to_disks(points);
        RenderOptions opt;
        opt.scale = scale;
        opt.draw_edges = draw_edges;
        const std::vector<Vertex> w = witness.value_or(std::vector<Vertex>{});
        return render_svg(d, prepare(d, budgets_of(q1, q2)), w, parse_variant(variant), opt);
      },
      py::arg("points"), py::arg("witness") = py::none(), py::arg("variant") = "path", py::arg("q1") = py::none(),
      py::arg("q2") = py::none(), py::arg("scale") = 40.0, py::arg("draw_edges") = true);
}
