#include "udgpath/render.hpp"

#include <algorithm>
#include <cstdio>

#include "udgpath/errors.hpp"

namespace udgpath {

namespace {

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

}  // namespace

std::string render_svg(const DiskSet& disks, const Prepared& prepared, std::span<const Vertex> witness,
                       Variant variant, RenderOptions options) {
  const int n = disks.size();
  if (n != prepared.graph.num_vertices()) throw ContractViolation("render_svg: disks and graph disagree");
  if (!witness.empty() && !is_solution(prepared.graph, witness, variant)) {
    throw ContractViolation("render_svg: witness is not a valid " + std::string(to_string(variant)));
  }

  const CliqueGrid& rep = prepared.rep;
  double x_max = rep.x_min;
  double y_max = rep.y_min;
  for (const auto& [c, members] : rep.cells) {
    x_max = std::max(x_max, rep.x_min + c.i * kCellSide);
    y_max = std::max(y_max, rep.y_min + c.j * kCellSide);
  }
  const double margin = 1.0;
  const double s = options.scale;
  auto px = [&](double x) { return num((x - rep.x_min + margin) * s); };
  auto py = [&](double y) { return num((y_max - y + margin) * s); };
  const double width = (x_max - rep.x_min + 2 * margin) * s;
  const double height = (y_max - rep.y_min + 2 * margin) * s;

  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(width) + "\" height=\"" + num(height) +
         "\" viewBox=\"0 0 " + num(width) + " " + num(height) + "\">\n";
  out += "<rect x=\"0\" y=\"0\" width=\"" + num(width) + "\" height=\"" + num(height) + "\" fill=\"white\"/>\n";

  out += "<g id=\"cells\" fill=\"none\" stroke=\"#bbbbbb\" stroke-width=\"1\">\n";
  for (const auto& [c, members] : rep.cells) {
    const double x0 = rep.x_min + (c.i - 1) * kCellSide;
    const double y1 = rep.y_min + c.j * kCellSide;
    out += "<rect x=\"" + px(x0) + "\" y=\"" + py(y1) + "\" width=\"" + num(kCellSide * s) + "\" height=\"" +
           num(kCellSide * s) + "\"/>\n";
  }
  out += "</g>\n";
  out += "<g id=\"labels\" font-family=\"monospace\" font-size=\"9\" fill=\"#888888\">\n";
  for (const auto& [c, members] : rep.cells) {
    const double x0 = rep.x_min + (c.i - 1) * kCellSide;
    const double y1 = rep.y_min + c.j * kCellSide;
    out += "<text x=\"" + num((x0 - rep.x_min + margin) * s + 2) + "\" y=\"" + num((y_max - y1 + margin) * s + 10) +
           "\">" + to_string(c) + "</text>\n";
  }
  out += "</g>\n";

  if (options.draw_edges) {
    out += "<g id=\"edges\" stroke-width=\"1\">\n";
    for (const Edge& e : prepared.graph.edges()) {
      const char* color = "#999999";
      switch (classify_edge(prepared.graph, e, rep, prepared.marks)) {
        case EdgeClass::intra_cell: color = "#999999"; break;
        case EdgeClass::good: color = "#1f5fd0"; break;
        case EdgeClass::bad: color = "#d02020"; break;
      }
      const Point& a = disks.points[static_cast<std::size_t>(e.first)];
      const Point& b = disks.points[static_cast<std::size_t>(e.second)];
      out += "<line x1=\"" + px(a.x) + "\" y1=\"" + py(a.y) + "\" x2=\"" + px(b.x) + "\" y2=\"" + py(b.y) +
             "\" stroke=\"" + color + "\"/>\n";
    }
    out += "</g>\n";
  }

  if (!witness.empty()) {
    std::string pts;
    for (Vertex v : witness) {
      const Point& p = disks.points[static_cast<std::size_t>(v)];
      pts += px(p.x) + "," + py(p.y) + " ";
    }
    if (variant == Variant::cycle) {
      const Point& p = disks.points[static_cast<std::size_t>(witness.front())];
      pts += px(p.x) + "," + py(p.y) + " ";
    }
    pts.pop_back();
    out += "<polyline id=\"witness\" points=\"" + pts + "\" fill=\"none\" stroke=\"#10a040\" stroke-width=\"3\"/>\n";
  }

  out += "<g id=\"disks\">\n";
  for (Vertex v = 0; v < n; ++v) {
    const Point& p = disks.points[static_cast<std::size_t>(v)];
    out += "<circle cx=\"" + px(p.x) + "\" cy=\"" + py(p.y) + "\" r=\"3\" fill=\"" +
           (prepared.marks.is_marked(v) ? "black" : "#d02020") + "\"/>\n";
  }
  out += "</g>\n</svg>\n";
  return out;
}

}  // namespace udgpath
