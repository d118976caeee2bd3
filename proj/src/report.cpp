#include "udgpath/report.hpp"

#include <sstream>

#include <json.hpp>

namespace udgpath {

namespace {

double total_ms(const SolveReport& r) {
  double t = 0.0;
  for (const auto& [stage, ms] : r.stats.timings) t += ms;
  return t;
}

}  // namespace

std::string report_json(const SolveReport& r, bool with_timings) {
  nlohmann::ordered_json j;
  j["answer"] = to_string(r.answer);
  j["branch"] = to_string(r.branch);
  j["k"] = r.k;
  j["variant"] = to_string(r.variant);
  j["n"] = r.n;
  j["m"] = r.m;
  j["delta"] = r.stats.delta;
  j["width"] = r.stats.width;
  if (r.witness) j["witness"] = *r.witness;
  if (with_timings) {
    nlohmann::ordered_json t = nlohmann::ordered_json::object();
    for (const auto& [stage, ms] : r.stats.timings) t[stage] = ms;
    j["timings"] = t;
  }

  const SolveStats& s = r.stats;
  nlohmann::ordered_json st;
  st["certified"] = s.certified;
  st["threshold"] = s.threshold;
  st["lower_bound"] = s.lower_bound;
  st["best_weight"] = s.best_weight ? nlohmann::ordered_json(*s.best_weight) : nlohmann::ordered_json(nullptr);
  st["dp_states"] = s.dp_states;
  st["components_solved"] = s.components_solved;
  st["reduced_n"] = s.reduced_n;
  st["reduced_m"] = s.reduced_m;
  st["marked_vertices"] = s.marked_vertices;
  st["occupied_cells"] = s.occupied_cells;
  nlohmann::ordered_json hist = nlohmann::ordered_json::object();
  for (const auto& [size, count] : s.mark_histogram) hist[std::to_string(size)] = count;
  st["mark_histogram"] = hist;
  j["stats"] = st;
  return j.dump();
}

std::string report_line(const SolveReport& r) {
  std::ostringstream out;
  out << "answer=" << to_string(r.answer) << " branch=" << to_string(r.branch) << " k=" << r.k
      << " variant=" << to_string(r.variant) << " n=" << r.n << " m=" << r.m << " delta=" << r.stats.delta
      << " width=" << r.stats.width << " certified=" << (r.stats.certified ? "true" : "false")
      << " total_ms=" << total_ms(r);
  return out.str();
}

std::string report_text(const SolveReport& r) {
  std::ostringstream out;
  out << "answer: " << to_string(r.answer) << " (" << to_string(r.variant) << ", k=" << r.k << ")\n";
  out << "branch: " << to_string(r.branch);
  if (!r.stats.certified) out << " (threshold override, not certified)";
  out << "\n";
  out << "graph: n=" << r.n << " m=" << r.m << "; reduced: n=" << r.stats.reduced_n << " m=" << r.stats.reduced_m
      << " delta=" << r.stats.delta << "\n";
  if (r.branch == Branch::dp) {
    out << "dp: width=" << r.stats.width << " states=" << r.stats.dp_states << " best_weight=";
    if (r.stats.best_weight) {
      out << *r.stats.best_weight;
    } else {
      out << "none";
    }
    out << "\n";
  }
  if (r.witness) {
    out << "witness (" << r.witness->size() << "):";
    for (Vertex v : *r.witness) out << ' ' << v;
    out << "\n";
  }
  out << "timings:";
  for (const auto& [stage, ms] : r.stats.timings) out << ' ' << stage << '=' << ms << "ms";
  out << "\n";
  return out.str();
}

}  // namespace udgpath
