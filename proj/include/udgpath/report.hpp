#pragma once

#include <string>

#include "udgpath/pipeline.hpp"

namespace udgpath {

/// Single JSON object: answer, branch, k, variant, n, m, delta, width,
/// witness (when present), timings (stage -> ms) and a stats object.
/// `with_timings = false` drops the timings block, leaving output that is
/// identical across runs.
std::string report_json(const SolveReport& report, bool with_timings = true);

/// One line of space-separated key=value pairs.
std::string report_line(const SolveReport& report);

/// A few human-readable lines.
std::string report_text(const SolveReport& report);

}  // namespace udgpath
