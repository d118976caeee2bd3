#include "udgpath/instance_io.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "udgpath/errors.hpp"

namespace udgpath {

namespace {

[[noreturn]] void fail(std::size_t line, const std::string& what) {
  throw InputError("instance line " + std::to_string(line) + ": " + what);
}

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

}  // namespace

DiskSet read_instance(std::istream& in) {
  std::string line;
  std::size_t line_no = 1;
  if (!std::getline(in, line)) fail(line_no, "missing point count");
  const std::string head = trim(line);
  long long n = -1;
  auto [ptr, ec] = std::from_chars(head.data(), head.data() + head.size(), n);
  if (ec != std::errc() || ptr != head.data() + head.size() || n < 1) {
    fail(line_no, "expected a positive point count, got '" + head + "'");
  }

  DiskSet disks;
  disks.points.reserve(static_cast<std::size_t>(n));
  for (long long i = 0; i < n; ++i) {
    ++line_no;
    if (!std::getline(in, line)) fail(line_no, "expected " + std::to_string(n) + " points, file ended early");
    std::istringstream fields(line);
    Point p;
    std::string extra;
    if (!(fields >> p.x >> p.y)) fail(line_no, "expected two decimal coordinates");
    if (fields >> extra) fail(line_no, "unexpected trailing token '" + extra + "'");
    if (!std::isfinite(p.x) || !std::isfinite(p.y)) fail(line_no, "non-finite coordinate");
    disks.points.push_back(p);
  }
  while (std::getline(in, line)) {
    ++line_no;
    if (!trim(line).empty()) fail(line_no, "unexpected content after the last point");
  }
  return disks;
}

DiskSet read_instance_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open instance file '" + path.string() + "'");
  return read_instance(in);
}

void write_instance(std::ostream& out, const DiskSet& disks) {
  out << disks.points.size() << '\n';
  char buf[64];
  for (const Point& p : disks.points) {
    std::snprintf(buf, sizeof buf, "%.17g %.17g\n", p.x, p.y);
    out << buf;
  }
}

void write_instance_file(const std::filesystem::path& path, const DiskSet& disks) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write instance file '" + path.string() + "'");
  write_instance(out, disks);
  if (!out) throw InputError("write failed for '" + path.string() + "'");
}

}  // namespace udgpath
