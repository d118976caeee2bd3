#include "udgpath/generators.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <string>

#include "udgpath/errors.hpp"

namespace udgpath {

std::string_view to_string(GeneratorKind k) {
  switch (k) {
    case GeneratorKind::uniform: return "uniform";
    case GeneratorKind::clusters: return "clusters";
    case GeneratorKind::chain: return "chain";
    case GeneratorKind::lattice: return "lattice";
  }
  return "uniform";
}

GeneratorKind parse_generator_kind(std::string_view s) {
  for (auto k : {GeneratorKind::uniform, GeneratorKind::clusters, GeneratorKind::chain, GeneratorKind::lattice}) {
    if (to_string(k) == s) return k;
  }
  throw InputError("unknown generator kind '" + std::string(s) + "'");
}

void GeneratorSpec::validate() const {
  if (n < 1) throw InputError("generator: n must be at least 1");
  if (!(box > 0.0) || !std::isfinite(box)) throw InputError("generator: box side must be positive");
  if (kind == GeneratorKind::clusters && (clusters < 1 || !(spread >= 0.0))) {
    throw InputError("generator: clusters needs a positive count and nonnegative spread");
  }
  if (kind == GeneratorKind::chain && !(spacing > 0.0)) throw InputError("generator: spacing must be positive");
  if (kind == GeneratorKind::lattice && !(pitch > 0.0)) throw InputError("generator: pitch must be positive");
}

namespace {

// std::uniform_real_distribution and std::normal_distribution are not
// specified bit-for-bit, so both conversions are spelled out.
class Stream {
 public:
  explicit Stream(std::uint64_t seed) : rng_(seed) {}

  double unit() { return static_cast<double>(rng_() >> 11) * 0x1.0p-53; }

  double gaussian() {
    double u1 = unit();
    while (u1 <= 0.0) u1 = unit();
    const double u2 = unit();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace

DiskSet generate(const GeneratorSpec& spec) {
  spec.validate();
  Stream rng(spec.seed);
  DiskSet out;
  out.points.reserve(static_cast<std::size_t>(spec.n));
  switch (spec.kind) {
    case GeneratorKind::uniform:
      for (int i = 0; i < spec.n; ++i) {
        const double x = spec.box * rng.unit();
        out.points.push_back({x, spec.box * rng.unit()});
      }
      break;
    case GeneratorKind::clusters: {
      std::vector<Point> centers;
      for (int c = 0; c < spec.clusters; ++c) {
        const double x = spec.box * rng.unit();
        centers.push_back({x, spec.box * rng.unit()});
      }
      for (int i = 0; i < spec.n; ++i) {
        const Point& c = centers[static_cast<std::size_t>(i % spec.clusters)];
        const double dx = spec.spread * rng.gaussian();
        out.points.push_back({c.x + dx, c.y + spec.spread * rng.gaussian()});
      }
      break;
    }
    case GeneratorKind::chain:
      for (int i = 0; i < spec.n; ++i) out.points.push_back({spec.spacing * i, 0.0});
      break;
    case GeneratorKind::lattice: {
      const int cols = static_cast<int>(std::ceil(std::sqrt(static_cast<double>(spec.n))));
      for (int i = 0; i < spec.n; ++i) out.points.push_back({spec.pitch * (i % cols), spec.pitch * (i / cols)});
      break;
    }
  }
  return out;
}

}  // namespace udgpath
