#pragma once

#include <cstdint>
#include <string_view>

#include "udgpath/geometry.hpp"

namespace udgpath {

enum class GeneratorKind { uniform, clusters, chain, lattice };

std::string_view to_string(GeneratorKind k);
GeneratorKind parse_generator_kind(std::string_view s);

struct GeneratorSpec {
  GeneratorKind kind = GeneratorKind::uniform;
  int n = 10;
  double box = 10.0;  // side length L of the sampling square
  std::uint64_t seed = 1;
  int clusters = 4;
  double spread = 1.0;   // standard deviation around each cluster center
  double spacing = 1.9;  // chain step along the x axis
  double pitch = 1.5;    // lattice step

  /// Throws InputError on n < 1, nonpositive lengths or cluster count.
  void validate() const;
};

/// Same spec, same points, on every platform: the stream is mt19937_64 and
/// the real-valued conversions are done by hand.
DiskSet generate(const GeneratorSpec& spec);

}  // namespace udgpath
