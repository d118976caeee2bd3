#pragma once

#include <filesystem>
#include <iosfwd>

#include "udgpath/geometry.hpp"

namespace udgpath {

// Plain text: first line `n`, then n lines `x y`. Only trailing blank lines
// are tolerated; errors name the 1-based line number.

DiskSet read_instance(std::istream& in);
DiskSet read_instance_file(const std::filesystem::path& path);

/// Writes coordinates with 17 significant digits so they parse back exactly.
void write_instance(std::ostream& out, const DiskSet& disks);
void write_instance_file(const std::filesystem::path& path, const DiskSet& disks);

}  // namespace udgpath
