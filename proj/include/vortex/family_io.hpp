#pragma once

// Columnar text format for parametric families: one row per sequence point,
//   t  Re z_1 Im z_1 ... Re z_N Im z_N  Re w_1 Im w_1 ... Re w_N Im w_N
// whitespace separated; blank lines and lines starting with '#' are ignored.

#include <filesystem>
#include <iosfwd>

#include "vortex/asymptotics.hpp"

namespace vortex {

ScaledSequence read_family(std::istream& in);
ScaledSequence read_family_file(const std::filesystem::path& path);

/// Writes with 17 significant digits so a read-back reproduces every value.
void write_family(std::ostream& out, const ScaledSequence& seq);

}  // namespace vortex
