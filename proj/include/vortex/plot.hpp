#pragma once

#include <string>

#include "vortex/report.hpp"

namespace vortex {

/// SVG rendering of a solve report: one panel per solution showing the
/// z-plane positions as disks (area grows with |Gamma|, red for positive and
/// blue for negative vorticity), every pair joined by a segment labelled with
/// its squared distance, and Lambda in the panel legend. Output depends only
/// on the report. Throws Error on a document that is not a solve report.
std::string render_svg(const Json& report);

}  // namespace vortex
