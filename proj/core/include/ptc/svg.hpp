#pragma once

#include <string>

#include "ptc/catenary.hpp"

namespace ptc {

struct SvgOptions {
  int width = 1000;
  int height = 600;
  bool overlay_catenary = false;
  int catenary_samples = 256;
};

/// Deterministic SVG of the polyline over t in [-1, 1] (radius vertical,
/// baseline at r = 0), optionally with the reference catenary overlaid.
std::string render_polyline_svg(const CatenaryFit& fit, const SvgOptions& options = {});

}  // namespace ptc
