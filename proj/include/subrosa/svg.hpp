#pragma once

#include <string>

#include "subrosa/patch.hpp"

namespace subrosa {

struct SvgOptions {
  double stroke_width = 0.05;
  std::string palette = "classic";  ///< "classic" or "gray"
};

/// One polygon per tile in tile order, filled by prototile k, black strokes;
/// the viewBox has a 5% margin. Throws std::invalid_argument for an unknown
/// palette.
std::string render_svg(const Patch& patch, const SvgOptions& options = {});

}  // namespace subrosa
