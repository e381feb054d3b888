#pragma once

#include "pellfrieze/frieze.hpp"
#include "pellfrieze/geometry.hpp"

#include <string>

namespace pellfrieze {

/// Draws the polygon on a circle with labeled vertices and the dissection
/// chords; when a frieze table is supplied, its unit arcs are overlaid
/// dashed with weight labels. Visual aid only, no pixel contract.
std::string render_svg(const Dissection& d, const FriezeTable* overlay_units = nullptr);

}  // namespace pellfrieze
