#ifndef LATCUT_SVG_HPP
#define LATCUT_SVG_HPP

#include <string>

#include "latcut/latticefree.hpp"
#include "latcut/lifting.hpp"

namespace latcut {

struct RenderStyle {
    long pixels_per_unit = 40;
    long margin = 12;
    long view_radius = 4;  // half-width of the drawn portion, in units
};

// Deterministic SVG of a 2D scene: K outline, S-points filled, other b+Z^2
// points hollow. Coordinates render at a fixed 6-decimal precision computed
// from the exact rationals; identical input yields byte-identical output.
std::string render_scene_svg(const SFreeScene& scene,
                             const RenderStyle& style = {});

// Scene plus shaded spindles.
std::string render_region_svg(const LiftingRegion& region,
                              const RenderStyle& style = {});

}  // namespace latcut

#endif
