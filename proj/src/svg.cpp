#include "latcut/svg.hpp"

#include <algorithm>
#include <sstream>

#include "latcut/error.hpp"

namespace latcut {

namespace {

// Fixed 6-decimal rendering of an exact rational (round half up); all
// geometry stays exact until this final formatting step.
std::string decimal6(const Rat& x) {
    Int million(1000000);
    Rat scaled = Rat(x * Rat(million));
    Int rounded = floor_int(Rat(scaled + rat(1, 2)));
    bool negative = rounded < 0;
    if (negative) rounded = -rounded;
    Int whole = rounded / million;
    Int fracpart = rounded % million;
    std::string digits = fracpart.get_str();
    digits.insert(digits.begin(), 6 - digits.size(), '0');
    std::string out = (negative ? "-" : "") + whole.get_str() + "." + digits;
    return out;
}

struct Mapper {
    Rat x0, y1;  // world window: [x0, x1] x [y0, y1], y flipped
    long scale, margin;

    std::string px(const Rat& x) const {
        return decimal6(Rat(Rat(x - x0) * scale + margin));
    }
    std::string py(const Rat& y) const {
        return decimal6(Rat(Rat(y1 - y) * scale + margin));
    }
};

void polygon_path(std::ostringstream& svg, const HPolyhedron& poly,
                  const Mapper& map, const std::string& attrs) {
    if (!feasible(poly)) return;
    VertexEnumResult ve = vertex_enum(poly);
    std::vector<RatVec> pts = ve.polytope.vertices;
    if (pts.size() < 3) return;
    // Counterclockwise order around the centroid, exact comparisons.
    RatVec center = zero_vec(2);
    for (const RatVec& p : pts) center = add(center, p);
    center = scale(Rat(1, static_cast<long>(pts.size())), center);
    auto half = [&](const RatVec& p) {
        Rat dy = Rat(p[1] - center[1]);
        Rat dx = Rat(p[0] - center[0]);
        return (dy > 0 || (dy == 0 && dx > 0)) ? 0 : 1;
    };
    std::sort(pts.begin(), pts.end(), [&](const RatVec& p, const RatVec& q) {
        int hp = half(p), hq = half(q);
        if (hp != hq) return hp < hq;
        Rat cross = Rat((p[0] - center[0]) * (q[1] - center[1]) -
                        (p[1] - center[1]) * (q[0] - center[0]));
        if (cross != 0) return cross > 0;
        return lex_less(p, q);
    });
    svg << "  <polygon points=\"";
    for (size_t i = 0; i < pts.size(); ++i) {
        if (i) svg << " ";
        svg << map.px(pts[i][0]) << "," << map.py(pts[i][1]);
    }
    svg << "\" " << attrs << "/>\n";
}

HPolyhedron clip_to_view(const HPolyhedron& P, const Rat& lo, const Rat& hi) {
    HPolyhedron out = P;
    out.add_row(vec({1, 0}), hi);
    out.add_row(vec({-1, 0}), Rat(-lo));
    out.add_row(vec({0, 1}), hi);
    out.add_row(vec({0, -1}), Rat(-lo));
    return out;
}

std::string render(const SFreeScene& scene,
                   const std::vector<Spindle>* spindles,
                   const RenderStyle& style) {
    if (scene.S.n != 2)
        fail(Err::DimensionUnsupported, "SVG rendering needs n=2");

    Rat lo(-style.view_radius), hi(style.view_radius);
    Mapper map{lo, hi, style.pixels_per_unit, style.margin};
    long side = 2 * style.view_radius * style.pixels_per_unit +
                2 * style.margin;

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << side
        << "\" height=\"" << side << "\" viewBox=\"0 0 " << side << " "
        << side << "\">\n";
    svg << "  <rect width=\"" << side << "\" height=\"" << side
        << "\" fill=\"white\"/>\n";

    if (spindles) {
        for (const Spindle& sp : *spindles) {
            polygon_path(svg, clip_to_view(sp.region, lo, hi), map,
                         "fill=\"#a0a0a0\" fill-opacity=\"0.55\" "
                         "stroke=\"#707070\" stroke-width=\"1\"");
        }
    }

    polygon_path(svg, clip_to_view(scene.K, lo, hi), map,
                 "fill=\"none\" stroke=\"#202020\" stroke-width=\"3\"");

    // Lattice b + Z^2 within view: S-points filled, the rest hollow.
    long radius = style.view_radius + 1;
    for (long zx = -radius; zx <= radius; ++zx) {
        for (long zy = -radius; zy <= radius; ++zy) {
            RatVec p = {Rat(scene.S.b[0] + zx), Rat(scene.S.b[1] + zy)};
            if (p[0] < lo || p[0] > hi || p[1] < lo || p[1] > hi) continue;
            bool in_s = scene.S.contains(p);
            svg << "  <circle cx=\"" << map.px(p[0]) << "\" cy=\""
                << map.py(p[1]) << "\" r=\"4\" "
                << (in_s ? "fill=\"#202020\""
                         : "fill=\"white\" stroke=\"#202020\" "
                           "stroke-width=\"1.5\"")
                << "/>\n";
        }
    }

    svg << "</svg>\n";
    return svg.str();
}

}  // namespace

std::string render_scene_svg(const SFreeScene& scene,
                             const RenderStyle& style) {
    return render(scene, nullptr, style);
}

std::string render_region_svg(const LiftingRegion& region,
                              const RenderStyle& style) {
    return render(region.scene, &region.spindles, style);
}

}  // namespace latcut
