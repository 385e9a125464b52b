#include "tilescale/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <vector>

namespace tilescale {

namespace {

constexpr const char* kPalette[] = {
    "#4e79a7", "#f28e2b", "#e15759", "#76b7b2", "#59a14f",
    "#edc948", "#b07aa1", "#ff9da7", "#9c755f", "#bab0ab",
};
constexpr size_t kPaletteSize = sizeof(kPalette) / sizeof(kPalette[0]);

std::string fmt12(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

struct Pt {
    double x, y;
};

std::string emit(const std::vector<std::vector<Pt>>& polys) {
    double min_x = 0, max_x = 0, min_y = 0, max_y = 0;
    bool first = true;
    for (const auto& poly : polys)
        for (const Pt& p : poly) {
            if (first) {
                min_x = max_x = p.x;
                min_y = max_y = p.y;
                first = false;
            } else {
                min_x = std::min(min_x, p.x);
                max_x = std::max(max_x, p.x);
                min_y = std::min(min_y, p.y);
                max_y = std::max(max_y, p.y);
            }
        }
    double w = max_x - min_x, h = max_y - min_y;
    double span = std::max(w, h);
    double pad = span / 50.0;
    double stroke = span / 200.0;

    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\""
       << fmt12(min_x - pad) << " " << fmt12(-max_y - pad) << " "
       << fmt12(w + 2 * pad) << " " << fmt12(h + 2 * pad) << "\" width=\"640\">\n";
    for (size_t i = 0; i < polys.size(); ++i) {
        os << "  <polygon points=\"";
        for (size_t k = 0; k < polys[i].size(); ++k) {
            if (k) os << " ";
            // SVG's y axis points down; flip.
            os << fmt12(polys[i][k].x) << "," << fmt12(-polys[i][k].y);
        }
        os << "\" fill=\"" << kPalette[i % kPaletteSize]
           << "\" stroke=\"#222\" stroke-width=\"" << fmt12(stroke) << "\"/>\n";
    }
    os << "</svg>\n";
    return os.str();
}

} // namespace

std::string render_svg(const RectTiling& t) {
    std::vector<std::vector<Pt>> polys;
    polys.reserve(t.tiles.size());
    for (const RectTile& a : t.tiles) {
        double x0 = a.x0.to_double(), x1 = a.x1.to_double();
        double y0 = a.y0.to_double(), y1 = a.y1.to_double();
        polys.push_back({{x0, y0}, {x1, y0}, {x1, y1}, {x0, y1}});
    }
    return emit(polys);
}

std::string render_svg(const TriTiling& t) {
    const double root3_half = std::sqrt(3.0) / 2.0;
    auto to_cartesian = [&](const Rat& a, const Rat& b) {
        double bd = b.to_double();
        return Pt{(a + b / Rat(2)).to_double(), bd * root3_half};
    };
    std::vector<std::vector<Pt>> polys;
    polys.reserve(t.tiles.size());
    for (const TriTile& a : t.tiles)
        polys.push_back({to_cartesian(a.a, a.b), to_cartesian(a.a + a.c, a.b),
                         to_cartesian(a.a, a.b + a.c)});
    return emit(polys);
}

std::string render_svg(const AnyTiling& t) {
    if (std::holds_alternative<CuboidTiling>(t))
        throw std::invalid_argument(
            "render_svg: cuboid tilings need a plane section (--section)");
    if (const auto* r = std::get_if<RectTiling>(&t)) return render_svg(*r);
    return render_svg(std::get<TriTiling>(t));
}

} // namespace tilescale
