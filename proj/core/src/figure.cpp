#include "equable/figure.hpp"

#include <algorithm>
#include <array>
#include <complex>
#include <cstdio>

#include "equable/eisenstein.hpp"

namespace equable {

std::pair<double, double> Viewport::to_pixel(double x, double y) const {
    return {scale * (x - min_x + margin), scale * (max_y - y + margin)};
}

double Viewport::width_px() const { return scale * (max_x - min_x + 2 * margin); }

double Viewport::height_px() const { return scale * (max_y - min_y + 2 * margin); }

namespace {

struct Polygon {
    std::array<std::pair<double, double>, 3> pts;  // cartesian, path order C, A, B
    const char* fill;
    const char* stroke;
};

// The two classified triangles. The scalene one (sides 3,8,7 times sqrt(3))
// sits at the origin; the equilateral one (sides 4*sqrt(3)) is translated 5
// to the right so the pictures do not overlap.
std::array<Polygon, 2> figure_polygons() {
    auto pt = [](Eisenstein z, double dx) {
        const std::complex<double> c = to_cartesian(z);
        return std::pair{c.real() + dx, c.imag()};
    };
    const Polygon scalene{{pt({0, 0}, 0), pt({6, 3}, 0), pt({8, 16}, 0)},
                          "#ffcccc",
                          "#cc0000"};
    const Polygon equilateral{{pt({0, 0}, 5), pt({8, 4}, 5), pt({4, 8}, 5)},
                              "#ccccff",
                              "#0000cc"};
    return {scalene, equilateral};
}

// Fixed-width decimal keeps the output deterministic byte-for-byte.
std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

}  // namespace

Viewport figure_viewport() {
    const std::array<Polygon, 2> polys = figure_polygons();
    Viewport vp;
    vp.min_x = vp.max_x = polys[0].pts[0].first;
    vp.min_y = vp.max_y = polys[0].pts[0].second;
    for (const Polygon& poly : polys)
        for (const auto& [x, y] : poly.pts) {
            vp.min_x = std::min(vp.min_x, x);
            vp.max_x = std::max(vp.max_x, x);
            vp.min_y = std::min(vp.min_y, y);
            vp.max_y = std::max(vp.max_y, y);
        }
    return vp;
}

std::string render_figure_svg(const FigureOptions& opts) {
    const Viewport vp = figure_viewport();
    std::string svg;
    svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" +
           fmt(vp.width_px()) + "\" height=\"" + fmt(vp.height_px()) + "\" viewBox=\"0 0 " +
           fmt(vp.width_px()) + " " + fmt(vp.height_px()) + "\">\n";
    if (opts.grid) {
        svg += "  <g fill=\"none\" stroke=\"#606060\" stroke-width=\"1\">\n";
        for (int64_t b = -opts.coeff_range; b <= opts.coeff_range; ++b)
            for (int64_t a = -opts.coeff_range; a <= opts.coeff_range; ++a) {
                const std::complex<double> c = to_cartesian({a, b});
                if (c.real() < vp.min_x - vp.margin || c.real() > vp.max_x + vp.margin ||
                    c.imag() < vp.min_y - vp.margin || c.imag() > vp.max_y + vp.margin)
                    continue;
                const auto [px, py] = vp.to_pixel(c.real(), c.imag());
                svg += "    <circle cx=\"" + fmt(px) + "\" cy=\"" + fmt(py) + "\" r=\"2.4\"/>\n";
            }
        svg += "  </g>\n";
    }
    for (const Polygon& poly : figure_polygons()) {
        svg += "  <polygon points=\"";
        for (size_t i = 0; i < poly.pts.size(); ++i) {
            const auto [px, py] = vp.to_pixel(poly.pts[i].first, poly.pts[i].second);
            if (i) svg += " ";
            svg += fmt(px) + "," + fmt(py);
        }
        svg += "\" fill=\"";
        svg += poly.fill;
        svg += "\" stroke=\"";
        svg += poly.stroke;
        svg += "\" stroke-width=\"2\"/>\n";
    }
    svg += "</svg>\n";
    return svg;
}

}  // namespace equable
