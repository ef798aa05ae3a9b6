#pragma once

#include <cstdint>
#include <string>
#include <utility>

namespace equable {

/**
 * Options for the SVG picture of the two equable triangles: the equilateral
 * one drawn translated 5 units to the right, the scalene one at the origin,
 * over the lattice dot grid.
 */
struct FigureOptions {
    bool grid = true;
    int64_t coeff_range = 24;  // grid dots use |a|, |b| <= coeff_range
};

/**
 * Affine viewport transform from cartesian content coordinates to SVG pixel
 * coordinates. The viewBox derives from the content bounds (the polygon
 * vertices) plus a 1-unit margin, and the y axis flips because SVG points
 * down:
 *
 *   px = scale * (x - min_x + margin)
 *   py = scale * (max_y - y + margin)
 */
struct Viewport {
    double min_x = 0, min_y = 0, max_x = 0, max_y = 0;
    double scale = 40.0;
    double margin = 1.0;

    std::pair<double, double> to_pixel(double x, double y) const;
    double width_px() const;
    double height_px() const;
};

/// The viewport used by render_figure_svg (content bounds of the two
/// triangles, one translated right by 5).
Viewport figure_viewport();

/// The figure as a complete SVG 1.1 document. Deterministic byte-for-byte
/// for fixed options.
std::string render_figure_svg(const FigureOptions& opts = {});

}  // namespace equable
