// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <functional>
#include <vector>

#include "vcp/geometry.hpp"
#include "vcp/image.hpp"

namespace vcp {

using Poly = std::vector<Vec2>;

/// Andrew monotone chain; returns the hull counter-clockwise in image
/// coordinates (y down), strictly convex (collinear points dropped).
Poly convex_hull(Poly points);

/// Integer pixel rectangle, inclusive bounds; empty when x1 < x0.
struct PixelRect {
    int x0 = 0, y0 = 0, x1 = -1, y1 = -1;
    bool empty() const { return x1 < x0 || y1 < y0; }
    int width() const { return empty() ? 0 : x1 - x0 + 1; }
    int height() const { return empty() ? 0 : y1 - y0 + 1; }
};

/// Scanline walk of a convex polygon over a width x height pixel grid.
/// A pixel counts as covered when its center (x+0.5, y+0.5) lies inside; a
/// positive-area polygon that captures no center is point-sampled as the one
/// pixel under its centroid, so sub-pixel objects never vanish.
/// Calls fn(y, x_begin, x_end) per covered row, x_end exclusive.
/// The single shared coverage rule keeps renderer fills, annotation boxes and
/// vision-stage masks pixel-exact with one another.
void scan_convex(const Poly& poly, int width, int height,
                 const std::function<void(int, int, int)>& fn);

/// Bounding rectangle of all covered pixels (empty if none).
PixelRect covered_bounds(const Poly& poly, int width, int height);

void fill_convex(ImageTensor& img, const Poly& poly, const std::array<std::uint8_t, 3>& rgb);

/// 1-pixel rectangle outline, clamped to the image.
void draw_rect_outline(ImageTensor& img, const PixelRect& rect,
                       const std::array<std::uint8_t, 3>& rgb);

/// Additive radial glow used for lamps and headlights in night renders.
void add_glow(ImageTensor& img, double cx, double cy, double radius,
              const std::array<double, 3>& delta);

}  // namespace vcp
