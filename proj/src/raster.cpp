// SPDX-License-Identifier: Apache-2.0
#include "vcp/raster.hpp"

#include <algorithm>
#include <cmath>

namespace vcp {

Poly convex_hull(Poly pts) {
    std::sort(pts.begin(), pts.end(), [](const Vec2& a, const Vec2& b) {
        return a.x() < b.x() || (a.x() == b.x() && a.y() < b.y());
    });
    pts.erase(std::unique(pts.begin(), pts.end(),
                          [](const Vec2& a, const Vec2& b) { return a == b; }),
              pts.end());
    const std::size_t n = pts.size();
    if (n < 3) return pts;
    auto cross = [](const Vec2& o, const Vec2& a, const Vec2& b) {
        return (a.x() - o.x()) * (b.y() - o.y()) - (a.y() - o.y()) * (b.x() - o.x());
    };
    Poly hull(2 * n);
    std::size_t k = 0;
    for (std::size_t i = 0; i < n; ++i) {  // lower
        while (k >= 2 && cross(hull[k - 2], hull[k - 1], pts[i]) <= 1e-12) --k;
        hull[k++] = pts[i];
    }
    for (std::size_t i = n - 1, lower = k + 1; i-- > 0;) {  // upper
        while (k >= lower && cross(hull[k - 2], hull[k - 1], pts[i]) <= 1e-12) --k;
        hull[k++] = pts[i];
    }
    hull.resize(k - 1);
    return hull;
}

void scan_convex(const Poly& poly, int width, int height,
                 const std::function<void(int, int, int)>& fn) {
    if (poly.size() < 3 || width <= 0 || height <= 0) return;
    double ymin = poly[0].y(), ymax = poly[0].y();
    for (const auto& p : poly) {
        ymin = std::min(ymin, p.y());
        ymax = std::max(ymax, p.y());
    }
    int y_begin = std::max(0, static_cast<int>(std::ceil(ymin - 0.5)));
    int y_end = std::min(height - 1, static_cast<int>(std::floor(ymax - 0.5)));
    const std::size_t n = poly.size();
    bool emitted = false;
    for (int y = y_begin; y <= y_end; ++y) {
        const double yc = y + 0.5;
        double x_lo = 0.0, x_hi = 0.0;
        bool any = false;
        for (std::size_t i = 0; i < n; ++i) {
            const Vec2& p = poly[i];
            const Vec2& q = poly[(i + 1) % n];
            if (p.y() == q.y()) continue;
            double lo = std::min(p.y(), q.y()), hi = std::max(p.y(), q.y());
            if (yc < lo || yc >= hi) continue;  // half-open: vertex rows count once
            double t = (yc - p.y()) / (q.y() - p.y());
            double x = p.x() + t * (q.x() - p.x());
            if (!any) {
                x_lo = x_hi = x;
                any = true;
            } else {
                x_lo = std::min(x_lo, x);
                x_hi = std::max(x_hi, x);
            }
        }
        if (!any) continue;
        int xb = std::max(0, static_cast<int>(std::ceil(x_lo - 0.5)));
        int xe = std::min(width, static_cast<int>(std::floor(x_hi - 0.5)) + 1);
        if (xb < xe) {
            fn(y, xb, xe);
            emitted = true;
        }
    }
    if (emitted) return;
    // sub-pixel primitive: point-sample one pixel at the centroid so distant
    // objects stay visible specks instead of vanishing between pixel centers
    double area2 = 0.0;
    Vec2 centroid = Vec2::Zero();
    for (std::size_t i = 0; i < n; ++i) {
        area2 += poly[i].x() * poly[(i + 1) % n].y() - poly[(i + 1) % n].x() * poly[i].y();
        centroid += poly[i];
    }
    if (std::abs(area2) < 1e-12) return;
    centroid /= static_cast<double>(n);
    int px = static_cast<int>(std::floor(centroid.x()));
    int py = static_cast<int>(std::floor(centroid.y()));
    if (px >= 0 && px < width && py >= 0 && py < height) fn(py, px, px + 1);
}

PixelRect covered_bounds(const Poly& poly, int width, int height) {
    PixelRect r;
    bool first = true;
    scan_convex(poly, width, height, [&](int y, int xb, int xe) {
        if (first) {
            r = PixelRect{xb, y, xe - 1, y};
            first = false;
        } else {
            r.x0 = std::min(r.x0, xb);
            r.x1 = std::max(r.x1, xe - 1);
            r.y1 = y;
        }
    });
    return r;
}

void fill_convex(ImageTensor& img, const Poly& poly, const std::array<std::uint8_t, 3>& rgb) {
    scan_convex(poly, img.width, img.height, [&](int y, int xb, int xe) {
        for (int x = xb; x < xe; ++x)
            for (int c = 0; c < img.channels; ++c) img.at(x, y, c) = rgb[c % 3];
    });
}

void draw_rect_outline(ImageTensor& img, const PixelRect& rect,
                       const std::array<std::uint8_t, 3>& rgb) {
    if (rect.empty()) return;
    int x0 = std::max(0, rect.x0), x1 = std::min(img.width - 1, rect.x1);
    int y0 = std::max(0, rect.y0), y1 = std::min(img.height - 1, rect.y1);
    if (x0 > x1 || y0 > y1) return;
    auto put = [&](int x, int y) {
        for (int c = 0; c < img.channels; ++c) img.at(x, y, c) = rgb[c % 3];
    };
    for (int x = x0; x <= x1; ++x) {
        if (rect.y0 >= 0 && rect.y0 < img.height) put(x, rect.y0);
        if (rect.y1 >= 0 && rect.y1 < img.height) put(x, rect.y1);
    }
    for (int y = y0; y <= y1; ++y) {
        if (rect.x0 >= 0 && rect.x0 < img.width) put(rect.x0, y);
        if (rect.x1 >= 0 && rect.x1 < img.width) put(rect.x1, y);
    }
}

void add_glow(ImageTensor& img, double cx, double cy, double radius,
              const std::array<double, 3>& delta) {
    if (radius <= 0.0) return;
    int x0 = std::max(0, static_cast<int>(std::floor(cx - radius)));
    int x1 = std::min(img.width - 1, static_cast<int>(std::ceil(cx + radius)));
    int y0 = std::max(0, static_cast<int>(std::floor(cy - radius)));
    int y1 = std::min(img.height - 1, static_cast<int>(std::ceil(cy + radius)));
    const double r2 = radius * radius;
    for (int y = y0; y <= y1; ++y)
        for (int x = x0; x <= x1; ++x) {
            double dx = x + 0.5 - cx, dy = y + 0.5 - cy;
            double d2 = dx * dx + dy * dy;
            if (d2 >= r2) continue;
            double w = 1.0 - d2 / r2;
            for (int c = 0; c < img.channels; ++c) {
                int v = img.at(x, y, c) + static_cast<int>(std::lround(w * delta[c % 3]));
                img.at(x, y, c) = static_cast<std::uint8_t>(std::clamp(v, 0, 255));
            }
        }
}

}  // namespace vcp
