// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <Eigen/Dense>

namespace vcp {

using Vec3 = Eigen::Vector3d;
using Vec2 = Eigen::Vector2d;

/// Axis-aligned box, lo <= hi on every axis.
struct Box3 {
    Vec3 lo = Vec3::Zero();
    Vec3 hi = Vec3::Zero();

    Vec3 center() const { return 0.5 * (lo + hi); }
    Vec3 extent() const { return hi - lo; }
    bool valid() const { return (hi.array() > lo.array()).all(); }
};

/// Slab test for the closed segment a->b against the box (touching counts).
inline bool segment_intersects_box(const Vec3& a, const Vec3& b, const Box3& box) {
    double t0 = 0.0, t1 = 1.0;
    const Vec3 d = b - a;
    for (int k = 0; k < 3; ++k) {
        if (d[k] == 0.0) {
            if (a[k] < box.lo[k] || a[k] > box.hi[k]) return false;
        } else {
            double inv = 1.0 / d[k];
            double near = (box.lo[k] - a[k]) * inv;
            double far = (box.hi[k] - a[k]) * inv;
            if (near > far) std::swap(near, far);
            t0 = std::max(t0, near);
            t1 = std::min(t1, far);
            if (t0 > t1) return false;
        }
    }
    return true;
}

}  // namespace vcp
