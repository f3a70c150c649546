// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <utility>
#include <vector>

#include "vcp/raster.hpp"
#include "vcp/scene.hpp"

namespace vcp {

/// Ground-truth record for one visible object: pixel bounding box (inclusive)
/// and the convex silhouette polygon it was rasterized from.
struct Annotation {
    int object_id = 0;
    ObjectClass cls = ObjectClass::vehicle;
    PixelRect box;
    Poly polygon;
};

struct AnnotationSet {
    std::vector<Annotation> objects;  // ascending object_id

    const Annotation* find(int object_id) const {
        for (const auto& a : objects)
            if (a.object_id == object_id) return &a;
        return nullptr;
    }
    const Annotation* target() const {
        for (const auto& a : objects)
            if (a.cls == ObjectClass::target_vehicle) return &a;
        return nullptr;
    }
};

/// Rasterizes the snapshot through the configured pinhole camera: flat-shaded
/// sky, buildings, road and sidewalk, then objects back to front as filled
/// convex silhouettes. Night darkens the palette and adds lamp/headlight glow.
/// Every object covering at least one pixel is annotated; annotations depend
/// only on geometry, so day and night renders of one snapshot agree.
std::pair<ImageTensor, AnnotationSet> render(const SceneSnapshot& snapshot,
                                             const ScenarioConfig& config, int width,
                                             int height);

}  // namespace vcp
