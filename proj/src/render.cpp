// SPDX-License-Identifier: Apache-2.0
#include "vcp/render.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "vcp/rng.hpp"

namespace vcp {

namespace {

using Rgb = std::array<std::uint8_t, 3>;

constexpr double kNearPlane = 0.2;
constexpr double kNightFactor = 0.32;

constexpr Rgb kSkyDay{148, 186, 227};
constexpr Rgb kSkyNight{13, 15, 36};
constexpr Rgb kGround{96, 104, 88};
constexpr Rgb kSidewalk{168, 162, 150};
constexpr Rgb kRoad{116, 116, 120};
constexpr Rgb kLaneMark{212, 212, 206};
constexpr Rgb kTargetColor{226, 204, 94};
constexpr Rgb kPedestrianColor{72, 70, 96};

// muted vehicle bodies; pure red/green/blue stay reserved for overlays
constexpr std::array<Rgb, 6> kVehiclePalette{{{176, 178, 184},
                                              {64, 78, 118},
                                              {128, 58, 54},
                                              {108, 86, 62},
                                              {74, 76, 80},
                                              {204, 204, 198}}};

Rgb dim(const Rgb& c, double f) {
    return Rgb{static_cast<std::uint8_t>(std::lround(c[0] * f)),
               static_cast<std::uint8_t>(std::lround(c[1] * f)),
               static_cast<std::uint8_t>(std::lround(c[2] * f))};
}

struct Camera {
    Vec3 pos, fwd, right, up;
    double fx, fy, cx, cy;

    Camera(const ScenarioConfig& cfg, int w, int h) {
        pos = cfg.camera_position;
        fwd = (cfg.camera_look_at - pos).normalized();
        const Vec3 world_up(0.0, 0.0, 1.0);
        right = fwd.cross(world_up).normalized();
        up = right.cross(fwd);
        fx = (w / 2.0) / std::tan(0.5 * cfg.fov_deg * std::numbers::pi / 180.0);
        fy = fx;  // square pixels
        cx = w / 2.0;
        cy = h / 2.0;
    }

    Vec3 to_cam(const Vec3& p) const {
        const Vec3 d = p - pos;
        return Vec3(d.dot(right), d.dot(up), d.dot(fwd));
    }
    Vec2 project(const Vec3& c) const {
        return Vec2(cx + fx * c.x() / c.z(), cy - fy * c.y() / c.z());
    }
};

// Sutherland-Hodgman clip of an ordered planar polygon against z >= near,
// then projection to pixel coordinates.
Poly project_planar(const Camera& cam, const std::vector<Vec3>& world) {
    std::vector<Vec3> in;
    in.reserve(world.size());
    for (const auto& p : world) in.push_back(cam.to_cam(p));
    std::vector<Vec3> out;
    const std::size_t n = in.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Vec3& a = in[i];
        const Vec3& b = in[(i + 1) % n];
        const bool a_in = a.z() > kNearPlane, b_in = b.z() > kNearPlane;
        if (a_in) out.push_back(a);
        if (a_in != b_in) {
            double t = (kNearPlane - a.z()) / (b.z() - a.z());
            out.push_back(a + t * (b - a));
        }
    }
    Poly poly;
    poly.reserve(out.size());
    for (const auto& c : out) poly.push_back(cam.project(c));
    return poly;
}

// Convex silhouette of a box: projected corners plus near-plane edge crossings.
Poly project_box(const Camera& cam, const Box3& box) {
    std::array<Vec3, 8> corner;
    for (int i = 0; i < 8; ++i)
        corner[i] = cam.to_cam(Vec3(i & 1 ? box.hi.x() : box.lo.x(),
                                    i & 2 ? box.hi.y() : box.lo.y(),
                                    i & 4 ? box.hi.z() : box.lo.z()));
    static constexpr int edges[12][2] = {{0, 1}, {2, 3}, {4, 5}, {6, 7}, {0, 2}, {1, 3},
                                         {4, 6}, {5, 7}, {0, 4}, {1, 5}, {2, 6}, {3, 7}};
    Poly pts;
    for (const auto& c : corner)
        if (c.z() > kNearPlane) pts.push_back(cam.project(c));
    for (const auto& e : edges) {
        const Vec3& a = corner[e[0]];
        const Vec3& b = corner[e[1]];
        if ((a.z() > kNearPlane) == (b.z() > kNearPlane)) continue;
        double t = (kNearPlane - a.z()) / (b.z() - a.z());
        pts.push_back(cam.project(a + t * (b - a)));
    }
    return convex_hull(std::move(pts));
}

Rgb object_color(const SceneObject& obj) {
    switch (obj.cls) {
        case ObjectClass::target_vehicle: return kTargetColor;
        case ObjectClass::pedestrian: return kPedestrianColor;
        case ObjectClass::vehicle: break;
    }
    auto idx = mix_seed(static_cast<std::uint64_t>(obj.object_id)) % kVehiclePalette.size();
    return kVehiclePalette[idx];
}

struct Building {
    double x0, x1, height;
    Rgb color;
};

// Deterministic facade row behind the far lane; style keyed by street id.
std::vector<Building> building_row(const ScenarioConfig& cfg) {
    static constexpr std::array<std::array<Rgb, 4>, 3> palettes{{
        {{{156, 110, 92}, {170, 140, 110}, {138, 96, 80}, {182, 158, 132}}},
        {{{118, 128, 140}, {96, 104, 120}, {140, 148, 158}, {84, 90, 104}}},
        {{{168, 156, 120}, {132, 128, 96}, {188, 176, 140}, {110, 112, 88}}},
    }};
    const auto& palette = palettes[static_cast<std::size_t>(
        ((cfg.street_id % 3) + 3) % 3)];
    Rng rng(derive_seed(0xb1d5u, static_cast<std::uint64_t>(cfg.street_id)));
    std::vector<Building> row;
    double x = -4.0;
    while (x < cfg.street_length_m + 8.0) {
        Building b;
        b.x0 = x;
        b.x1 = x + rng.uniform(8.0, 15.0);
        b.height = rng.uniform(6.0, 14.0);
        b.color = palette[static_cast<std::size_t>(rng.uniform_int(palette.size()))];
        row.push_back(b);
        x = b.x1 + rng.uniform(0.8, 2.5);
    }
    return row;
}

}  // namespace

std::pair<ImageTensor, AnnotationSet> render(const SceneSnapshot& snapshot,
                                             const ScenarioConfig& config, int width,
                                             int height) {
    if (width <= 0 || height <= 0)
        throw std::invalid_argument("render: dimensions must be positive");
    const bool night = snapshot.condition == Condition::night;
    const double f = night ? kNightFactor : 1.0;
    const Camera cam(config, width, height);
    const double road_far_y = config.lane_count * config.lane_width_m;
    const double facade_y = road_far_y + 0.5;

    ImageTensor img(width, height, 3);
    const Rgb sky = night ? kSkyNight : kSkyDay;
    for (int y = 0; y < height; ++y)
        for (int x = 0; x < width; ++x)
            for (int c = 0; c < 3; ++c) img.at(x, y, c) = sky[c];

    auto fill_quad = [&](const std::vector<Vec3>& quad, const Rgb& color) {
        fill_convex(img, project_planar(cam, quad), dim(color, f));
    };

    const double L = config.street_length_m;
    for (const auto& b : building_row(config))
        fill_quad({{b.x0, facade_y, 0.0},
                   {b.x1, facade_y, 0.0},
                   {b.x1, facade_y, b.height},
                   {b.x0, facade_y, b.height}},
                  b.color);

    fill_quad({{0, -10, 0}, {L, -10, 0}, {L, road_far_y + 0.2, 0}, {0, road_far_y + 0.2, 0}},
              kGround);
    fill_quad({{0, -1.8, 0.0}, {L, -1.8, 0.0}, {L, 0.0, 0.0}, {0, 0.0, 0.0}}, kSidewalk);
    fill_quad({{0, 0, 0}, {L, 0, 0}, {L, road_far_y, 0}, {0, road_far_y, 0}}, kRoad);
    for (int lane = 1; lane < config.lane_count; ++lane) {
        const double y = lane * config.lane_width_m;
        for (double x = 1.0; x < L - 2.0; x += 4.0)
            fill_quad({{x, y - 0.06, 0.0}, {x + 2.0, y - 0.06, 0.0},
                       {x + 2.0, y + 0.06, 0.0}, {x, y + 0.06, 0.0}},
                      kLaneMark);
    }

    // annotations are geometry-only, computed before any light effects
    AnnotationSet ann;
    std::vector<Poly> silhouettes(snapshot.objects.size());
    for (std::size_t i = 0; i < snapshot.objects.size(); ++i) {
        const auto& obj = snapshot.objects[i];
        silhouettes[i] = project_box(cam, obj.footprint);
        PixelRect box = covered_bounds(silhouettes[i], width, height);
        if (box.empty()) continue;
        ann.objects.push_back(Annotation{obj.object_id, obj.cls, box, silhouettes[i]});
    }

    std::vector<std::size_t> order(snapshot.objects.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return cam.to_cam(snapshot.objects[a].footprint.center()).z() >
               cam.to_cam(snapshot.objects[b].footprint.center()).z();
    });
    for (auto i : order)
        fill_convex(img, silhouettes[i], dim(object_color(snapshot.objects[i]), f));

    if (night) {
        for (double x = 12.5; x < L; x += 25.0) {
            Vec3 c = cam.to_cam(Vec3(x, -0.5, 4.8));
            if (c.z() <= kNearPlane) continue;
            Vec2 p = cam.project(c);
            double r = std::clamp(cam.fx * 1.1 / c.z(), 1.5, 20.0);
            add_glow(img, p.x(), p.y(), r, {75, 70, 45});
        }
        for (const auto& obj : snapshot.objects) {
            if (obj.cls == ObjectClass::pedestrian) continue;
            const auto& fp = obj.footprint;
            double dir = obj.velocity.x() >= 0.0 ? 1.0 : -1.0;
            double front_x = dir > 0.0 ? fp.hi.x() : fp.lo.x();
            for (double ly : {fp.lo.y() + 0.35, fp.hi.y() - 0.35}) {
                Vec3 c = cam.to_cam(Vec3(front_x, ly, 0.65));
                if (c.z() <= kNearPlane) continue;
                Vec2 p = cam.project(c);
                double r = std::clamp(cam.fx * 0.22 / c.z(), 0.8, 6.0);
                add_glow(img, p.x(), p.y(), r, {95, 90, 65});
            }
        }
    }
    return {std::move(img), std::move(ann)};
}

}  // namespace vcp
