// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <set>

#include "vcp/image.hpp"
#include "vcp/raster.hpp"
#include "vcp/render.hpp"
#include "vcp/scene.hpp"

using namespace vcp;

namespace {
SceneSnapshot target_at(const Vec3& tx_antenna, const Box3& body) {
    SceneSnapshot s;
    s.rx_position = Vec3(0.0, -5.0, 3.0);
    s.tx_position = tx_antenna;
    SceneObject t;
    t.object_id = 0;
    t.cls = ObjectClass::target_vehicle;
    t.footprint = body;
    s.objects.push_back(t);
    return s;
}
}  // namespace

TEST_CASE("convex hull and scanline coverage") {
    Poly square = {{0, 0}, {4, 0}, {4, 3}, {0, 3}};
    Poly with_interior = square;
    with_interior.push_back({2, 1});
    with_interior.push_back({1, 2});
    auto hull = convex_hull(with_interior);
    CHECK(hull.size() == 4);

    auto rect = covered_bounds(square, 10, 10);
    CHECK(rect.x0 == 0);
    CHECK(rect.y0 == 0);
    CHECK(rect.x1 == 3);
    CHECK(rect.y1 == 2);

    int count = 0;
    scan_convex(square, 10, 10, [&](int, int xb, int xe) { count += xe - xb; });
    CHECK(count == 12);

    // clipped against the grid
    Poly off = {{-5, -5}, {2, -5}, {2, 2}, {-5, 2}};
    auto clipped = covered_bounds(off, 10, 10);
    CHECK(clipped.x0 == 0);
    CHECK(clipped.y0 == 0);
    CHECK(clipped.x1 == 1);
    CHECK(clipped.y1 == 1);

    // degenerate: too few points -> nothing covered
    CHECK(covered_bounds({{1, 1}, {3, 3}}, 10, 10).empty());
}

TEST_CASE("fill_convex changes exactly the covered pixels") {
    ImageTensor img(12, 8, 3, 10);
    Poly tri = {{1.0, 1.0}, {9.0, 1.0}, {1.0, 6.0}};
    std::set<std::pair<int, int>> covered;
    scan_convex(tri, img.width, img.height, [&](int y, int xb, int xe) {
        for (int x = xb; x < xe; ++x) covered.insert({x, y});
    });
    REQUIRE(!covered.empty());
    fill_convex(img, tri, {200, 50, 50});
    for (int y = 0; y < img.height; ++y)
        for (int x = 0; x < img.width; ++x) {
            bool in = covered.count({x, y}) > 0;
            CHECK(img.at(x, y, 0) == (in ? 200 : 10));
            CHECK(img.at(x, y, 1) == (in ? 50 : 10));
        }
}

TEST_CASE("image io: ppm and pgm round trips, failure paths") {
    ImageTensor rgb(7, 5, 3);
    for (std::size_t i = 0; i < rgb.data.size(); ++i)
        rgb.data[i] = static_cast<std::uint8_t>((i * 37) % 256);
    write_image(rgb, "roundtrip.ppm");
    CHECK(read_image("roundtrip.ppm") == rgb);
    std::remove("roundtrip.ppm");

    ImageTensor gray(4, 6, 1);
    for (std::size_t i = 0; i < gray.data.size(); ++i)
        gray.data[i] = static_cast<std::uint8_t>(i * 11);
    write_image(gray, "roundtrip.pgm");
    CHECK(read_image("roundtrip.pgm") == gray);
    std::remove("roundtrip.pgm");

    CHECK_THROWS_WITH_AS(read_image("missing_file.ppm"), doctest::Contains("missing_file.ppm"),
                         std::runtime_error);
}

TEST_CASE("render determinism and annotation bounds") {
    ScenarioConfig cfg;
    cfg.duration_s = 6.0;
    cfg.seed = 9;
    auto snaps = generate_scenario(cfg);
    const auto& snap = snaps[17];

    auto [img1, ann1] = render(snap, cfg, 96, 54);
    auto [img2, ann2] = render(snap, cfg, 96, 54);
    CHECK(img1 == img2);
    REQUIRE(ann1.objects.size() == ann2.objects.size());

    REQUIRE(ann1.target() != nullptr);
    for (const auto& a : ann1.objects) {
        CHECK_FALSE(a.box.empty());
        CHECK(a.box.x0 >= 0);
        CHECK(a.box.y0 >= 0);
        CHECK(a.box.x1 < 96);
        CHECK(a.box.y1 < 54);
        // every polygon-covered pixel lies inside the declared bounding box
        scan_convex(a.polygon, 96, 54, [&](int y, int xb, int xe) {
            CHECK(y >= a.box.y0);
            CHECK(y <= a.box.y1);
            CHECK(xb >= a.box.x0);
            CHECK(xe - 1 <= a.box.x1);
        });
    }
}

TEST_CASE("render: empty annotations when nothing projects into view") {
    ScenarioConfig cfg;
    auto snap = target_at({-30.0, 5.25, 1.6},
                          Box3{{-32.3, 4.35, 0.0}, {-27.7, 6.15, 1.5}});
    auto [img, ann] = render(snap, cfg, 96, 54);
    CHECK(ann.objects.empty());
    CHECK(img.width == 96);
}

TEST_CASE("render: pinhole size scaling with distance") {
    ScenarioConfig cfg;
    const Vec3 pos = cfg.camera_position;
    const Vec3 fwd = (cfg.camera_look_at - pos).normalized();

    auto box_on_axis = [&](double s) {
        Vec3 c = pos + s * fwd;
        return target_at(c, Box3{{c.x() - 0.01, c.y() - 1.0, c.z() - 1.5},
                                 {c.x() + 0.01, c.y() + 1.0, c.z() + 1.5}});
    };
    auto [img_near, ann_near] = render(box_on_axis(12.0), cfg, 384, 216);
    auto [img_far, ann_far] = render(box_on_axis(24.0), cfg, 384, 216);
    REQUIRE(ann_near.target() != nullptr);
    REQUIRE(ann_far.target() != nullptr);
    int h_near = ann_near.target()->box.height();
    int h_far = ann_far.target()->box.height();
    INFO("near " << h_near << " far " << h_far);
    CHECK(std::abs(h_near - 2 * h_far) <= 2);
}

TEST_CASE("render: day and night share annotations, night is darker") {
    ScenarioConfig cfg;
    cfg.duration_s = 5.0;
    cfg.seed = 31;
    auto snaps = generate_scenario(cfg);
    for (std::size_t idx : {3ul, 21ul}) {
        auto day = snaps[idx];
        day.condition = Condition::day;
        auto night = snaps[idx];
        night.condition = Condition::night;

        auto [img_d, ann_d] = render(day, cfg, 96, 54);
        auto [img_n, ann_n] = render(night, cfg, 96, 54);

        REQUIRE(ann_d.objects.size() == ann_n.objects.size());
        for (std::size_t i = 0; i < ann_d.objects.size(); ++i) {
            CHECK(ann_d.objects[i].object_id == ann_n.objects[i].object_id);
            CHECK(ann_d.objects[i].cls == ann_n.objects[i].cls);
            CHECK(ann_d.objects[i].box.x0 == ann_n.objects[i].box.x0);
            CHECK(ann_d.objects[i].box.y0 == ann_n.objects[i].box.y0);
            CHECK(ann_d.objects[i].box.x1 == ann_n.objects[i].box.x1);
            CHECK(ann_d.objects[i].box.y1 == ann_n.objects[i].box.y1);
            CHECK(ann_d.objects[i].polygon == ann_n.objects[i].polygon);
        }
        CHECK(mean_luminance(img_n) < mean_luminance(img_d));
    }
}

TEST_CASE("render: different streets produce different backdrops") {
    ScenarioConfig a, b;
    a.street_id = 1;
    b.street_id = 2;
    auto snap = target_at({40.0, 5.25, 1.6}, Box3{{37.7, 4.35, 0.0}, {42.3, 6.15, 1.5}});
    auto [img_a, ann_a] = render(snap, a, 96, 54);
    auto [img_b, ann_b] = render(snap, b, 96, 54);
    CHECK(img_a.data != img_b.data);
    REQUIRE(ann_a.target() != nullptr);
    CHECK(ann_a.target()->box.x0 == ann_b.target()->box.x0);
}
