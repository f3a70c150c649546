// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "vcp/channel.hpp"
#include "vcp/geometry.hpp"

namespace vcp {

enum class ObjectClass { target_vehicle, vehicle, pedestrian };
enum class Condition { day, night };

std::string to_string(ObjectClass c);
std::string to_string(Condition c);
ObjectClass object_class_from_string(const std::string& s);
Condition condition_from_string(const std::string& s);

struct SceneObject {
    int object_id = 0;
    ObjectClass cls = ObjectClass::vehicle;
    Box3 footprint;
    Vec2 velocity = Vec2::Zero();
};

struct SceneSnapshot {
    double timestamp = 0.0;
    Vec3 rx_position = Vec3::Zero();
    Vec3 tx_position = Vec3::Zero();
    std::vector<SceneObject> objects;  // objects[0] is the target vehicle
    Condition condition = Condition::day;
};

// Street runs along +x with the curb at y=0 and lanes stacked toward +y.
// The base station (Rx antenna + camera, one unit) stands off-street at y < 0.
struct ScenarioConfig {
    double street_length_m = 100.0;
    int lane_count = 2;
    double lane_width_m = 3.5;

    Vec3 camera_position = {0.0, -5.0, 3.0};   // doubles as rx antenna position
    Vec3 camera_look_at = {50.0, 5.25, 1.6};
    double fov_deg = 110.0;                    // horizontal field of view

    double snapshot_rate_hz = 8.0;
    double duration_s = 600.0;

    double tx_mean_speed_mps = 11.0;           // back-and-forth along the outer lane
    double tx_antenna_height_m = 1.6;

    double interferer_rate_per_min = 3.6;      // arrival rate of non-target objects

    double frequency_hz = 60e9;
    double ground_reflection = -0.7;           // reflection coefficient of the road
    double blockage_db = 15.0;                 // per blocking object
    double blockage_cap_db = 30.0;

    Condition condition = Condition::day;
    int street_id = 1;                         // scenario tag + building style selector
    std::uint64_t seed = 1;
};

/// Parses a key=value scenario file ('#' comments). Unknown keys are errors.
ScenarioConfig load_scenario_config(const std::string& path);

/// Writes the full key=value form of the config.
void save_scenario_config(const ScenarioConfig& config, const std::string& path);

/// Validates invariants; throws std::invalid_argument with the offending field.
void validate(const ScenarioConfig& config);

/// Deterministic scenario roll-out: the target vehicle shuttles along the outer
/// lane while seeded interferer traffic (lane vehicles and sidewalk pedestrians)
/// enters and leaves. Snapshots are spaced 1/rate apart starting at t=0.
std::vector<SceneSnapshot> generate_scenario(const ScenarioConfig& config);

struct LosResult {
    bool blocked = false;
    std::vector<int> blockers;  // ids of intersecting non-target objects
};

/// Tests the 3D segment rx->tx against every non-target object footprint.
LosResult los_blocked(const SceneSnapshot& snapshot);

/// Two-path propagation oracle: free-space direct ray plus a single ground
/// reflection via the image method; blockage attenuates both components by
/// min(blockage_db * blocker_count, blockage_cap_db).
ChannelImpulseResponse propagate(const SceneSnapshot& snapshot, const ScenarioConfig& config);

/// Bundles received power (coherent), path loss, delay spread and the LOS flag.
ChannelLabel label_snapshot(const SceneSnapshot& snapshot, const ScenarioConfig& config);

}  // namespace vcp
