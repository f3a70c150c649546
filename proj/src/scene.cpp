// SPDX-License-Identifier: Apache-2.0
#include "vcp/scene.hpp"

#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "vcp/rng.hpp"

namespace vcp {

std::string to_string(ObjectClass c) {
    switch (c) {
        case ObjectClass::target_vehicle: return "target-vehicle";
        case ObjectClass::vehicle: return "vehicle";
        case ObjectClass::pedestrian: return "pedestrian";
    }
    return "vehicle";
}

std::string to_string(Condition c) { return c == Condition::day ? "day" : "night"; }

ObjectClass object_class_from_string(const std::string& s) {
    if (s == "target-vehicle") return ObjectClass::target_vehicle;
    if (s == "vehicle") return ObjectClass::vehicle;
    if (s == "pedestrian") return ObjectClass::pedestrian;
    throw std::invalid_argument("unknown object class: " + s);
}

Condition condition_from_string(const std::string& s) {
    if (s == "day") return Condition::day;
    if (s == "night") return Condition::night;
    throw std::invalid_argument("unknown condition: " + s);
}

void validate(const ScenarioConfig& config) {
    auto fail = [](const std::string& what) { throw std::invalid_argument("scenario config: " + what); };
    if (!(config.street_length_m > 0.0)) fail("street_length_m must be positive");
    if (config.lane_count < 1) fail("lane_count must be >= 1");
    if (!(config.lane_width_m > 0.0)) fail("lane_width_m must be positive");
    if (!(config.fov_deg > 0.0) || !(config.fov_deg < 180.0)) fail("fov_deg must lie in (0, 180)");
    if (!(config.snapshot_rate_hz > 0.0)) fail("snapshot_rate_hz must be positive");
    if (!(config.duration_s > 0.0)) fail("duration_s must be positive");
    if (!(config.tx_mean_speed_mps > 0.0)) fail("tx_mean_speed_mps must be positive");
    if (config.interferer_rate_per_min < 0.0) fail("interferer_rate_per_min must be >= 0");
    if (!(config.frequency_hz > 0.0)) fail("frequency_hz must be positive");
    if (config.blockage_db < 0.0 || config.blockage_cap_db < 0.0) fail("blockage must be >= 0 dB");
}

namespace {

constexpr double kTargetLength = 4.6;
constexpr double kTargetWidth = 1.8;
constexpr double kTargetHeight = 1.5;

enum class Archetype { platoon, oncoming, pedestrian };

struct Interferer {
    SceneObject obj;
    Archetype kind = Archetype::platoon;
    double expiry = 0.0;          // platoon / pedestrian despawn time
    double platoon_offset = 0.0;  // distance behind the target, toward the base station
    double half_len = 0.0, half_wid = 0.0, height = 0.0, center_y = 0.0;
};

Box3 box_at(double cx, double cy, double half_len, double half_wid, double height) {
    return Box3{{cx - half_len, cy - half_wid, 0.0}, {cx + half_len, cy + half_wid, height}};
}

}  // namespace

std::vector<SceneSnapshot> generate_scenario(const ScenarioConfig& config) {
    validate(config);
    const auto n = static_cast<long long>(std::llround(config.duration_s * config.snapshot_rate_hz));
    if (n <= 0) throw std::invalid_argument("scenario config: zero snapshots");

    const double dt = 1.0 / config.snapshot_rate_hz;
    const double outer_lane_y = (config.lane_count - 0.5) * config.lane_width_m;
    const double inner_lane_y = 0.5 * config.lane_width_m;
    const double x_lo = 5.0;
    const double x_hi = config.street_length_m - 5.0;

    Rng rng(config.seed);

    double tx_x = rng.uniform(x_lo, x_hi);
    double tx_dir = rng.bernoulli(0.5) ? 1.0 : -1.0;
    const double tx_speed = config.tx_mean_speed_mps;

    std::vector<Interferer> alive;
    int next_id = 1;

    std::vector<SceneSnapshot> out;
    out.reserve(static_cast<std::size_t>(n));

    for (long long k = 0; k < n; ++k) {
        const double t = static_cast<double>(k) * dt;

        if (k > 0) {
            tx_x += tx_dir * tx_speed * dt;
            if (tx_x > x_hi) { tx_x = 2.0 * x_hi - tx_x; tx_dir = -1.0; }
            if (tx_x < x_lo) { tx_x = 2.0 * x_lo - tx_x; tx_dir = 1.0; }

            for (auto& it : alive) {
                switch (it.kind) {
                    case Archetype::platoon: break;  // repositioned below, rides with the target
                    case Archetype::oncoming:
                    case Archetype::pedestrian: {
                        double cx = it.obj.footprint.center().x() + it.obj.velocity.x() * dt;
                        it.obj.footprint = box_at(cx, it.center_y, it.half_len, it.half_wid, it.height);
                        break;
                    }
                }
            }
            std::erase_if(alive, [&](const Interferer& it) {
                if (it.kind == Archetype::oncoming) {
                    double cx = it.obj.footprint.center().x();
                    return cx < 1.0 || cx > config.street_length_m - 1.0;
                }
                return t >= it.expiry;
            });
        }

        // seeded arrivals; archetype mix is fixed (same-lane passing vehicles 84%,
        // oncoming inner-lane 8%, sidewalk pedestrians 8%); short lifetimes keep
        // the per-run variance of the LOS statistics small
        const double rate_per_s = config.interferer_rate_per_min / 60.0;
        auto arrivals = rng.poisson(rate_per_s * dt);
        for (std::uint64_t a = 0; a < arrivals; ++a) {
            double u = rng.uniform();
            Interferer it;
            it.obj.object_id = next_id++;
            if (u < 0.84) {
                it.kind = Archetype::platoon;
                it.obj.cls = ObjectClass::vehicle;
                it.platoon_offset = rng.uniform(2.0, 4.5);
                it.expiry = t + rng.uniform(1.8, 2.8);
                bool tall = rng.bernoulli(0.90);
                it.height = tall ? rng.uniform(1.85, 2.30) : rng.uniform(1.42, 1.58);
                it.half_len = 0.5 * rng.uniform(4.4, 5.2);
                it.half_wid = 0.9;
                it.center_y = outer_lane_y;
            } else if (u < 0.92) {
                it.kind = Archetype::oncoming;
                it.obj.cls = ObjectClass::vehicle;
                double speed = rng.uniform(9.0, 14.0);
                it.obj.velocity = Vec2(-speed, 0.0);
                bool tall = rng.bernoulli(0.5);
                it.height = tall ? rng.uniform(2.10, 2.70) : rng.uniform(1.42, 1.60);
                it.half_len = 0.5 * rng.uniform(4.5, 7.0);
                it.half_wid = 0.95;
                it.center_y = inner_lane_y;
                it.obj.footprint = box_at(config.street_length_m - 2.0, it.center_y,
                                          it.half_len, it.half_wid, it.height);
            } else {
                it.kind = Archetype::pedestrian;
                it.obj.cls = ObjectClass::pedestrian;
                double speed = rng.uniform(1.1, 1.7);
                double dir = rng.bernoulli(0.5) ? 1.0 : -1.0;
                it.obj.velocity = Vec2(dir * speed, 0.0);
                it.expiry = t + 6.0 / speed;
                it.height = rng.uniform(1.55, 1.90);
                it.half_len = 0.225;
                it.half_wid = 0.225;
                it.center_y = rng.uniform(-1.1, -0.4);
                it.obj.footprint = box_at(rng.uniform(3.0, config.street_length_m - 3.0),
                                          it.center_y, it.half_len, it.half_wid, it.height);
            }
            alive.push_back(it);
        }

        SceneSnapshot snap;
        snap.timestamp = t;
        snap.condition = config.condition;
        snap.rx_position = config.camera_position;
        snap.tx_position = Vec3(tx_x, outer_lane_y, config.tx_antenna_height_m);

        SceneObject target;
        target.object_id = 0;
        target.cls = ObjectClass::target_vehicle;
        target.footprint = box_at(tx_x, outer_lane_y, 0.5 * kTargetLength, 0.5 * kTargetWidth,
                                  kTargetHeight);
        target.velocity = Vec2(tx_dir * tx_speed, 0.0);
        snap.objects.push_back(target);

        for (auto& it : alive) {
            if (it.kind == Archetype::platoon) {
                double cx = std::max(tx_x - it.platoon_offset, it.half_len + 0.2);
                it.obj.footprint = box_at(cx, it.center_y, it.half_len, it.half_wid, it.height);
                it.obj.velocity = target.velocity;
            }
            snap.objects.push_back(it.obj);
        }
        out.push_back(std::move(snap));
    }
    return out;
}

LosResult los_blocked(const SceneSnapshot& snapshot) {
    LosResult r;
    for (const auto& obj : snapshot.objects) {
        if (obj.cls == ObjectClass::target_vehicle) continue;
        if (segment_intersects_box(snapshot.rx_position, snapshot.tx_position, obj.footprint))
            r.blockers.push_back(obj.object_id);
    }
    r.blocked = !r.blockers.empty();
    return r;
}

ChannelImpulseResponse propagate(const SceneSnapshot& snapshot, const ScenarioConfig& config) {
    const Vec3& rx = snapshot.rx_position;
    const Vec3& tx = snapshot.tx_position;
    const double d1 = (tx - rx).norm();
    if (d1 < 1e-9) throw std::invalid_argument("propagate: coincident tx and rx positions");

    const double f = config.frequency_hz;
    constexpr double two_pi = 2.0 * std::numbers::pi;

    MultipathComponent direct;
    direct.amplitude = std::pow(10.0, -fspl_db(d1, f) / 20.0);
    direct.phase = two_pi * f * d1 / kSpeedOfLight;
    direct.delay = d1 / kSpeedOfLight;

    const Vec3 image(tx.x(), tx.y(), -tx.z());
    const double d2 = (image - rx).norm();
    MultipathComponent ground;
    const double gamma = config.ground_reflection;
    ground.amplitude = std::abs(gamma) * std::pow(10.0, -fspl_db(d2, f) / 20.0);
    ground.phase = two_pi * f * d2 / kSpeedOfLight + (gamma < 0.0 ? std::numbers::pi : 0.0);
    ground.delay = d2 / kSpeedOfLight;

    const auto los = los_blocked(snapshot);
    if (los.blocked) {
        double att_db = std::min(config.blockage_db * static_cast<double>(los.blockers.size()),
                                 config.blockage_cap_db);
        double factor = std::pow(10.0, -att_db / 20.0);
        direct.amplitude *= factor;
        ground.amplitude *= factor;
    }
    return make_cir(snapshot.timestamp, {direct, ground});
}

ChannelLabel label_snapshot(const SceneSnapshot& snapshot, const ScenarioConfig& config) {
    const auto cir = propagate(snapshot, config);
    ChannelLabel label;
    label.received_power_db = received_power_db(cir, PowerMode::coherent, 0.0);
    label.path_loss_db = -label.received_power_db;  // tx power is the 0 dB reference
    label.rms_delay_spread_s = rms_delay_spread(cir);
    label.los_flag = !los_blocked(snapshot).blocked;
    return label;
}

namespace {

template <typename F>
void parse_kv_file(const std::string& path, F&& handle) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open scenario config: " + path);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        auto eq = line.find('=');
        if (eq == std::string::npos)
            throw std::runtime_error(path + ":" + std::to_string(line_no) + ": expected key=value");
        auto trim = [](std::string s) {
            auto b = s.find_first_not_of(" \t\r");
            auto e = s.find_last_not_of(" \t\r");
            return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
        };
        handle(trim(line.substr(0, eq)), trim(line.substr(eq + 1)), line_no);
    }
}

}  // namespace

ScenarioConfig load_scenario_config(const std::string& path) {
    ScenarioConfig c;
    parse_kv_file(path, [&](const std::string& key, const std::string& value, int line_no) {
        auto bad = [&](const std::string& why) {
            throw std::runtime_error(path + ":" + std::to_string(line_no) + ": " + why);
        };
        try {
            if (key == "street_length_m") c.street_length_m = std::stod(value);
            else if (key == "lane_count") c.lane_count = std::stoi(value);
            else if (key == "lane_width_m") c.lane_width_m = std::stod(value);
            else if (key == "camera_x") c.camera_position.x() = std::stod(value);
            else if (key == "camera_y") c.camera_position.y() = std::stod(value);
            else if (key == "camera_z") c.camera_position.z() = std::stod(value);
            else if (key == "look_at_x") c.camera_look_at.x() = std::stod(value);
            else if (key == "look_at_y") c.camera_look_at.y() = std::stod(value);
            else if (key == "look_at_z") c.camera_look_at.z() = std::stod(value);
            else if (key == "fov_deg") c.fov_deg = std::stod(value);
            else if (key == "snapshot_rate_hz") c.snapshot_rate_hz = std::stod(value);
            else if (key == "duration_s") c.duration_s = std::stod(value);
            else if (key == "tx_mean_speed_mps") c.tx_mean_speed_mps = std::stod(value);
            else if (key == "tx_antenna_height_m") c.tx_antenna_height_m = std::stod(value);
            else if (key == "interferer_rate_per_min") c.interferer_rate_per_min = std::stod(value);
            else if (key == "frequency_hz") c.frequency_hz = std::stod(value);
            else if (key == "ground_reflection") c.ground_reflection = std::stod(value);
            else if (key == "blockage_db") c.blockage_db = std::stod(value);
            else if (key == "blockage_cap_db") c.blockage_cap_db = std::stod(value);
            else if (key == "condition") c.condition = condition_from_string(value);
            else if (key == "street_id") c.street_id = std::stoi(value);
            else if (key == "seed") c.seed = std::stoull(value);
            else bad("unknown key '" + key + "'");
        } catch (const std::invalid_argument&) {
            bad("invalid value '" + value + "' for key '" + key + "'");
        }
    });
    validate(c);
    return c;
}

void save_scenario_config(const ScenarioConfig& c, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write scenario config: " + path);
    out.precision(17);
    out << "street_length_m = " << c.street_length_m << "\n"
        << "lane_count = " << c.lane_count << "\n"
        << "lane_width_m = " << c.lane_width_m << "\n"
        << "camera_x = " << c.camera_position.x() << "\n"
        << "camera_y = " << c.camera_position.y() << "\n"
        << "camera_z = " << c.camera_position.z() << "\n"
        << "look_at_x = " << c.camera_look_at.x() << "\n"
        << "look_at_y = " << c.camera_look_at.y() << "\n"
        << "look_at_z = " << c.camera_look_at.z() << "\n"
        << "fov_deg = " << c.fov_deg << "\n"
        << "snapshot_rate_hz = " << c.snapshot_rate_hz << "\n"
        << "duration_s = " << c.duration_s << "\n"
        << "tx_mean_speed_mps = " << c.tx_mean_speed_mps << "\n"
        << "tx_antenna_height_m = " << c.tx_antenna_height_m << "\n"
        << "interferer_rate_per_min = " << c.interferer_rate_per_min << "\n"
        << "frequency_hz = " << c.frequency_hz << "\n"
        << "ground_reflection = " << c.ground_reflection << "\n"
        << "blockage_db = " << c.blockage_db << "\n"
        << "blockage_cap_db = " << c.blockage_cap_db << "\n"
        << "condition = " << to_string(c.condition) << "\n"
        << "street_id = " << c.street_id << "\n"
        << "seed = " << c.seed << "\n";
}

}  // namespace vcp
