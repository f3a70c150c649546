// SPDX-License-Identifier: Apache-2.0
#include "vcp/channel.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace vcp {

double normalize_phase(double phase) {
    constexpr double two_pi = 2.0 * std::numbers::pi;
    double p = std::fmod(phase, two_pi);
    if (p < 0.0) p += two_pi;
    if (p >= two_pi) p = 0.0;  // fmod residue exactly at the boundary
    return p;
}

ChannelImpulseResponse make_cir(double timestamp, std::vector<MultipathComponent> components) {
    for (auto& c : components) c.phase = normalize_phase(c.phase);
    std::stable_sort(components.begin(), components.end(),
                     [](const MultipathComponent& a, const MultipathComponent& b) {
                         return a.delay < b.delay;
                     });
    return ChannelImpulseResponse{timestamp, std::move(components)};
}

double received_power_db(const ChannelImpulseResponse& cir, PowerMode mode,
                         double reference_db) {
    double linear = 0.0;
    if (mode == PowerMode::coherent) {
        double re = 0.0, im = 0.0;
        for (const auto& c : cir.components) {
            re += c.amplitude * std::cos(c.phase);
            im -= c.amplitude * std::sin(c.phase);
        }
        linear = re * re + im * im;
    } else {
        for (const auto& c : cir.components) linear += c.amplitude * c.amplitude;
    }
    if (linear < kPowerFloorLinear) return kPowerFloorDb + reference_db;
    return 10.0 * std::log10(linear) + reference_db;
}

double rms_delay_spread(const ChannelImpulseResponse& cir) {
    double p = 0.0, m1 = 0.0, m2 = 0.0;
    for (const auto& c : cir.components) {
        double w = c.amplitude * c.amplitude;
        p += w;
        m1 += w * c.delay;
        m2 += w * c.delay * c.delay;
    }
    if (p <= 0.0) throw std::domain_error("undefined delay spread");
    double mean = m1 / p;
    double var = m2 / p - mean * mean;
    return std::sqrt(std::max(var, 0.0));
}

std::vector<std::complex<double>> transfer_function(const ChannelImpulseResponse& cir,
                                                    const std::vector<double>& frequencies) {
    constexpr double two_pi = 2.0 * std::numbers::pi;
    std::vector<std::complex<double>> h;
    h.reserve(frequencies.size());
    for (double f : frequencies) {
        std::complex<double> sum = 0.0;
        for (const auto& c : cir.components)
            sum += std::polar(c.amplitude, -(c.phase + two_pi * f * c.delay));
        h.push_back(sum);
    }
    return h;
}

double fspl_db(double distance_m, double frequency_hz) {
    if (!(distance_m > 0.0) || !(frequency_hz > 0.0))
        throw std::domain_error("fspl_db: distance and frequency must be positive");
    return 20.0 *
           std::log10(4.0 * std::numbers::pi * distance_m * frequency_hz / kSpeedOfLight);
}

}  // namespace vcp
