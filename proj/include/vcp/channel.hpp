// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <complex>
#include <vector>

namespace vcp {

inline constexpr double kSpeedOfLight = 299792458.0;  // m/s

// Floor applied to linear power before the log, so total cancellation and
// empty responses yield a finite -300 dB instead of -inf.
inline constexpr double kPowerFloorLinear = 1e-30;
inline constexpr double kPowerFloorDb = -300.0;

/// One propagation path: linear voltage gain, phase in [0, 2*pi), delay in seconds.
struct MultipathComponent {
    double amplitude = 0.0;
    double phase = 0.0;
    double delay = 0.0;
};

/// Sum of delayed, attenuated, phase-shifted paths at one snapshot time.
/// Components are kept sorted by delay ascending.
struct ChannelImpulseResponse {
    double timestamp = 0.0;
    std::vector<MultipathComponent> components;
};

struct ChannelLabel {
    double received_power_db = 0.0;
    double path_loss_db = 0.0;
    double rms_delay_spread_s = 0.0;
    bool los_flag = true;
};

enum class PowerMode { coherent, incoherent };

/// Wraps an angle into [0, 2*pi).
double normalize_phase(double phase);

/// Builds a response with phases normalized and components sorted by delay.
ChannelImpulseResponse make_cir(double timestamp, std::vector<MultipathComponent> components);

/// Received power in dB relative to reference_db.
/// coherent:   ref + 10*log10(|sum_l a_l * exp(-j*phi_l)|^2)
/// incoherent: ref + 10*log10(sum_l a_l^2)
/// Values below the linear floor (and empty responses) return ref - 300 dB.
double received_power_db(const ChannelImpulseResponse& cir, PowerMode mode,
                         double reference_db = 0.0);

/// RMS delay spread: second central moment of the power-delay profile,
/// weights a_l^2. Throws std::domain_error on empty or zero-power input.
double rms_delay_spread(const ChannelImpulseResponse& cir);

/// H(f) = sum_l a_l * exp(-j*phi_l) * exp(-j*2*pi*f*tau_l)
std::vector<std::complex<double>> transfer_function(const ChannelImpulseResponse& cir,
                                                    const std::vector<double>& frequencies);

/// Free-space path loss 20*log10(4*pi*d*f/c). Throws std::domain_error unless
/// distance_m > 0 and frequency_hz > 0.
double fspl_db(double distance_m, double frequency_hz);

}  // namespace vcp
