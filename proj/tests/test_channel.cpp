// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "vcp/channel.hpp"
#include "vcp/rng.hpp"

using namespace vcp;

namespace {
ChannelImpulseResponse cir_of(std::vector<MultipathComponent> mpcs, double t = 0.0) {
    return make_cir(t, std::move(mpcs));
}
}  // namespace

TEST_CASE("received power: identity and analytic two-path cases") {
    auto one = cir_of({{1.0, 0.0, 0.0}});
    CHECK(received_power_db(one, PowerMode::coherent) == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(received_power_db(one, PowerMode::incoherent) == doctest::Approx(0.0).epsilon(1e-12));

    auto cancel = cir_of({{1.0, 0.0, 0.0}, {1.0, std::numbers::pi, 0.0}});
    CHECK(received_power_db(cancel, PowerMode::coherent) == doctest::Approx(-300.0));

    auto partial = cir_of({{1.0, 0.0, 0.0}, {0.5, std::numbers::pi, 0.0}});
    CHECK(received_power_db(partial, PowerMode::coherent) ==
          doctest::Approx(-6.020599913279624).epsilon(1e-12));

    auto pair = cir_of({{1.0, 0.0, 0.0}, {1.0, 0.0, 0.0}});
    CHECK(received_power_db(pair, PowerMode::incoherent) ==
          doctest::Approx(3.010299956639812).epsilon(1e-12));
}

TEST_CASE("received power: floor and reference offset") {
    ChannelImpulseResponse empty{0.0, {}};
    CHECK(received_power_db(empty, PowerMode::coherent) == -300.0);
    CHECK(received_power_db(empty, PowerMode::incoherent, 20.0) == -280.0);

    Rng rng(7);
    for (int i = 0; i < 50; ++i) {
        std::vector<MultipathComponent> mpcs;
        int n = 1 + static_cast<int>(rng.uniform_int(5));
        for (int l = 0; l < n; ++l)
            mpcs.push_back({rng.uniform(0.0, 2.0), rng.uniform(0.0, 6.28), rng.uniform(0.0, 1e-6)});
        auto cir = cir_of(mpcs);
        for (auto mode : {PowerMode::coherent, PowerMode::incoherent}) {
            double base = received_power_db(cir, mode, 0.0);
            double offset = received_power_db(cir, mode, 17.5);
            CHECK(offset - 17.5 == doctest::Approx(base).epsilon(1e-12));
        }
    }
}

TEST_CASE("received power: coherent bounds and incoherent monotonicity") {
    Rng rng(11);
    for (int i = 0; i < 50; ++i) {
        std::vector<MultipathComponent> mpcs;
        int n = 2 + static_cast<int>(rng.uniform_int(5));
        double amp_sum = 0.0;
        for (int l = 0; l < n; ++l) {
            double a = rng.uniform(0.0, 2.0);
            amp_sum += a;
            mpcs.push_back({a, rng.uniform(0.0, 6.28), rng.uniform(0.0, 1e-6)});
        }
        auto cir = cir_of(mpcs);
        double coh = received_power_db(cir, PowerMode::coherent);
        double upper = 10.0 * std::log10(std::max(amp_sum * amp_sum, kPowerFloorLinear));
        CHECK(coh <= upper + 1e-9);

        double full = received_power_db(cir, PowerMode::incoherent);
        for (int drop = 0; drop < n; ++drop) {
            auto reduced = mpcs;
            reduced.erase(reduced.begin() + drop);
            CHECK(received_power_db(cir_of(reduced), PowerMode::incoherent) <= full + 1e-12);
        }
    }
}

TEST_CASE("rms delay spread: point cases and invariances") {
    CHECK(rms_delay_spread(cir_of({{0.7, 1.0, 3e-7}})) == doctest::Approx(0.0));

    auto two = cir_of({{1.0, 0.0, 0.0}, {1.0, 0.0, 100e-9}});
    CHECK(rms_delay_spread(two) == doctest::Approx(50e-9).epsilon(1e-12));

    Rng rng(3);
    std::vector<MultipathComponent> mpcs;
    for (int l = 0; l < 6; ++l)
        mpcs.push_back({rng.uniform(0.1, 2.0), rng.uniform(0.0, 6.28), rng.uniform(0.0, 1e-6)});
    double base = rms_delay_spread(cir_of(mpcs));

    auto shifted = mpcs;
    for (auto& c : shifted) c.delay += 1e-6;
    CHECK(rms_delay_spread(cir_of(shifted)) == doctest::Approx(base).epsilon(1e-9));

    auto scaled = mpcs;
    for (auto& c : scaled) c.delay *= 3.0;
    CHECK(rms_delay_spread(cir_of(scaled)) == doctest::Approx(3.0 * base).epsilon(1e-9));

    CHECK_THROWS_AS(rms_delay_spread(ChannelImpulseResponse{0.0, {}}), std::domain_error);
    CHECK_THROWS_AS(rms_delay_spread(cir_of({{0.0, 0.0, 1e-9}})), std::domain_error);
}

TEST_CASE("transfer function: unit paths and interference nulls") {
    auto flat = cir_of({{1.0, 0.0, 0.0}});
    auto h = transfer_function(flat, {0.0, 1e9, 60e9});
    for (const auto& v : h) {
        CHECK(v.real() == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(v.imag() == doctest::Approx(0.0).epsilon(1e-12));
    }

    auto single = cir_of({{0.8, 2.1, 35e-9}});
    for (const auto& v : transfer_function(single, {0.0, 0.5e9, 2.3e9}))
        CHECK(std::abs(v) == doctest::Approx(0.8).epsilon(1e-12));

    // two equal paths, delta-tau 10 ns: nulls at odd multiples of 50 MHz
    auto duo = cir_of({{1.0, 0.0, 0.0}, {1.0, 0.0, 10e-9}});
    auto nulls = transfer_function(duo, {50e6, 150e6, 250e6});
    for (const auto& v : nulls) CHECK(std::abs(v) == doctest::Approx(0.0).epsilon(1e-9));
    auto peaks = transfer_function(duo, {0.0, 100e6, 200e6});
    for (const auto& v : peaks) CHECK(std::abs(v) == doctest::Approx(2.0).epsilon(1e-9));

    // f=0 with zero phases equals the plain amplitude sum
    auto sum3 = cir_of({{0.5, 0.0, 1e-9}, {0.25, 0.0, 2e-9}, {0.125, 0.0, 3e-9}});
    auto h0 = transfer_function(sum3, {0.0});
    CHECK(h0[0].real() == doctest::Approx(0.875).epsilon(1e-12));
    CHECK(h0[0].imag() == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("fspl: frozen closed-form value, log identities, domain errors") {
    // 20*log10(4*pi*10*60e9 / 299792458) evaluated independently
    CHECK(fspl_db(10.0, 60e9) == doctest::Approx(88.01080822955625).epsilon(1e-12));

    CHECK(fspl_db(20.0, 60e9) - fspl_db(10.0, 60e9) ==
          doctest::Approx(6.020599913279624).epsilon(1e-9));
    CHECK(fspl_db(77.0, 28e9) - fspl_db(38.5, 28e9) ==
          doctest::Approx(6.020599913279624).epsilon(1e-9));

    double unity = kSpeedOfLight / (4.0 * std::numbers::pi * 60e9);
    CHECK(fspl_db(unity, 60e9) == doctest::Approx(0.0).epsilon(1e-12));

    CHECK_THROWS_AS(fspl_db(0.0, 60e9), std::domain_error);
    CHECK_THROWS_AS(fspl_db(10.0, -1.0), std::domain_error);
}

TEST_CASE("make_cir sorts by delay and normalizes phases") {
    auto cir = make_cir(1.5, {{1.0, -1.0, 5e-9}, {0.5, 7.0, 1e-9}, {0.25, 2.0, 3e-9}});
    REQUIRE(cir.components.size() == 3);
    CHECK(cir.timestamp == 1.5);
    CHECK(cir.components[0].delay == 1e-9);
    CHECK(cir.components[1].delay == 3e-9);
    CHECK(cir.components[2].delay == 5e-9);
    for (const auto& c : cir.components) {
        CHECK(c.phase >= 0.0);
        CHECK(c.phase < 2.0 * std::numbers::pi);
    }
    CHECK(cir.components[0].phase == doctest::Approx(7.0 - 2.0 * std::numbers::pi));
}
