#include <doctest.h>

#include "aerolink/efficiency.hpp"
#include "aerolink/rng.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

using namespace aerolink;

namespace {

const Position3 kGs(0, 0, 10);

std::vector<Uav> linear_pair_at(double range_m, double sep_m, double height_m) {
    std::vector<Uav> uavs(2);
    uavs[0] = {"uav-0", Position3(range_m, 0, height_m), 1, 0};
    uavs[1] = {"uav-1", Position3(range_m - sep_m, 0, height_m), 0, 1};
    return uavs;
}

// Straight-line isotropic two-ray gain, written out with complex arithmetic so
// the production path has an independent cross-check.
double iso_two_ray_ref(const Position3& a, const Position3& b,
                       const PropagationParams& prop) {
    const double d_los = (a - b).norm();
    const Position3 image(b.x(), b.y(), -b.z());
    const double d_ref = (a - image).norm();
    const double dphi = 2.0 * kPi * (d_ref - d_los) / prop.wavelength_m;
    const std::complex<double> sum =
        1.0 / d_los + prop.reflection_coefficient *
                          std::exp(std::complex<double>(0.0, -dphi)) / d_ref;
    const double k = prop.wavelength_m / (4.0 * kPi);
    return k * k * std::norm(sum);
}

}  // namespace

TEST_CASE("paired full duplex: symmetric quiet deployment") {
    // Two UAVs at right angles, equal ranges, equal powers at both ends, no
    // misalignment: interference is buried in the pattern floor, so eta is
    // just four equal link terms over two channels.
    RadioConfig cfg;
    cfg.misalignment_sigma_deg = 0.0;
    cfg.gs_tx_power_dbm = 10.0;
    cfg.uav_tx_power_dbm = 10.0;
    std::vector<Uav> uavs(2);
    uavs[0] = {"a", Position3(5000, 0, 100), -1, -1};
    uavs[1] = {"b", Position3(0, -5000, 100), -1, -1};
    const ChannelPlan plan = pair_channels({"a", "b"}, 2);
    uavs[0].downlink_channel = downlink_channel_of(plan, "a");
    uavs[0].uplink_channel = uplink_channel_of(plan, "a");
    uavs[1].downlink_channel = downlink_channel_of(plan, "b");
    uavs[1].uplink_channel = uplink_channel_of(plan, "b");

    RngStream rng(1);
    const EfficiencyResult res = proposed_efficiency(kGs, uavs, plan, cfg, rng);

    RngStream rng2(1);
    const LinkResult up = uplink_link_result(kGs, uavs[0], cfg, rng2);
    const double expected = 2.0 * std::log2(1.0 + up.sinr);
    CHECK(res.eta_bps_hz == doctest::Approx(expected).epsilon(0.005));

    // The mean normalizes by the channel count, exactly.
    double sum = 0.0;
    for (const ChannelEfficiency& ce : res.per_channel) {
        sum += ce.uplink_bps_hz + ce.downlink_bps_hz;
    }
    CHECK(res.eta_bps_hz == sum / plan.num_channels);
    CHECK(res.per_channel.size() == 2);
}

TEST_CASE("paired full duplex: interference crushes the downlink at close spacing") {
    RadioConfig cfg;  // default 3 degree misalignment
    const auto close_pair = linear_pair_at(5000, 1, 100);
    const auto far_pair = linear_pair_at(5000, 500, 100);
    const ChannelPlan plan = pair_channels({"uav-0", "uav-1"}, 2);

    RngStream r_close(1), r_far(1);
    const EfficiencyResult close_res =
        proposed_efficiency(kGs, close_pair, plan, cfg, r_close);
    const EfficiencyResult far_res = proposed_efficiency(kGs, far_pair, plan, cfg, r_far);

    auto down_sum = [](const EfficiencyResult& r) {
        double s = 0;
        for (const auto& ce : r.per_channel) s += ce.downlink_bps_hz;
        return s;
    };
    auto up_sum = [](const EfficiencyResult& r) {
        double s = 0;
        for (const auto& ce : r.per_channel) s += ce.uplink_bps_hz;
        return s;
    };
    // Same seed means the same misalignment draws; only the interferer
    // geometry changes, so the collapse is attributable to interference.
    CHECK(down_sum(close_res) < 0.3 * down_sum(far_res));
    CHECK(down_sum(close_res) < 0.5 * up_sum(close_res));
    CHECK(up_sum(close_res) == doctest::Approx(up_sum(far_res)).epsilon(0.2));
}

TEST_CASE("paired full duplex: eta grows with separation under common random numbers") {
    RadioConfig cfg;
    const int snapshots = 200;
    const ChannelPlan pair_plan = pair_channels({"uav-0", "uav-1"}, 2);
    auto mean_eta = [&](double sep) {
        const auto uavs = linear_pair_at(5000, sep, 100);
        const ChannelPlan& plan = pair_plan;
        double sum = 0.0;
        for (int k = 0; k < snapshots; ++k) {
            RngStream rng(100 + static_cast<uint64_t>(k));
            sum += proposed_efficiency(kGs, uavs, plan, cfg, rng).eta_bps_hz;
        }
        return sum / snapshots;
    };
    const double e50 = mean_eta(50), e200 = mean_eta(200), e400 = mean_eta(400);
    CHECK(e50 <= e200 + 1e-9);
    CHECK(e200 <= e400 + 1e-9);
}

TEST_CASE("paired full duplex rejects an empty roster") {
    RadioConfig cfg;
    ChannelPlan plan;
    RngStream rng(1);
    CHECK_THROWS_AS((void)proposed_efficiency(kGs, {}, plan, cfg, rng),
                    std::invalid_argument);
}

TEST_CASE("tdd baseline efficiency") {
    RadioConfig cfg;
    TddFdmParams tdd;
    const Position3 uav(5000, 0, 100);

    // Against an in-test recompute of the same formula.
    const double snr = dbm_to_w(tdd.node_tx_power_dbm) *
                       iso_two_ray_ref(kGs, uav, cfg.propagation()) / cfg.noise_w();
    const double expected = 0.8 * std::log2(1.0 + snr);
    CHECK(tdd_fdm_efficiency(kGs, uav, 0.4, 0.4, cfg, tdd) ==
          doctest::Approx(expected).epsilon(1e-12));

    // Linear in the fractions.
    const double full = tdd_fdm_efficiency(kGs, uav, 0.4, 0.4, cfg, tdd);
    const double half = tdd_fdm_efficiency(kGs, uav, 0.2, 0.2, cfg, tdd);
    CHECK(half == doctest::Approx(full / 2.0).epsilon(1e-12));
    const double up_only = tdd_fdm_efficiency(kGs, uav, 0.4, 0.0, cfg, tdd);
    const double down_only = tdd_fdm_efficiency(kGs, uav, 0.0, 0.4, cfg, tdd);
    CHECK(up_only + down_only == doctest::Approx(full).epsilon(1e-12));

    // All guard: nothing usable.
    TddFdmParams all_guard;
    all_guard.guard_fraction = 1.0;
    CHECK(tdd_fdm_efficiency(kGs, uav, 0.0, 0.0, cfg, all_guard) == 0.0);

    CHECK_THROWS_AS((void)tdd_fdm_efficiency(kGs, uav, 0.5, 0.4, cfg, tdd),
                    std::invalid_argument);
    CHECK_THROWS_AS((void)tdd_fdm_efficiency(kGs, uav, -0.1, 0.4, cfg, tdd),
                    std::invalid_argument);
}

TEST_CASE("tdd split for a downlink demand") {
    RadioConfig cfg;
    TddFdmParams tdd;
    const Position3 uav(5000, 0, 100);
    const double snr = dbm_to_w(tdd.node_tx_power_dbm) *
                       two_ray_gain_isotropic(kGs, uav, cfg.propagation()) /
                       cfg.noise_w();
    const double achievable = capacity_bps(cfg.bandwidth_hz, snr);

    const TddSplit none = tdd_split_for_demand(0.0, kGs, uav, cfg, tdd);
    CHECK(none.downlink_fraction == 0.0);
    CHECK(none.uplink_fraction == doctest::Approx(0.8).epsilon(1e-12));
    CHECK_FALSE(none.saturated);

    const TddSplit mid = tdd_split_for_demand(0.4 * achievable, kGs, uav, cfg, tdd);
    CHECK(mid.downlink_fraction == doctest::Approx(0.4).epsilon(1e-12));
    CHECK(mid.uplink_fraction == doctest::Approx(0.4).epsilon(1e-12));
    CHECK_FALSE(mid.saturated);
    // Roundtrip: the granted share carries exactly the demanded rate.
    CHECK(mid.downlink_fraction * achievable ==
          doctest::Approx(0.4 * achievable).epsilon(1e-3));

    const TddSplit over = tdd_split_for_demand(1.6 * achievable, kGs, uav, cfg, tdd);
    CHECK(over.downlink_fraction == doctest::Approx(0.8).epsilon(1e-12));
    CHECK(over.uplink_fraction == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(over.saturated);

    CHECK_THROWS_AS((void)tdd_split_for_demand(-1.0, kGs, uav, cfg, tdd),
                    std::invalid_argument);
}

TEST_CASE("required uplink power") {
    RadioConfig cfg;
    const Position3 uav(5000, 0, 100);
    const double rate = 20e6;

    const double dir = required_uplink_power_dbm(rate, kGs, uav,
                                                 AntennaMode::Directional, cfg);
    const double omni = required_uplink_power_dbm(rate, kGs, uav, AntennaMode::Omni, cfg);
    // The mode difference is exactly the two peak gains: 22 + 15 dB.
    CHECK(omni - dir == doctest::Approx(37.0).epsilon(1e-9));

    // Zero demand needs no power at all.
    CHECK(required_uplink_power_dbm(0.0, kGs, uav, AntennaMode::Directional, cfg) ==
          kPowerFloorSentinel_dbm);
    CHECK(required_uplink_power_dbm(0.0, kGs, uav, AntennaMode::Omni, cfg) ==
          kPowerFloorSentinel_dbm);

    // Roundtrip: feeding the returned power back through the same link budget
    // reproduces the target rate.
    for (AntennaMode mode : {AntennaMode::Directional, AntennaMode::Omni}) {
        const double p = required_uplink_power_dbm(rate, kGs, uav, mode, cfg);
        double gain = two_ray_gain_isotropic(uav, kGs, cfg.propagation());
        if (mode == AntennaMode::Directional) {
            gain *= std::pow(10.0, (cfg.gs_antenna.peak_gain_dbi +
                                    cfg.uav_antenna.peak_gain_dbi) / 10.0);
        }
        const double achieved =
            capacity_bps(cfg.bandwidth_hz, dbm_to_w(p) * gain / cfg.noise_w());
        CHECK(achieved == doctest::Approx(rate).epsilon(1e-3));
    }

    // More bandwidth relaxes the SINR requirement faster than it adds noise.
    RadioConfig wide = cfg;
    wide.bandwidth_hz = 20e6;
    const double dir_wide =
        required_uplink_power_dbm(rate, kGs, uav, AntennaMode::Directional, wide);
    CHECK(dir_wide < dir);

    CHECK_THROWS_AS((void)required_uplink_power_dbm(1000e6, kGs, uav,
                                                    AntennaMode::Omni, cfg),
                    std::runtime_error);
    CHECK_THROWS_AS((void)required_uplink_power_dbm(-1.0, kGs, uav,
                                                    AntennaMode::Omni, cfg),
                    std::invalid_argument);
}
