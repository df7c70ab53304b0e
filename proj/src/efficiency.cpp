#include "aerolink/efficiency.hpp"

#include <cmath>
#include <stdexcept>

namespace aerolink {

namespace {

const Uav& uav_by_id(const std::vector<Uav>& uavs, const std::string& id) {
    for (const Uav& u : uavs) {
        if (u.id == id) return u;
    }
    throw std::invalid_argument("efficiency: plan references unknown UAV '" + id + "'");
}

// Baseline link SNR: omnidirectional ends, two-ray path, common tx power.
double tdd_link_snr(const Position3& a, const Position3& b, const RadioConfig& cfg,
                    const TddFdmParams& tdd) {
    const double gain = two_ray_gain_isotropic(a, b, cfg.propagation());
    return dbm_to_w(tdd.node_tx_power_dbm) * gain / cfg.noise_w();
}

}  // namespace

EfficiencyResult proposed_efficiency(const Position3& gs_pos,
                                     const std::vector<Uav>& uavs,
                                     const ChannelPlan& plan, const RadioConfig& cfg,
                                     RngStream& rng) {
    if (uavs.empty()) {
        throw std::invalid_argument("efficiency: empty deployment");
    }
    EfficiencyResult result;
    double sum_bps_hz = 0.0;
    for (int c = 0; c < plan.num_channels; ++c) {
        const std::string& up_id = plan.uplink_user[c];
        const std::string& down_id = plan.downlink_user[c];
        if (up_id.empty() && down_id.empty()) continue;

        ChannelEfficiency ce;
        ce.channel = c;
        if (!up_id.empty()) {
            const LinkResult up = uplink_link_result(gs_pos, uav_by_id(uavs, up_id), cfg, rng);
            ce.uplink_bps_hz = std::log2(1.0 + up.sinr);
        }
        if (!down_id.empty()) {
            const LinkResult down =
                downlink_link_result(gs_pos, uav_by_id(uavs, down_id),
                                     uav_by_id(uavs, up_id), cfg, rng);
            ce.downlink_bps_hz = std::log2(1.0 + down.sinr);
        }
        sum_bps_hz += ce.uplink_bps_hz + ce.downlink_bps_hz;
        result.per_channel.push_back(ce);
    }
    result.eta_bps_hz = sum_bps_hz / static_cast<double>(plan.num_channels);
    return result;
}

double tdd_fdm_efficiency(const Position3& gs_pos, const Position3& uav_pos,
                          double uplink_fraction, double downlink_fraction,
                          const RadioConfig& cfg, const TddFdmParams& tdd) {
    if (uplink_fraction < 0.0 || downlink_fraction < 0.0) {
        throw std::invalid_argument("tdd efficiency: negative time fraction");
    }
    if (uplink_fraction + downlink_fraction > 1.0 - tdd.guard_fraction + 1e-12) {
        throw std::invalid_argument(
            "tdd efficiency: fractions exceed the usable frame");
    }
    const double snr_up = tdd_link_snr(uav_pos, gs_pos, cfg, tdd);
    const double snr_down = tdd_link_snr(gs_pos, uav_pos, cfg, tdd);
    return uplink_fraction * std::log2(1.0 + snr_up) +
           downlink_fraction * std::log2(1.0 + snr_down);
}

TddSplit tdd_split_for_demand(double required_downlink_bps, const Position3& gs_pos,
                              const Position3& uav_pos, const RadioConfig& cfg,
                              const TddFdmParams& tdd) {
    if (required_downlink_bps < 0.0) {
        throw std::invalid_argument("tdd split: negative rate demand");
    }
    const double snr_down = tdd_link_snr(gs_pos, uav_pos, cfg, tdd);
    const double achievable_bps = capacity_bps(cfg.bandwidth_hz, snr_down);
    const double usable = 1.0 - tdd.guard_fraction;

    TddSplit split;
    const double want = required_downlink_bps / achievable_bps;
    split.downlink_fraction = std::min(usable, want);
    split.uplink_fraction = usable - split.downlink_fraction;
    split.saturated = want > usable;
    return split;
}

double required_uplink_power_dbm(double target_rate_bps, const Position3& gs_pos,
                                 const Position3& uav_pos, AntennaMode mode,
                                 const RadioConfig& cfg) {
    if (target_rate_bps < 0.0) {
        throw std::invalid_argument("required power: negative target rate");
    }
    if (target_rate_bps == 0.0) return kPowerFloorSentinel_dbm;

    const double sinr_req =
        std::exp2(target_rate_bps / cfg.bandwidth_hz) - 1.0;
    double gain = two_ray_gain_isotropic(uav_pos, gs_pos, cfg.propagation());
    if (mode == AntennaMode::Directional) {
        gain *= std::pow(10.0, (cfg.gs_antenna.peak_gain_dbi +
                                cfg.uav_antenna.peak_gain_dbi) / 10.0);
    }
    const double power_w = sinr_req * cfg.noise_w() / gain;
    const double power_dbm = w_to_dbm(power_w);
    if (power_dbm > 60.0) {
        throw std::runtime_error(
            "required power: target rate needs " + std::to_string(power_dbm) +
            " dBm, beyond the 60 dBm limit");
    }
    return power_dbm;
}

}  // namespace aerolink
