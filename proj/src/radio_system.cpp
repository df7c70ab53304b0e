#include "aerolink/radio_system.hpp"

#include <cmath>
#include <set>
#include <stdexcept>

namespace aerolink {

ChannelPlan pair_channels(const std::vector<std::string>& uav_ids, int num_channels) {
    const int n = static_cast<int>(uav_ids.size());
    if (n == 0) {
        throw std::invalid_argument("channel plan: empty roster");
    }
    if (n % 2 != 0) {
        throw std::invalid_argument("channel plan: odd roster, one UAV unpaired");
    }
    if (num_channels < n) {
        throw std::invalid_argument("channel plan: fewer channels than UAVs");
    }
    std::set<std::string> unique(uav_ids.begin(), uav_ids.end());
    if (static_cast<int>(unique.size()) != n) {
        throw std::invalid_argument("channel plan: duplicate UAV id");
    }

    ChannelPlan plan;
    plan.num_channels = num_channels;
    plan.uplink_user.assign(num_channels, "");
    plan.downlink_user.assign(num_channels, "");
    for (int m = 0; m < n / 2; ++m) {
        const std::string& first = uav_ids[2 * m];
        const std::string& second = uav_ids[2 * m + 1];
        // Pair m: first downlinks on 2m and uplinks on 2m+1, second reversed.
        plan.downlink_user[2 * m] = first;
        plan.uplink_user[2 * m] = second;
        plan.downlink_user[2 * m + 1] = second;
        plan.uplink_user[2 * m + 1] = first;
    }
    return plan;
}

int uplink_channel_of(const ChannelPlan& plan, const std::string& uav_id) {
    for (int c = 0; c < plan.num_channels; ++c) {
        if (plan.uplink_user[c] == uav_id) return c;
    }
    throw std::invalid_argument("channel plan: unknown UAV id '" + uav_id + "'");
}

int downlink_channel_of(const ChannelPlan& plan, const std::string& uav_id) {
    for (int c = 0; c < plan.num_channels; ++c) {
        if (plan.downlink_user[c] == uav_id) return c;
    }
    throw std::invalid_argument("channel plan: unknown UAV id '" + uav_id + "'");
}

std::string co_channel_interferer(const ChannelPlan& plan, const std::string& uav_id,
                                  LinkDir dir) {
    if (dir == LinkDir::Downlink) {
        // Victim receives downlink; the co-channel transmitter is whoever
        // uplinks on that channel.
        return plan.uplink_user[downlink_channel_of(plan, uav_id)];
    }
    return plan.downlink_user[uplink_channel_of(plan, uav_id)];
}

double capacity_bps(double bandwidth_hz, double sinr) {
    if (sinr < 0.0) {
        throw std::invalid_argument("capacity: negative sinr");
    }
    return bandwidth_hz * std::log2(1.0 + sinr);
}

LinkResult downlink_link_result(const Position3& gs_pos, const Uav& victim,
                                const Uav& interferer, const RadioConfig& cfg,
                                RngStream& rng) {
    const double sigma = cfg.misalignment_sigma_deg;
    const auto [gs_az, gs_el] = sample_misalignment(sigma, rng);
    const auto [v_az, v_el] = sample_misalignment(sigma, rng);
    const auto [i_az, i_el] = sample_misalignment(sigma, rng);

    const Pointing gs_point = boresight_toward(gs_pos, victim.position, gs_az, gs_el);
    const Pointing v_point = boresight_toward(victim.position, gs_pos, v_az, v_el);
    const Pointing i_point =
        boresight_toward(interferer.position, gs_pos, i_az, i_el);

    const PropagationParams prop = cfg.propagation();
    LinkResult r;
    r.signal_w = dbm_to_w(cfg.gs_tx_power_dbm) *
                 two_ray_gain(gs_pos, victim.position, gs_point, v_point,
                              cfg.gs_antenna, cfg.uav_antenna, prop);
    // The victim keeps the same (mis)pointing for the interference path.
    r.interference_w = dbm_to_w(cfg.uav_tx_power_dbm) *
                       two_ray_gain(interferer.position, victim.position, i_point,
                                    v_point, cfg.uav_antenna, cfg.uav_antenna, prop);
    r.noise_w = cfg.noise_w();
    r.sinr = r.signal_w / (r.noise_w + r.interference_w);
    r.capacity_bps = capacity_bps(cfg.bandwidth_hz, r.sinr);
    return r;
}

LinkResult uplink_link_result(const Position3& gs_pos, const Uav& uav,
                              const RadioConfig& cfg, RngStream& rng) {
    const double sigma = cfg.misalignment_sigma_deg;
    const auto [gs_az, gs_el] = sample_misalignment(sigma, rng);
    const auto [u_az, u_el] = sample_misalignment(sigma, rng);

    const Pointing gs_point = boresight_toward(gs_pos, uav.position, gs_az, gs_el);
    const Pointing u_point = boresight_toward(uav.position, gs_pos, u_az, u_el);

    const PropagationParams prop = cfg.propagation();
    LinkResult r;
    r.signal_w = dbm_to_w(cfg.uav_tx_power_dbm) *
                 two_ray_gain(uav.position, gs_pos, u_point, gs_point,
                              cfg.uav_antenna, cfg.gs_antenna, prop);
    r.interference_w = 0.0;  // GS self-interference cancellation is ideal
    r.noise_w = cfg.noise_w();
    r.sinr = r.signal_w / r.noise_w;
    r.capacity_bps = capacity_bps(cfg.bandwidth_hz, r.sinr);
    return r;
}

SnapshotStats downlink_monte_carlo(const Position3& gs_pos, const Uav& victim,
                                   const Uav& interferer, const RadioConfig& cfg,
                                   int snapshots, std::uint64_t seed) {
    if (snapshots < 1) {
        throw std::invalid_argument("monte carlo: snapshots must be >= 1");
    }
    double cap_sum = 0.0, cap_sq_sum = 0.0, int_sum = 0.0;
    for (int i = 0; i < snapshots; ++i) {
        RngStream rng(seed + static_cast<std::uint64_t>(i));
        const LinkResult r = downlink_link_result(gs_pos, victim, interferer, cfg, rng);
        cap_sum += r.capacity_bps;
        cap_sq_sum += r.capacity_bps * r.capacity_bps;
        int_sum += r.interference_w;
    }
    SnapshotStats s;
    const double n = static_cast<double>(snapshots);
    s.capacity_mean_bps = cap_sum / n;
    if (snapshots > 1) {
        const double var =
            (cap_sq_sum - cap_sum * cap_sum / n) / (n - 1.0);
        s.capacity_std_bps = std::sqrt(std::max(0.0, var));
    }
    s.interference_mean_w = int_sum / n;
    return s;
}

}  // namespace aerolink
