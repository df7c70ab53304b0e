#pragma once

#include "aerolink/antenna.hpp"
#include "aerolink/channel.hpp"
#include "aerolink/rng.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace aerolink {

struct NoiseSpec {
    double density_dbm_hz = -174.0;
    double figure_db = 5.0;
};

struct RadioConfig {
    double frequency_hz = 5.7e9;
    double bandwidth_hz = 10.0e6;
    double gs_tx_power_dbm = 11.0;
    double uav_tx_power_dbm = 0.0;
    AntennaPattern gs_antenna{22.0, 58.0, 4.0, -50.0};   // 58 deg azimuth, 4 deg elevation
    AntennaPattern uav_antenna{15.0, 36.0, 36.0, -50.0};
    NoiseSpec noise{};
    double reflection_coefficient = -1.0;
    double misalignment_sigma_deg = 3.0;

    PropagationParams propagation() const {
        return propagation_for(frequency_hz, reflection_coefficient);
    }
    double noise_w() const {
        return noise_power_w(bandwidth_hz, noise.density_dbm_hz, noise.figure_db);
    }
};

struct Uav {
    std::string id;
    Position3 position{0.0, 0.0, 0.0};
    int uplink_channel = -1;
    int downlink_channel = -1;
};

// Full-duplex channel plan: consecutive UAVs form pairs, pair m occupies
// channels (2m, 2m + 1) with opposite uplink/downlink roles, so each
// channel carries exactly one uplink and one downlink from the same pair.
struct ChannelPlan {
    int num_channels = 0;
    std::vector<std::string> uplink_user;    // indexed by channel; "" if unused
    std::vector<std::string> downlink_user;  // indexed by channel; "" if unused
};

// Throws std::invalid_argument for an odd roster, duplicate ids, or
// num_channels < roster size.
ChannelPlan pair_channels(const std::vector<std::string>& uav_ids, int num_channels);

int uplink_channel_of(const ChannelPlan& plan, const std::string& uav_id);
int downlink_channel_of(const ChannelPlan& plan, const std::string& uav_id);

enum class LinkDir { Uplink, Downlink };

// The UAV sharing the victim's channel in the given direction — its pair
// partner under this plan. Throws if the id is not in the plan.
std::string co_channel_interferer(const ChannelPlan& plan, const std::string& uav_id,
                                  LinkDir dir);

struct LinkResult {
    double signal_w = 0.0;
    double interference_w = 0.0;
    double noise_w = 0.0;
    double sinr = 0.0;
    double capacity_bps = 0.0;
};

// Shannon capacity. Throws std::invalid_argument for sinr < 0.
double capacity_bps(double bandwidth_hz, double sinr);

// One downlink snapshot: GS transmits to the victim while the victim's pair
// partner transmits uplink on the same channel. All three antennas point at
// their peers with fresh Gaussian misalignment; the victim's draw is shared
// between the signal and interference paths. Draw order: GS (az, el),
// victim (az, el), interferer (az, el).
LinkResult downlink_link_result(const Position3& gs_pos, const Uav& victim,
                                const Uav& interferer, const RadioConfig& cfg,
                                RngStream& rng);

// One uplink snapshot: UAV transmits to the GS. The GS cancels its own
// downlink leakage, so interference is exactly zero. Draw order: GS (az, el),
// UAV (az, el).
LinkResult uplink_link_result(const Position3& gs_pos, const Uav& uav,
                              const RadioConfig& cfg, RngStream& rng);

// Monte Carlo summary over independent misalignment snapshots; snapshot i
// uses stream seed + i, accumulated in index order.
struct SnapshotStats {
    double capacity_mean_bps = 0.0;
    double capacity_std_bps = 0.0;  // sample standard deviation (N - 1)
    double interference_mean_w = 0.0;
};

SnapshotStats downlink_monte_carlo(const Position3& gs_pos, const Uav& victim,
                                   const Uav& interferer, const RadioConfig& cfg,
                                   int snapshots, std::uint64_t seed);

}  // namespace aerolink
