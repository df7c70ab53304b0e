#pragma once

#include "aerolink/radio_system.hpp"

#include <vector>

namespace aerolink {

// Sentinel returned where a power in dBm has no finite value (zero rate
// demands zero power).
constexpr double kPowerFloorSentinel_dbm = -999.0;

struct ChannelEfficiency {
    int channel = 0;
    double uplink_bps_hz = 0.0;
    double downlink_bps_hz = 0.0;
};

struct EfficiencyResult {
    double eta_bps_hz = 0.0;
    std::vector<ChannelEfficiency> per_channel;
};

// Spectral efficiency of the channel-paired full-duplex scheme: the mean over
// the K channels of log2(1 + uplink SINR) + log2(1 + downlink SINR) on each
// channel, one misalignment snapshot per call. Per channel the uplink is
// evaluated first, then the downlink (whose interferer is that same uplink
// transmitter). Throws for an empty roster.
EfficiencyResult proposed_efficiency(const Position3& gs_pos,
                                     const std::vector<Uav>& uavs,
                                     const ChannelPlan& plan, const RadioConfig& cfg,
                                     RngStream& rng);

// Baseline scheme: a single omnidirectional node (0 dBi both ends) sharing
// one channel by time division, with a guard overhead that carries no data.
struct TddFdmParams {
    double guard_fraction = 0.2;
    double node_tx_power_dbm = 20.0;
};

// eta = f_up * log2(1 + SNR_up) + f_down * log2(1 + SNR_down), link SNRs from
// the isotropic two-ray gain at the baseline transmit power in both
// directions. Throws if a fraction is negative or f_up + f_down exceeds
// 1 - guard_fraction.
double tdd_fdm_efficiency(const Position3& gs_pos, const Position3& uav_pos,
                          double uplink_fraction, double downlink_fraction,
                          const RadioConfig& cfg, const TddFdmParams& tdd);

struct TddSplit {
    double uplink_fraction = 0.0;
    double downlink_fraction = 0.0;
    bool saturated = false;  // demand exceeded the usable frame
};

// Smallest downlink share meeting a required downlink rate, the rest of the
// usable frame going to uplink: f_down = min(1 - guard, required/achievable).
// A demand beyond the frame saturates (flag set) rather than failing.
TddSplit tdd_split_for_demand(double required_downlink_bps, const Position3& gs_pos,
                              const Position3& uav_pos, const RadioConfig& cfg,
                              const TddFdmParams& tdd);

enum class AntennaMode { Directional, Omni };

// Transmit power (dBm) a UAV needs for a target uplink rate. Both modes use
// the isotropic two-ray path factor; Directional adds the two pattern peak
// gains on top, so the mode delta is exactly the summed peak gains in dB.
// Zero rate returns kPowerFloorSentinel_dbm. Throws std::runtime_error when
// the target needs more than +60 dBm.
double required_uplink_power_dbm(double target_rate_bps, const Position3& gs_pos,
                                 const Position3& uav_pos, AntennaMode mode,
                                 const RadioConfig& cfg);

}  // namespace aerolink
