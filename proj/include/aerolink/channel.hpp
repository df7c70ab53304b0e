#pragma once

#include "aerolink/antenna.hpp"
#include "aerolink/geometry.hpp"

namespace aerolink {

constexpr double kSpeedOfLight_mps = 299792458.0;

struct PropagationParams {
    double wavelength_m = kSpeedOfLight_mps / 5.7e9;
    double reflection_coefficient = -1.0;  // ground reflection, in [-1, 1]
};

PropagationParams propagation_for(double frequency_hz, double reflection_coefficient);

double dbm_to_w(double dbm);
double w_to_dbm(double watts);  // requires watts > 0

// Thermal noise power over a bandwidth, from a spectral density in dBm/Hz
// plus a receiver noise figure. Throws std::invalid_argument for a
// non-positive bandwidth.
double noise_power_w(double bandwidth_hz, double noise_density_dbm_hz,
                     double noise_figure_db);

// Total two-ray power gain between directional, pointed antennas: direct plus
// ground-reflected ray summed as complex amplitudes, each weighted by the
// endpoint pattern gains along its own departure/arrival direction.
double two_ray_gain(const Position3& tx_pos, const Position3& rx_pos,
                    const Pointing& tx_point, const Pointing& rx_point,
                    const AntennaPattern& tx_pat, const AntennaPattern& rx_pat,
                    const PropagationParams& prop);

// Same ray sum with unit (0 dBi) gain in every direction at both ends.
double two_ray_gain_isotropic(const Position3& tx_pos, const Position3& rx_pos,
                              const PropagationParams& prop);

// Direct ray only. With reflection_coefficient = 0, two_ray_gain reduces to
// this exactly.
double free_space_gain(const Position3& tx_pos, const Position3& rx_pos,
                       const Pointing& tx_point, const Pointing& rx_point,
                       const AntennaPattern& tx_pat, const AntennaPattern& rx_pat,
                       const PropagationParams& prop);

}  // namespace aerolink
