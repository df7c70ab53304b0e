#pragma once

#include "aerolink/geometry.hpp"
#include "aerolink/rng.hpp"

#include <utility>

namespace aerolink {

// Separable sinc^2 power pattern with a sidelobe floor relative to peak.
// The half-power beamwidths are given per plane: hpbw_h in azimuth,
// hpbw_v in elevation.
struct AntennaPattern {
    double peak_gain_dbi = 0.0;
    double hpbw_h_deg = 360.0;
    double hpbw_v_deg = 360.0;
    double floor_db = -50.0;
};

// Boresight direction of a steered antenna.
struct Pointing {
    Bearing boresight;
};

// Linear power gain at the given angular offsets from boresight.
// g(th) = sinc^2(0.8858 * th / hpbw) per plane, floored at floor_db below
// peak, scaled by the peak gain. 0.8858 puts the half-power point at
// exactly hpbw/2.
double pattern_gain(const AntennaPattern& pat, double offset_az_deg, double offset_el_deg);

// Gain of a pointed antenna evaluated toward an arbitrary direction.
double pattern_gain_toward(const AntennaPattern& pat, const Pointing& point,
                           const Bearing& dir);

// Point an antenna at a target, then apply pointing errors. Azimuth re-wraps
// to [-180, 180); elevation clamps to [-90, 90].
Pointing boresight_toward(const Position3& self, const Position3& target,
                          double error_az_deg = 0.0, double error_el_deg = 0.0);

// Zero-mean Gaussian pointing error, one independent draw per axis.
// Always consumes the same number of stream draws regardless of sigma,
// so different sigma settings stay draw-aligned; sigma = 0 yields (0, 0).
std::pair<double, double> sample_misalignment(double sigma_deg, RngStream& rng);

}  // namespace aerolink
