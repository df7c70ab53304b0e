#include "aerolink/antenna.hpp"

#include <algorithm>
#include <cmath>

namespace aerolink {

namespace {

double sinc_sq(double x) {
    if (x == 0.0) return 1.0;
    const double s = std::sin(kPi * x) / (kPi * x);
    return s * s;
}

}  // namespace

double pattern_gain(const AntennaPattern& pat, double offset_az_deg, double offset_el_deg) {
    double shape = sinc_sq(0.8858 * offset_az_deg / pat.hpbw_h_deg) *
                   sinc_sq(0.8858 * offset_el_deg / pat.hpbw_v_deg);
    const double floor_lin = std::pow(10.0, pat.floor_db / 10.0);
    shape = std::max(shape, floor_lin);
    return std::pow(10.0, pat.peak_gain_dbi / 10.0) * shape;
}

double pattern_gain_toward(const AntennaPattern& pat, const Pointing& point,
                           const Bearing& dir) {
    const double off_az = wrap_deg(dir.azimuth_deg - point.boresight.azimuth_deg);
    const double off_el = wrap_deg(dir.elevation_deg - point.boresight.elevation_deg);
    return pattern_gain(pat, off_az, off_el);
}

Pointing boresight_toward(const Position3& self, const Position3& target,
                          double error_az_deg, double error_el_deg) {
    const Bearing ideal = bearing(self, target);
    Pointing p;
    p.boresight.azimuth_deg = wrap_deg(ideal.azimuth_deg + error_az_deg);
    p.boresight.elevation_deg =
        std::clamp(ideal.elevation_deg + error_el_deg, -90.0, 90.0);
    return p;
}

std::pair<double, double> sample_misalignment(double sigma_deg, RngStream& rng) {
    const double az = sigma_deg * rng.gaussian();
    const double el = sigma_deg * rng.gaussian();
    return {az, el};
}

}  // namespace aerolink
