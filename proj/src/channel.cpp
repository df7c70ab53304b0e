#include "aerolink/channel.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>

namespace aerolink {

namespace {

// Shared ray sum. Written so that reflection_coefficient = 0 collapses to the
// free-space expression bit for bit: the reflected term then contributes an
// exact zero to both components.
double ray_sum_gain(double g_los, double g_ref, double d_los, double d_ref,
                    const PropagationParams& prop) {
    const double k = prop.wavelength_m / (4.0 * kPi);
    const double a_los = std::sqrt(g_los) / d_los;
    const double dphi = 2.0 * kPi * (d_ref - d_los) / prop.wavelength_m;
    const std::complex<double> reflected =
        prop.reflection_coefficient * std::sqrt(g_ref) / d_ref *
        std::exp(std::complex<double>(0.0, -dphi));
    const std::complex<double> total = a_los + reflected;
    return k * k * std::norm(total);
}

}  // namespace

PropagationParams propagation_for(double frequency_hz, double reflection_coefficient) {
    if (frequency_hz <= 0.0) {
        throw std::invalid_argument("propagation: frequency must be > 0");
    }
    PropagationParams p;
    p.wavelength_m = kSpeedOfLight_mps / frequency_hz;
    p.reflection_coefficient = reflection_coefficient;
    return p;
}

double dbm_to_w(double dbm) { return std::pow(10.0, (dbm - 30.0) / 10.0); }

double w_to_dbm(double watts) { return 10.0 * std::log10(watts) + 30.0; }

double noise_power_w(double bandwidth_hz, double noise_density_dbm_hz,
                     double noise_figure_db) {
    if (bandwidth_hz <= 0.0) {
        throw std::invalid_argument("noise power: bandwidth must be > 0");
    }
    const double dbm =
        noise_density_dbm_hz + 10.0 * std::log10(bandwidth_hz) + noise_figure_db;
    return dbm_to_w(dbm);
}

double two_ray_gain(const Position3& tx_pos, const Position3& rx_pos,
                    const Pointing& tx_point, const Pointing& rx_point,
                    const AntennaPattern& tx_pat, const AntennaPattern& rx_pat,
                    const PropagationParams& prop) {
    const RayGeometry geo = reflection_geometry(tx_pos, rx_pos);
    const double g_los = pattern_gain_toward(tx_pat, tx_point, geo.tx_los) *
                         pattern_gain_toward(rx_pat, rx_point, geo.rx_los);
    const double g_ref = pattern_gain_toward(tx_pat, tx_point, geo.tx_reflected) *
                         pattern_gain_toward(rx_pat, rx_point, geo.rx_reflected);
    return ray_sum_gain(g_los, g_ref, geo.los_distance_m, geo.reflected_distance_m, prop);
}

double two_ray_gain_isotropic(const Position3& tx_pos, const Position3& rx_pos,
                              const PropagationParams& prop) {
    const RayGeometry geo = reflection_geometry(tx_pos, rx_pos);
    return ray_sum_gain(1.0, 1.0, geo.los_distance_m, geo.reflected_distance_m, prop);
}

double free_space_gain(const Position3& tx_pos, const Position3& rx_pos,
                       const Pointing& tx_point, const Pointing& rx_point,
                       const AntennaPattern& tx_pat, const AntennaPattern& rx_pat,
                       const PropagationParams& prop) {
    const RayGeometry geo = reflection_geometry(tx_pos, rx_pos);
    const double g_los = pattern_gain_toward(tx_pat, tx_point, geo.tx_los) *
                         pattern_gain_toward(rx_pat, rx_point, geo.rx_los);
    const double k = prop.wavelength_m / (4.0 * kPi);
    const double a_los = std::sqrt(g_los) / geo.los_distance_m;
    return k * k * (a_los * a_los);
}

}  // namespace aerolink
