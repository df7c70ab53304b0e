#pragma once

#include <Eigen/Core>

namespace aerolink {

using Position3 = Eigen::Vector3d;

constexpr double kPi = 3.14159265358979323846;

inline double deg2rad(double deg) { return deg * kPi / 180.0; }
inline double rad2deg(double rad) { return rad * 180.0 / kPi; }

// Wrap an angle to [-180, 180).
double wrap_deg(double angle_deg);

double distance_m(const Position3& a, const Position3& b);

// Mirror image of a point across the ground plane z = 0.
Position3 ground_image(const Position3& p);

// Direction from one point to another. Azimuth is measured in the xy-plane
// from +x toward +y, in [-180, 180); elevation is the angle above the
// horizontal, in [-90, 90]. A purely vertical ray has azimuth 0.
struct Bearing {
    double azimuth_deg = 0.0;
    double elevation_deg = 0.0;
};

// Throws std::invalid_argument for coincident endpoints.
Bearing bearing(const Position3& from, const Position3& to);

// Direct and ground-reflected ray geometry between two endpoints above the
// ground plane. Reflected-ray bearings are taken via the image points, which
// coincide with the direction through the specular reflection point.
struct RayGeometry {
    double los_distance_m = 0.0;
    double reflected_distance_m = 0.0;
    Position3 reflection_point{0.0, 0.0, 0.0};  // on z = 0 exactly
    Bearing tx_los, rx_los;
    Bearing tx_reflected, rx_reflected;
};

// Throws std::invalid_argument if both endpoints lie on the ground (the
// reflected ray degenerates) or either endpoint is below it.
RayGeometry reflection_geometry(const Position3& tx, const Position3& rx);

}  // namespace aerolink
