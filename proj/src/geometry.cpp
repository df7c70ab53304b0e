#include "aerolink/geometry.hpp"

#include <cmath>
#include <stdexcept>

namespace aerolink {

double wrap_deg(double angle_deg) {
    double a = std::fmod(angle_deg + 180.0, 360.0);
    if (a < 0.0) a += 360.0;
    return a - 180.0;
}

double distance_m(const Position3& a, const Position3& b) {
    return (a - b).norm();
}

Position3 ground_image(const Position3& p) {
    return Position3(p.x(), p.y(), -p.z());
}

Bearing bearing(const Position3& from, const Position3& to) {
    if (from == to) {
        throw std::invalid_argument("degenerate bearing: coincident endpoints");
    }
    const double dx = to.x() - from.x();
    const double dy = to.y() - from.y();
    const double dz = to.z() - from.z();
    const double horiz = std::hypot(dx, dy);
    Bearing b;
    b.azimuth_deg = wrap_deg(rad2deg(std::atan2(dy, dx)));
    b.elevation_deg = rad2deg(std::atan2(dz, horiz));
    return b;
}

RayGeometry reflection_geometry(const Position3& tx, const Position3& rx) {
    if (tx.z() < 0.0 || rx.z() < 0.0) {
        throw std::invalid_argument("reflection geometry: endpoint below ground plane");
    }
    if (tx.z() == 0.0 && rx.z() == 0.0) {
        throw std::invalid_argument(
            "reflection geometry: both endpoints on the ground plane");
    }

    RayGeometry g;
    g.los_distance_m = distance_m(tx, rx);
    const Position3 rx_img = ground_image(rx);
    const Position3 tx_img = ground_image(tx);
    g.reflected_distance_m = distance_m(tx, rx_img);

    // Specular point: where the segment tx -> image(rx) crosses z = 0.
    const double t = tx.z() / (tx.z() + rx.z());
    g.reflection_point = Position3(tx.x() + t * (rx_img.x() - tx.x()),
                                   tx.y() + t * (rx_img.y() - tx.y()), 0.0);

    g.tx_los = bearing(tx, rx);
    g.rx_los = bearing(rx, tx);
    // Via the images rather than the specular point itself: same direction
    // when both endpoints are airborne, and still well defined when one of
    // them sits exactly on the ground.
    g.tx_reflected = bearing(tx, rx_img);
    g.rx_reflected = bearing(rx, tx_img);
    return g;
}

}  // namespace aerolink
