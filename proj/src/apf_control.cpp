#include "aerolink/apf_control.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace aerolink {

double attractive_potential(const Position3& q, const Position3& goal, double omega) {
    return omega * distance_m(q, goal);
}

double repulsive_interference_w(const Position3& q, const std::vector<Emitter>& emitters,
                                const AntennaPattern& uav_pattern,
                                const PropagationParams& prop) {
    const double peak = std::pow(10.0, uav_pattern.peak_gain_dbi / 10.0);
    const double k = prop.wavelength_m / (4.0 * kPi);
    const double r_mag = std::abs(prop.reflection_coefficient);
    double total_w = 0.0;
    for (const Emitter& e : emitters) {
        const double d_los = distance_m(q, e.position);
        if (d_los == 0.0) return std::numeric_limits<double>::infinity();
        const double d_ref = distance_m(ground_image(q), e.position);
        const double amp = 1.0 / d_los + r_mag / d_ref;
        total_w += dbm_to_w(e.tx_power_dbm) * peak * peak * (k * amp) * (k * amp);
    }
    return total_w;
}

double repulsion_score(double interference_w) {
    if (interference_w <= 0.0) return 0.0;
    return std::max(0.0, w_to_dbm(interference_w) + 130.0);
}

std::vector<UavMotion> candidate_states(const UavMotion& s, const MotionLimits& lim,
                                        int accel_levels) {
    if (accel_levels < 3 || accel_levels % 2 == 0) {
        throw std::invalid_argument("candidate states: accel_levels must be odd and >= 3");
    }
    const int L = accel_levels;
    std::vector<double> accel(L);
    for (int i = 0; i < L; ++i) {
        accel[i] = -lim.a_max_mps2 +
                   2.0 * lim.a_max_mps2 * static_cast<double>(i) /
                       static_cast<double>(L - 1);
    }

    std::vector<UavMotion> out;
    out.reserve(static_cast<std::size_t>(L) * L * L);
    for (int ix = 0; ix < L; ++ix) {
        for (int iy = 0; iy < L; ++iy) {
            for (int iz = 0; iz < L; ++iz) {
                UavMotion next;
                const Eigen::Vector3d a(accel[ix], accel[iy], accel[iz]);
                Eigen::Vector3d v = s.velocity + a * lim.dt_s;
                for (int c = 0; c < 3; ++c) {
                    v[c] = std::clamp(v[c], -lim.v_max_mps, lim.v_max_mps);
                }
                next.velocity = v;
                next.position = s.position + v * lim.dt_s;
                out.push_back(next);
            }
        }
    }
    return out;
}

UavMotion apf_step(const UavMotion& s, const Position3& goal,
                   const std::vector<Emitter>& emitters,
                   const AntennaPattern& uav_pattern, const PropagationParams& prop,
                   const MotionLimits& lim, const ApfParams& apf) {
    const std::vector<UavMotion> candidates = candidate_states(s, lim, apf.accel_levels);
    std::size_t best = 0;
    double best_total = std::numeric_limits<double>::infinity();
    double best_dist = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < candidates.size(); ++i) {
        const Position3& q = candidates[i].position;
        double total = attractive_potential(q, goal, apf.omega);
        if (apf.repulsive_scale != 0.0) {
            total += apf.repulsive_scale *
                     repulsion_score(repulsive_interference_w(q, emitters, uav_pattern, prop));
        }
        const double dist = distance_m(q, goal);
        if (total < best_total || (total == best_total && dist < best_dist)) {
            best = i;
            best_total = total;
            best_dist = dist;
        }
    }
    return candidates[best];
}

FlightResult simulate_flight(const FlightPlan& plan, const Position3& gs_pos,
                             const RadioConfig& cfg, std::uint64_t seed) {
    if (plan.max_steps < 1) {
        throw std::invalid_argument("flight: max_steps must be >= 1");
    }

    // The flyer receives downlink on the channel its hovering partner uses
    // for uplink.
    Uav victim{"flyer", plan.start, 1, 0};
    const Uav partner{"partner", plan.hover, 0, 1};
    const std::vector<Emitter> emitters{{plan.hover, cfg.uav_tx_power_dbm}};
    const PropagationParams prop = cfg.propagation();

    ApfParams apf = plan.apf;
    if (!plan.control) apf.repulsive_scale = 0.0;

    FlightResult result;
    UavMotion s{plan.start, Eigen::Vector3d::Zero()};
    for (int t = 0;; ++t) {
        RngStream rng(seed + static_cast<std::uint64_t>(t));
        victim.position = s.position;
        const LinkResult link = downlink_link_result(gs_pos, victim, partner, cfg, rng);
        result.steps.push_back({static_cast<double>(t) * plan.limits.dt_s, s.position,
                                link.interference_w, link.capacity_bps});

        if (distance_m(s.position, plan.goal) <= plan.apf.goal_radius_m) {
            result.converged = true;
            break;
        }
        if (t == plan.max_steps) break;
        s = apf_step(s, plan.goal, emitters, cfg.uav_antenna, prop, plan.limits, apf);
    }
    return result;
}

}  // namespace aerolink
