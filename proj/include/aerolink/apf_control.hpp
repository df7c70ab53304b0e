#pragma once

#include "aerolink/radio_system.hpp"

#include <cstdint>
#include <vector>

namespace aerolink {

struct UavMotion {
    Position3 position{0.0, 0.0, 0.0};
    Eigen::Vector3d velocity{0.0, 0.0, 0.0};
};

struct MotionLimits {
    double v_max_mps = 10.0;   // per velocity component
    double a_max_mps2 = 5.0;   // per acceleration component
    double dt_s = 1.0;
};

struct ApfParams {
    double omega = 0.02;          // attractive weight per metre to goal
    int accel_levels = 5;         // per-axis acceleration grid (odd keeps coasting)
    double goal_radius_m = 5.0;
    double repulsive_scale = 1.0;  // multiplies the repulsion score
};

// A co-channel transmitter as seen by the planner.
struct Emitter {
    Position3 position{0.0, 0.0, 0.0};
    double tx_power_dbm = 0.0;
};

// Attractive potential: omega times the straight-line distance to the goal.
double attractive_potential(const Position3& q, const Position3& goal, double omega);

// Worst-case received co-channel power used for planning: peak antenna gains
// at both ends and the direct and ground-reflected amplitudes added without
// their relative phase. An upper envelope of anything the measured channel
// can produce, and monotone in distance from each emitter, so the planning
// field has no spurious pockets from pattern nulls or multipath fringes.
double repulsive_interference_w(const Position3& q, const std::vector<Emitter>& emitters,
                                const AntennaPattern& uav_pattern,
                                const PropagationParams& prop);

// Maps interference power onto the attractive potential's scale:
// max(0, dBm + 130), i.e. zero below -130 dBm and 1 per dB above it.
double repulsion_score(double interference_w);

// All accel_levels^3 successor states: per-axis accelerations evenly spaced
// over [-a_max, a_max] (x outermost, z innermost), velocity clamped per
// component to [-v_max, v_max], then position advanced one step.
std::vector<UavMotion> candidate_states(const UavMotion& s, const MotionLimits& lim,
                                        int accel_levels);

// Greedy descent step: the candidate minimizing
//   attractive + repulsive_scale * repulsion_score(planning interference),
// ties broken by distance to goal, then candidate order.
UavMotion apf_step(const UavMotion& s, const Position3& goal,
                   const std::vector<Emitter>& emitters,
                   const AntennaPattern& uav_pattern, const PropagationParams& prop,
                   const MotionLimits& lim, const ApfParams& apf);

struct FlightPlan {
    Position3 start{4000.0, 0.0, 50.0};
    Position3 goal{5000.0, 0.0, 50.0};
    Position3 hover{4500.0, 0.0, 45.0};  // the pair partner's fixed position
    bool control = true;
    MotionLimits limits{};
    ApfParams apf{};
    int max_steps = 500;
};

struct FlightStep {
    double t_s = 0.0;
    Position3 position{0.0, 0.0, 0.0};
    double interference_w = 0.0;  // measured, not the planning envelope
    double capacity_bps = 0.0;
};

struct FlightResult {
    std::vector<FlightStep> steps;
    bool converged = false;
};

// Fly from start toward goal past the hovering pair partner, measuring the
// downlink each step with the full directional channel and fresh misalignment
// (step t uses stream seed + t, so runs with control on and off share draws).
// With control off the repulsive term is zeroed and the same greedy step
// becomes straight max-speed flight. Convergence: within goal_radius_m of the
// goal within max_steps steps.
FlightResult simulate_flight(const FlightPlan& plan, const Position3& gs_pos,
                             const RadioConfig& cfg, std::uint64_t seed);

}  // namespace aerolink
