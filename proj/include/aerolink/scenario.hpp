#pragma once

#include "aerolink/apf_control.hpp"
#include "aerolink/radio_system.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace aerolink {

// Raised for malformed or invalid scenario input; the message names the
// offending field path (e.g. "radio.bandwidth_hz: must be > 0").
class ScenarioError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

struct DeploymentSpec {
    enum class Type { Linear, Circular, Explicit };
    Type type = Type::Linear;
    double range_m = 5000.0;   // linear: victim's distance from the GS along +x
    double radius_m = 5000.0;  // circular: GS-centered circle
    double height_m = 100.0;
    double separation_m = 50.0;
    std::vector<Uav> uavs;     // explicit roster (channels assigned on load)
};

struct MonteCarloSpec {
    int snapshots = 1000;
    std::uint64_t seed = 1;
};

struct Scenario {
    RadioConfig radio{};
    Position3 gs_position{0.0, 0.0, 10.0};
    DeploymentSpec deployment{};
    std::optional<FlightPlan> flight;
    MonteCarloSpec monte_carlo{};
};

// Built-in defaults: the directional full-duplex radio, a linear deployment
// at 5 km range / 100 m height / 50 m separation, and the flyby flight plan.
Scenario default_scenario();

// Parse + validate. Unknown keys anywhere are rejected; missing sections and
// fields fall back to the defaults above.
Scenario load_scenario_text(const std::string& json_text);
Scenario load_scenario_file(const std::string& path);

// Full JSON with every field materialized; load(serialize(s)) == s.
std::string serialize_scenario(const Scenario& s);

// Victim + interferer for the two generated layouts. The victim sits on the
// +x axis; the linear interferer is separation_m nearer the GS on that axis,
// the circular interferer at the same chord separation around the circle
// (positive-y side).
std::pair<Uav, Uav> linear_pair(double range_m, double height_m, double separation_m);
std::pair<Uav, Uav> circular_pair(double radius_m, double height_m, double separation_m);

// The (victim, interferer) pair a deployment defines; for explicit rosters,
// the first pair in the roster order.
std::pair<Uav, Uav> deployment_pair(const DeploymentSpec& d);

}  // namespace aerolink
