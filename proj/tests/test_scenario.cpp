#include <doctest.h>

#include "aerolink/scenario.hpp"

#include <cmath>
#include <string>

using namespace aerolink;

namespace {

std::string load_error(const std::string& text) {
    try {
        (void)load_scenario_text(text);
    } catch (const ScenarioError& e) {
        return e.what();
    }
    return "";
}

bool mentions(const std::string& message, const std::string& needle) {
    return message.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("default scenario values") {
    const Scenario s = default_scenario();
    CHECK(s.radio.frequency_hz == 5.7e9);
    CHECK(s.radio.bandwidth_hz == 10e6);
    CHECK(s.radio.gs_tx_power_dbm == 11.0);
    CHECK(s.radio.uav_tx_power_dbm == 0.0);
    CHECK(s.radio.gs_antenna.peak_gain_dbi == 22.0);
    CHECK(s.radio.gs_antenna.hpbw_h_deg == 58.0);
    CHECK(s.radio.gs_antenna.hpbw_v_deg == 4.0);
    CHECK(s.radio.uav_antenna.peak_gain_dbi == 15.0);
    CHECK(s.radio.uav_antenna.hpbw_h_deg == 36.0);
    CHECK(s.radio.uav_antenna.hpbw_v_deg == 36.0);
    CHECK(s.radio.gs_antenna.floor_db == -50.0);
    CHECK(s.radio.uav_antenna.floor_db == -50.0);
    CHECK(s.radio.noise.density_dbm_hz == -174.0);
    CHECK(s.radio.noise.figure_db == 5.0);
    CHECK(s.radio.reflection_coefficient == -1.0);
    CHECK(s.radio.misalignment_sigma_deg == 3.0);
    CHECK(s.radio.propagation().wavelength_m ==
          doctest::Approx(kSpeedOfLight_mps / 5.7e9).epsilon(1e-12));
    CHECK(s.gs_position == Position3(0, 0, 10));
    CHECK(s.deployment.type == DeploymentSpec::Type::Linear);
    CHECK(s.deployment.range_m == 5000.0);
    CHECK(s.deployment.height_m == 100.0);
    CHECK(s.deployment.separation_m == 50.0);
    REQUIRE(s.flight.has_value());
    CHECK(s.flight->start == Position3(4000, 0, 50));
    CHECK(s.flight->goal == Position3(5000, 0, 50));
    CHECK(s.flight->hover == Position3(4500, 0, 45));
    CHECK(s.flight->control);
    CHECK(s.flight->limits.v_max_mps == 10.0);
    CHECK(s.flight->limits.a_max_mps2 == 5.0);
    CHECK(s.flight->limits.dt_s == 1.0);
    CHECK(s.flight->apf.omega == 0.02);
    CHECK(s.flight->apf.accel_levels == 5);
    CHECK(s.flight->apf.goal_radius_m == 5.0);
    CHECK(s.flight->max_steps == 500);
    CHECK(s.monte_carlo.snapshots == 1000);
    CHECK(s.monte_carlo.seed == 1);
}

TEST_CASE("an empty document loads as the defaults") {
    const Scenario loaded = load_scenario_text("{}");
    CHECK(serialize_scenario(loaded) == serialize_scenario(default_scenario()));
}

TEST_CASE("serialize then load is the identity") {
    const std::string text = serialize_scenario(default_scenario());
    const Scenario again = load_scenario_text(text);
    CHECK(serialize_scenario(again) == text);
}

TEST_CASE("partial overrides keep unrelated defaults") {
    const Scenario s = load_scenario_text(R"({
        "radio": {"bandwidth_hz": 20e6, "pattern_floor_db": -40},
        "flight": {"control": false}
    })");
    CHECK(s.radio.bandwidth_hz == 20e6);
    CHECK(s.radio.frequency_hz == 5.7e9);
    CHECK(s.radio.gs_antenna.floor_db == -40.0);
    CHECK(s.radio.uav_antenna.floor_db == -40.0);
    REQUIRE(s.flight.has_value());
    CHECK_FALSE(s.flight->control);
    CHECK(s.flight->max_steps == 500);
    CHECK(s.monte_carlo.snapshots == 1000);
}

TEST_CASE("circular and explicit deployments round-trip") {
    const std::string circ_text = R"({
        "deployment": {"type": "circular", "radius_m": 3000, "height_m": 80,
                       "separation_m": 120}
    })";
    const Scenario circ = load_scenario_text(circ_text);
    CHECK(circ.deployment.type == DeploymentSpec::Type::Circular);
    CHECK(circ.deployment.radius_m == 3000.0);
    CHECK(circ.deployment.height_m == 80.0);
    CHECK(circ.deployment.separation_m == 120.0);
    const std::string circ_full = serialize_scenario(circ);
    CHECK(serialize_scenario(load_scenario_text(circ_full)) == circ_full);

    const std::string expl_text = R"({
        "deployment": {"type": "explicit", "uavs": [
            {"id": "a", "position": [1000, 0, 90]},
            {"id": "b", "position": [900, 50, 95]}
        ]}
    })";
    const Scenario expl = load_scenario_text(expl_text);
    CHECK(expl.deployment.type == DeploymentSpec::Type::Explicit);
    REQUIRE(expl.deployment.uavs.size() == 2);
    CHECK(expl.deployment.uavs[0].id == "a");
    CHECK(expl.deployment.uavs[1].position == Position3(900, 50, 95));
    const std::string expl_full = serialize_scenario(expl);
    CHECK(serialize_scenario(load_scenario_text(expl_full)) == expl_full);
}

TEST_CASE("rejects malformed input with the offending field path") {
    CHECK(mentions(load_error("not json at all"), "invalid JSON"));
    CHECK(mentions(load_error(R"({"extra": {}})"), "extra"));
    CHECK(mentions(load_error(R"({"radio": {"bogus": 1}})"), "radio.bogus"));
    CHECK(mentions(load_error(R"({"radio": {"bandwidth_hz": -1}})"),
                   "radio.bandwidth_hz"));
    CHECK(mentions(load_error(R"({"radio": {"gs_antenna": {"gain": 5}}})"),
                   "radio.gs_antenna.gain"));
    CHECK(mentions(load_error(R"({"gs_position": "here"})"), "gs_position"));
    CHECK(mentions(load_error(R"({"deployment": {"type": "weird"}})"),
                   "deployment.type"));
    CHECK(mentions(load_error(R"({"deployment": {"type": "linear",
                                                 "separation_m": 6000}})"),
                   "deployment.separation_m"));
    CHECK(mentions(load_error(R"({"deployment": {"type": "circular",
                                                 "radius_m": 100,
                                                 "separation_m": 300}})"),
                   "deployment.separation_m"));
    CHECK(mentions(load_error(R"({"deployment": {"type": "explicit", "uavs": [
                                   {"id": "solo", "position": [1, 2, 3]}]}})"),
                   "deployment.uavs"));
    CHECK(mentions(load_error(R"({"deployment": {"type": "explicit", "uavs": [
                                   {"id": "x", "position": [1, 2, 3]},
                                   {"id": "x", "position": [4, 5, 6]}]}})"),
                   ".id"));
    CHECK(mentions(load_error(R"({"flight": {"accel_levels": 4}})"),
                   "flight.accel_levels"));
    CHECK(mentions(load_error(R"({"flight": {"dt_s": 0}})"), "flight.dt_s"));
    CHECK(mentions(load_error(R"({"monte_carlo": {"snapshots": 0}})"),
                   "monte_carlo.snapshots"));
    CHECK(mentions(load_error(R"({"monte_carlo": {"seed": -5}})"), "monte_carlo.seed"));
    CHECK(mentions(load_error(R"({"monte_carlo": {"snapshots": 2.5}})"),
                   "monte_carlo.snapshots"));
    CHECK_THROWS_AS((void)load_scenario_text(R"({"radio": 3})"), ScenarioError);
    CHECK_THROWS_AS((void)load_scenario_file("/nonexistent/path.json"), ScenarioError);
}

TEST_CASE("linear pair geometry and channels") {
    const auto [victim, interferer] = linear_pair(5000, 100, 50);
    CHECK(victim.id == "uav-0");
    CHECK(victim.position == Position3(5000, 0, 100));
    CHECK(victim.downlink_channel == 0);
    CHECK(victim.uplink_channel == 1);
    CHECK(interferer.id == "uav-1");
    CHECK(interferer.position == Position3(4950, 0, 100));
    CHECK(interferer.uplink_channel == 0);  // shares the victim's downlink channel
    CHECK(interferer.downlink_channel == 1);

    CHECK_THROWS_AS((void)linear_pair(5000, 100, 0), ScenarioError);
    CHECK_THROWS_AS((void)linear_pair(5000, 100, 5000), ScenarioError);
    CHECK_THROWS_AS((void)linear_pair(-1, 100, 50), ScenarioError);
}

TEST_CASE("circular pair geometry") {
    // The separation is a chord of the circle.
    {
        const auto [victim, interferer] = circular_pair(5000, 100, 50);
        CHECK(victim.position == Position3(5000, 0, 100));
        const double chord = (victim.position.head<2>() -
                              interferer.position.head<2>()).norm();
        CHECK(chord == doctest::Approx(50.0).epsilon(1e-9));
        CHECK(interferer.position.y() > 0.0);
        CHECK(interferer.position.z() == 100.0);
    }
    // Diametrically opposite at the maximum separation.
    {
        const auto [victim, interferer] = circular_pair(5000, 100, 10000);
        CHECK(interferer.position.x() == doctest::Approx(-5000.0).epsilon(1e-9));
        CHECK(std::abs(interferer.position.y()) < 1e-6);
    }
    // Chord length holds across random radii and separations.
    {
        for (int i = 1; i <= 30; ++i) {
            const double radius = 100.0 * i;
            const double sep = 2.0 * radius * (static_cast<double>(i) / 31.0);
            const auto [victim, interferer] = circular_pair(radius, 100, sep);
            const double chord = (victim.position.head<2>() -
                                  interferer.position.head<2>()).norm();
            CHECK(chord == doctest::Approx(sep).epsilon(1e-9));
            CHECK(interferer.position.z() == victim.position.z());
        }
    }
    CHECK_THROWS_AS((void)circular_pair(100, 100, 300), ScenarioError);
    CHECK_THROWS_AS((void)circular_pair(100, 100, 0), ScenarioError);
}

TEST_CASE("deployment pair dispatch") {
    DeploymentSpec linear;  // defaults are the linear layout
    const auto [lv, li] = deployment_pair(linear);
    CHECK(lv.position == Position3(5000, 0, 100));
    CHECK(li.position == Position3(4950, 0, 100));

    DeploymentSpec circular;
    circular.type = DeploymentSpec::Type::Circular;
    circular.radius_m = 2000;
    circular.separation_m = 100;
    const auto [cv, ci] = deployment_pair(circular);
    CHECK(cv.position == Position3(2000, 0, 100));
    CHECK(ci.position.y() > 0.0);

    DeploymentSpec expl;
    expl.type = DeploymentSpec::Type::Explicit;
    expl.uavs = {{"a", Position3(1000, 0, 90), -1, -1},
                 {"b", Position3(900, 50, 95), -1, -1},
                 {"c", Position3(800, 0, 90), -1, -1},
                 {"d", Position3(700, 50, 95), -1, -1}};
    const auto [ev, ei] = deployment_pair(expl);
    CHECK(ev.id == "a");
    CHECK(ev.downlink_channel == 0);
    CHECK(ev.uplink_channel == 1);
    CHECK(ei.id == "b");
    CHECK(ei.uplink_channel == 0);
    CHECK(ei.downlink_channel == 1);

    DeploymentSpec bad;
    bad.type = DeploymentSpec::Type::Explicit;
    bad.uavs = {{"solo", Position3(1, 2, 3), -1, -1}};
    CHECK_THROWS_AS((void)deployment_pair(bad), ScenarioError);
}
