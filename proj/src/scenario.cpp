#include "aerolink/scenario.hpp"

#include <json.hpp>

#include <cmath>
#include <fstream>
#include <initializer_list>
#include <set>
#include <sstream>

namespace aerolink {

namespace {

using json = nlohmann::ordered_json;

[[noreturn]] void fail(const std::string& path, const std::string& what) {
    throw ScenarioError(path + ": " + what);
}

void expect_object(const json& j, const std::string& path) {
    if (!j.is_object()) fail(path, "expected an object");
}

void check_keys(const json& j, const std::string& path,
                std::initializer_list<const char*> allowed) {
    for (const auto& item : j.items()) {
        bool known = false;
        for (const char* k : allowed) {
            if (item.key() == k) {
                known = true;
                break;
            }
        }
        if (!known) fail(path.empty() ? item.key() : path + "." + item.key(),
                         "unknown key");
    }
}

double read_number(const json& j, const std::string& path, const char* key,
                   double fallback) {
    if (!j.contains(key)) return fallback;
    const json& v = j.at(key);
    if (!v.is_number()) fail(path + "." + key, "expected a number");
    return v.get<double>();
}

int read_int(const json& j, const std::string& path, const char* key, int fallback) {
    if (!j.contains(key)) return fallback;
    const json& v = j.at(key);
    if (!v.is_number_integer()) fail(path + "." + key, "expected an integer");
    return v.get<int>();
}

bool read_bool(const json& j, const std::string& path, const char* key, bool fallback) {
    if (!j.contains(key)) return fallback;
    const json& v = j.at(key);
    if (!v.is_boolean()) fail(path + "." + key, "expected a boolean");
    return v.get<bool>();
}

Position3 read_vec3(const json& j, const std::string& path, const char* key,
                    const Position3& fallback) {
    if (!j.contains(key)) return fallback;
    const json& v = j.at(key);
    if (!v.is_array() || v.size() != 3 || !v[0].is_number() || !v[1].is_number() ||
        !v[2].is_number()) {
        fail(path.empty() ? key : path + "." + key, "expected [x, y, z] numbers");
    }
    return Position3(v[0].get<double>(), v[1].get<double>(), v[2].get<double>());
}

AntennaPattern read_antenna(const json& radio, const std::string& radio_path,
                            const char* key, AntennaPattern fallback) {
    if (!radio.contains(key)) return fallback;
    const std::string path = radio_path + "." + key;
    const json& a = radio.at(key);
    expect_object(a, path);
    check_keys(a, path, {"gain_dbi", "hpbw_v_deg", "hpbw_h_deg"});
    fallback.peak_gain_dbi = read_number(a, path, "gain_dbi", fallback.peak_gain_dbi);
    fallback.hpbw_v_deg = read_number(a, path, "hpbw_v_deg", fallback.hpbw_v_deg);
    fallback.hpbw_h_deg = read_number(a, path, "hpbw_h_deg", fallback.hpbw_h_deg);
    return fallback;
}

void parse_radio(const json& j, Scenario& s) {
    if (!j.contains("radio")) return;
    const json& r = j.at("radio");
    expect_object(r, "radio");
    check_keys(r, "radio",
               {"frequency_hz", "bandwidth_hz", "gs_tx_power_dbm", "uav_tx_power_dbm",
                "gs_antenna", "uav_antenna", "noise", "reflection_coefficient",
                "misalignment_sigma_deg", "pattern_floor_db"});
    RadioConfig& c = s.radio;
    c.frequency_hz = read_number(r, "radio", "frequency_hz", c.frequency_hz);
    c.bandwidth_hz = read_number(r, "radio", "bandwidth_hz", c.bandwidth_hz);
    c.gs_tx_power_dbm = read_number(r, "radio", "gs_tx_power_dbm", c.gs_tx_power_dbm);
    c.uav_tx_power_dbm = read_number(r, "radio", "uav_tx_power_dbm", c.uav_tx_power_dbm);
    c.gs_antenna = read_antenna(r, "radio", "gs_antenna", c.gs_antenna);
    c.uav_antenna = read_antenna(r, "radio", "uav_antenna", c.uav_antenna);
    if (r.contains("noise")) {
        const json& n = r.at("noise");
        expect_object(n, "radio.noise");
        check_keys(n, "radio.noise", {"density_dbm_hz", "figure_db"});
        c.noise.density_dbm_hz =
            read_number(n, "radio.noise", "density_dbm_hz", c.noise.density_dbm_hz);
        c.noise.figure_db = read_number(n, "radio.noise", "figure_db", c.noise.figure_db);
    }
    c.reflection_coefficient =
        read_number(r, "radio", "reflection_coefficient", c.reflection_coefficient);
    c.misalignment_sigma_deg =
        read_number(r, "radio", "misalignment_sigma_deg", c.misalignment_sigma_deg);
    const double floor_db = read_number(r, "radio", "pattern_floor_db",
                                        c.gs_antenna.floor_db);
    c.gs_antenna.floor_db = floor_db;
    c.uav_antenna.floor_db = floor_db;
}

void parse_deployment(const json& j, Scenario& s) {
    if (!j.contains("deployment")) return;
    const json& d = j.at("deployment");
    expect_object(d, "deployment");
    if (!d.contains("type")) fail("deployment.type", "missing");
    if (!d.at("type").is_string()) fail("deployment.type", "expected a string");
    const std::string type = d.at("type").get<std::string>();

    DeploymentSpec& spec = s.deployment;
    if (type == "linear") {
        spec.type = DeploymentSpec::Type::Linear;
        check_keys(d, "deployment", {"type", "range_m", "height_m", "separation_m"});
        spec.range_m = read_number(d, "deployment", "range_m", spec.range_m);
        spec.height_m = read_number(d, "deployment", "height_m", spec.height_m);
        spec.separation_m = read_number(d, "deployment", "separation_m", spec.separation_m);
    } else if (type == "circular") {
        spec.type = DeploymentSpec::Type::Circular;
        check_keys(d, "deployment", {"type", "radius_m", "height_m", "separation_m"});
        spec.radius_m = read_number(d, "deployment", "radius_m", spec.radius_m);
        spec.height_m = read_number(d, "deployment", "height_m", spec.height_m);
        spec.separation_m = read_number(d, "deployment", "separation_m", spec.separation_m);
    } else if (type == "explicit") {
        spec.type = DeploymentSpec::Type::Explicit;
        check_keys(d, "deployment", {"type", "uavs"});
        if (!d.contains("uavs") || !d.at("uavs").is_array()) {
            fail("deployment.uavs", "expected an array of UAVs");
        }
        spec.uavs.clear();
        int idx = 0;
        for (const json& u : d.at("uavs")) {
            const std::string path = "deployment.uavs[" + std::to_string(idx) + "]";
            expect_object(u, path);
            check_keys(u, path, {"id", "position"});
            if (!u.contains("id") || !u.at("id").is_string()) {
                fail(path + ".id", "expected a string");
            }
            Uav uav;
            uav.id = u.at("id").get<std::string>();
            uav.position = read_vec3(u, path, "position", Position3(0, 0, 0));
            if (!u.contains("position")) fail(path + ".position", "missing");
            spec.uavs.push_back(uav);
            ++idx;
        }
    } else {
        fail("deployment.type", "expected \"linear\", \"circular\" or \"explicit\"");
    }
}

void parse_flight(const json& j, Scenario& s) {
    if (!j.contains("flight")) return;
    const json& f = j.at("flight");
    expect_object(f, "flight");
    check_keys(f, "flight",
               {"start", "goal", "hover", "control", "v_max_mps", "a_max_mps2", "dt_s",
                "omega", "accel_levels", "goal_radius_m", "max_steps"});
    FlightPlan plan = s.flight.value_or(FlightPlan{});
    plan.start = read_vec3(f, "flight", "start", plan.start);
    plan.goal = read_vec3(f, "flight", "goal", plan.goal);
    plan.hover = read_vec3(f, "flight", "hover", plan.hover);
    plan.control = read_bool(f, "flight", "control", plan.control);
    plan.limits.v_max_mps = read_number(f, "flight", "v_max_mps", plan.limits.v_max_mps);
    plan.limits.a_max_mps2 = read_number(f, "flight", "a_max_mps2", plan.limits.a_max_mps2);
    plan.limits.dt_s = read_number(f, "flight", "dt_s", plan.limits.dt_s);
    plan.apf.omega = read_number(f, "flight", "omega", plan.apf.omega);
    plan.apf.accel_levels = read_int(f, "flight", "accel_levels", plan.apf.accel_levels);
    plan.apf.goal_radius_m =
        read_number(f, "flight", "goal_radius_m", plan.apf.goal_radius_m);
    plan.max_steps = read_int(f, "flight", "max_steps", plan.max_steps);
    s.flight = plan;
}

void parse_monte_carlo(const json& j, Scenario& s) {
    if (!j.contains("monte_carlo")) return;
    const json& m = j.at("monte_carlo");
    expect_object(m, "monte_carlo");
    check_keys(m, "monte_carlo", {"snapshots", "seed"});
    s.monte_carlo.snapshots = read_int(m, "monte_carlo", "snapshots",
                                       s.monte_carlo.snapshots);
    if (m.contains("seed")) {
        const json& v = m.at("seed");
        if (!v.is_number_integer() || (v.is_number_integer() && !v.is_number_unsigned() &&
                                       v.get<std::int64_t>() < 0)) {
            fail("monte_carlo.seed", "expected a non-negative integer");
        }
        s.monte_carlo.seed = v.get<std::uint64_t>();
    }
}

void validate(const Scenario& s) {
    const RadioConfig& r = s.radio;
    if (r.frequency_hz <= 0.0) fail("radio.frequency_hz", "must be > 0");
    if (r.bandwidth_hz <= 0.0) fail("radio.bandwidth_hz", "must be > 0");
    auto check_pattern = [](const AntennaPattern& p, const std::string& path) {
        if (p.hpbw_h_deg <= 0.0 || p.hpbw_h_deg > 360.0) {
            fail(path + ".hpbw_h_deg", "must be in (0, 360]");
        }
        if (p.hpbw_v_deg <= 0.0 || p.hpbw_v_deg > 360.0) {
            fail(path + ".hpbw_v_deg", "must be in (0, 360]");
        }
    };
    check_pattern(r.gs_antenna, "radio.gs_antenna");
    check_pattern(r.uav_antenna, "radio.uav_antenna");
    if (r.gs_antenna.floor_db >= 0.0) fail("radio.pattern_floor_db", "must be < 0");
    if (r.reflection_coefficient < -1.0 || r.reflection_coefficient > 1.0) {
        fail("radio.reflection_coefficient", "must be in [-1, 1]");
    }
    if (r.misalignment_sigma_deg < 0.0) {
        fail("radio.misalignment_sigma_deg", "must be >= 0");
    }
    if (s.gs_position.z() <= 0.0) fail("gs_position", "height must be > 0");

    const DeploymentSpec& d = s.deployment;
    switch (d.type) {
        case DeploymentSpec::Type::Linear:
            if (d.range_m <= 0.0) fail("deployment.range_m", "must be > 0");
            if (d.height_m <= 0.0) fail("deployment.height_m", "must be > 0");
            if (d.separation_m <= 0.0) fail("deployment.separation_m", "must be > 0");
            if (d.separation_m >= d.range_m) {
                fail("deployment.separation_m", "must be < range_m");
            }
            break;
        case DeploymentSpec::Type::Circular:
            if (d.radius_m <= 0.0) fail("deployment.radius_m", "must be > 0");
            if (d.height_m <= 0.0) fail("deployment.height_m", "must be > 0");
            if (d.separation_m <= 0.0) fail("deployment.separation_m", "must be > 0");
            if (d.separation_m > 2.0 * d.radius_m) {
                fail("deployment.separation_m", "must be <= the circle diameter");
            }
            break;
        case DeploymentSpec::Type::Explicit: {
            if (d.uavs.size() < 2) fail("deployment.uavs", "need at least two UAVs");
            if (d.uavs.size() % 2 != 0) fail("deployment.uavs", "roster must pair up evenly");
            std::set<std::string> ids;
            for (std::size_t i = 0; i < d.uavs.size(); ++i) {
                const std::string path = "deployment.uavs[" + std::to_string(i) + "]";
                if (d.uavs[i].id.empty()) fail(path + ".id", "must be non-empty");
                if (!ids.insert(d.uavs[i].id).second) fail(path + ".id", "duplicate id");
                if (d.uavs[i].position.z() <= 0.0) {
                    fail(path + ".position", "height must be > 0");
                }
            }
            break;
        }
    }

    if (s.flight) {
        const FlightPlan& f = *s.flight;
        if (f.start.z() <= 0.0) fail("flight.start", "height must be > 0");
        if (f.goal.z() <= 0.0) fail("flight.goal", "height must be > 0");
        if (f.hover.z() <= 0.0) fail("flight.hover", "height must be > 0");
        if (f.limits.v_max_mps <= 0.0) fail("flight.v_max_mps", "must be > 0");
        if (f.limits.a_max_mps2 <= 0.0) fail("flight.a_max_mps2", "must be > 0");
        if (f.limits.dt_s <= 0.0) fail("flight.dt_s", "must be > 0");
        if (f.apf.omega < 0.0) fail("flight.omega", "must be >= 0");
        if (f.apf.accel_levels < 3 || f.apf.accel_levels % 2 == 0) {
            fail("flight.accel_levels", "must be odd and >= 3");
        }
        if (f.apf.goal_radius_m <= 0.0) fail("flight.goal_radius_m", "must be > 0");
        if (f.max_steps < 1) fail("flight.max_steps", "must be >= 1");
    }

    if (s.monte_carlo.snapshots < 1) fail("monte_carlo.snapshots", "must be >= 1");
}

}  // namespace

Scenario default_scenario() {
    Scenario s;  // aggregate defaults carry the radio and deployment
    s.flight = FlightPlan{};
    return s;
}

Scenario load_scenario_text(const std::string& json_text) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw ScenarioError(std::string("invalid JSON: ") + e.what());
    }
    expect_object(j, "scenario");
    check_keys(j, "", {"radio", "gs_position", "deployment", "flight", "monte_carlo"});

    Scenario s = default_scenario();
    parse_radio(j, s);
    s.gs_position = read_vec3(j, "", "gs_position", s.gs_position);
    parse_deployment(j, s);
    parse_flight(j, s);
    parse_monte_carlo(j, s);
    validate(s);
    return s;
}

Scenario load_scenario_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ScenarioError("cannot open scenario file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return load_scenario_text(buf.str());
}

std::string serialize_scenario(const Scenario& s) {
    json j;
    const RadioConfig& r = s.radio;
    j["radio"] = {
        {"frequency_hz", r.frequency_hz},
        {"bandwidth_hz", r.bandwidth_hz},
        {"gs_tx_power_dbm", r.gs_tx_power_dbm},
        {"uav_tx_power_dbm", r.uav_tx_power_dbm},
        {"gs_antenna",
         {{"gain_dbi", r.gs_antenna.peak_gain_dbi},
          {"hpbw_v_deg", r.gs_antenna.hpbw_v_deg},
          {"hpbw_h_deg", r.gs_antenna.hpbw_h_deg}}},
        {"uav_antenna",
         {{"gain_dbi", r.uav_antenna.peak_gain_dbi},
          {"hpbw_v_deg", r.uav_antenna.hpbw_v_deg},
          {"hpbw_h_deg", r.uav_antenna.hpbw_h_deg}}},
        {"noise",
         {{"density_dbm_hz", r.noise.density_dbm_hz}, {"figure_db", r.noise.figure_db}}},
        {"reflection_coefficient", r.reflection_coefficient},
        {"misalignment_sigma_deg", r.misalignment_sigma_deg},
        {"pattern_floor_db", r.gs_antenna.floor_db},
    };
    j["gs_position"] = {s.gs_position.x(), s.gs_position.y(), s.gs_position.z()};

    json d;
    switch (s.deployment.type) {
        case DeploymentSpec::Type::Linear:
            d = {{"type", "linear"},
                 {"range_m", s.deployment.range_m},
                 {"height_m", s.deployment.height_m},
                 {"separation_m", s.deployment.separation_m}};
            break;
        case DeploymentSpec::Type::Circular:
            d = {{"type", "circular"},
                 {"radius_m", s.deployment.radius_m},
                 {"height_m", s.deployment.height_m},
                 {"separation_m", s.deployment.separation_m}};
            break;
        case DeploymentSpec::Type::Explicit: {
            d["type"] = "explicit";
            d["uavs"] = json::array();
            for (const Uav& u : s.deployment.uavs) {
                d["uavs"].push_back(
                    {{"id", u.id},
                     {"position", {u.position.x(), u.position.y(), u.position.z()}}});
            }
            break;
        }
    }
    j["deployment"] = d;

    if (s.flight) {
        const FlightPlan& f = *s.flight;
        j["flight"] = {
            {"start", {f.start.x(), f.start.y(), f.start.z()}},
            {"goal", {f.goal.x(), f.goal.y(), f.goal.z()}},
            {"hover", {f.hover.x(), f.hover.y(), f.hover.z()}},
            {"control", f.control},
            {"v_max_mps", f.limits.v_max_mps},
            {"a_max_mps2", f.limits.a_max_mps2},
            {"dt_s", f.limits.dt_s},
            {"omega", f.apf.omega},
            {"accel_levels", f.apf.accel_levels},
            {"goal_radius_m", f.apf.goal_radius_m},
            {"max_steps", f.max_steps},
        };
    }

    j["monte_carlo"] = {{"snapshots", s.monte_carlo.snapshots},
                        {"seed", s.monte_carlo.seed}};
    return j.dump(2) + "\n";
}

std::pair<Uav, Uav> linear_pair(double range_m, double height_m, double separation_m) {
    if (range_m <= 0.0) throw ScenarioError("deployment.range_m: must be > 0");
    if (height_m <= 0.0) throw ScenarioError("deployment.height_m: must be > 0");
    if (separation_m <= 0.0 || separation_m >= range_m) {
        throw ScenarioError("deployment.separation_m: must be in (0, range_m)");
    }
    Uav victim{"uav-0", Position3(range_m, 0.0, height_m), 1, 0};
    Uav interferer{"uav-1", Position3(range_m - separation_m, 0.0, height_m), 0, 1};
    return {victim, interferer};
}

std::pair<Uav, Uav> circular_pair(double radius_m, double height_m, double separation_m) {
    if (radius_m <= 0.0) throw ScenarioError("deployment.radius_m: must be > 0");
    if (height_m <= 0.0) throw ScenarioError("deployment.height_m: must be > 0");
    if (separation_m <= 0.0 || separation_m > 2.0 * radius_m) {
        throw ScenarioError("deployment.separation_m: must be in (0, 2 * radius_m]");
    }
    const double theta = 2.0 * std::asin(separation_m / (2.0 * radius_m));
    Uav victim{"uav-0", Position3(radius_m, 0.0, height_m), 1, 0};
    Uav interferer{"uav-1",
                   Position3(radius_m * std::cos(theta), radius_m * std::sin(theta),
                             height_m),
                   0, 1};
    return {victim, interferer};
}

std::pair<Uav, Uav> deployment_pair(const DeploymentSpec& d) {
    switch (d.type) {
        case DeploymentSpec::Type::Linear:
            return linear_pair(d.range_m, d.height_m, d.separation_m);
        case DeploymentSpec::Type::Circular:
            return circular_pair(d.radius_m, d.height_m, d.separation_m);
        case DeploymentSpec::Type::Explicit:
            break;
    }
    if (d.uavs.size() < 2) {
        throw ScenarioError("deployment.uavs: need at least two UAVs");
    }
    std::vector<std::string> ids;
    ids.reserve(d.uavs.size());
    for (const Uav& u : d.uavs) ids.push_back(u.id);
    const ChannelPlan plan = pair_channels(ids, static_cast<int>(ids.size()));
    Uav victim = d.uavs[0];
    victim.downlink_channel = downlink_channel_of(plan, victim.id);
    victim.uplink_channel = uplink_channel_of(plan, victim.id);
    Uav interferer = d.uavs[1];
    interferer.downlink_channel = downlink_channel_of(plan, interferer.id);
    interferer.uplink_channel = uplink_channel_of(plan, interferer.id);
    return {victim, interferer};
}

}  // namespace aerolink
