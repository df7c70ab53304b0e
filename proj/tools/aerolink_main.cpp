#include <CLI11.hpp>

#include "aerolink/apf_control.hpp"
#include "aerolink/csv.hpp"
#include "aerolink/efficiency.hpp"
#include "aerolink/radio_system.hpp"
#include "aerolink/scenario.hpp"
#include "aerolink/sweep.hpp"

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace aerolink;

struct CommonOpts {
    std::string scenario_path;
    std::uint64_t seed = 0;
    int snapshots = 0;
    std::string out = "-";
    unsigned threads = 0;
    bool seed_set = false;
    bool snapshots_set = false;
};

void add_common(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("--scenario", o.scenario_path, "Scenario JSON file (defaults built in)");
    cmd->add_option("--seed", o.seed, "Override the Monte Carlo base seed")
        ->each([&o](const std::string&) { o.seed_set = true; });
    cmd->add_option("--snapshots", o.snapshots, "Override the snapshot count")
        ->each([&o](const std::string&) { o.snapshots_set = true; });
    cmd->add_option("--out", o.out, "Output CSV path, or - for stdout");
    cmd->add_option("--threads", o.threads,
                    "Worker threads for sweeps (0 = hardware concurrency)");
}

Scenario load_common(const CommonOpts& o) {
    Scenario s = o.scenario_path.empty() ? default_scenario()
                                         : load_scenario_file(o.scenario_path);
    if (o.seed_set) s.monte_carlo.seed = o.seed;
    if (o.snapshots_set) {
        if (o.snapshots < 1) throw ScenarioError("--snapshots: must be >= 1");
        s.monte_carlo.snapshots = o.snapshots;
    }
    return s;
}

int write_output(const std::string& out, const std::string& content) {
    if (out == "-") {
        std::cout << content;
        return 0;
    }
    std::ofstream f(out, std::ios::binary);
    if (!f) {
        std::cerr << "error: cannot open output file: " << out << "\n";
        return 1;
    }
    f << content;
    return 0;
}

std::vector<double> arithmetic_range(double lo, double hi, double step,
                                     const char* what) {
    if (step <= 0.0) throw ScenarioError(std::string(what) + ": step must be > 0");
    if (hi < lo) throw ScenarioError(std::string(what) + ": max must be >= min");
    std::vector<double> v;
    for (int k = 0;; ++k) {
        const double x = lo + step * k;
        if (x > hi + 1e-9) break;
        v.push_back(x);
    }
    return v;
}

struct SweepOpts {
    std::string deployment;  // "", "linear" or "circular"
    double sep_min = 10.0, sep_max = 500.0, sep_step = 10.0;
};

int run_capacity_sweep(const CommonOpts& common, const SweepOpts& opt) {
    const Scenario s = load_common(common);

    DeploymentSpec dep = s.deployment;
    if (opt.deployment == "linear") dep.type = DeploymentSpec::Type::Linear;
    if (opt.deployment == "circular") dep.type = DeploymentSpec::Type::Circular;
    if (dep.type == DeploymentSpec::Type::Explicit) {
        throw ScenarioError(
            "capacity sweep needs a linear or circular deployment "
            "(pass --deployment to pick one)");
    }

    const std::vector<double> seps =
        arithmetic_range(opt.sep_min, opt.sep_max, opt.sep_step, "--sep-*");
    std::vector<SnapshotStats> stats(seps.size());
    parallel_for_index(seps.size(), common.threads, [&](std::size_t i) {
        DeploymentSpec d = dep;
        d.separation_m = seps[i];
        const auto [victim, interferer] = deployment_pair(d);
        stats[i] = downlink_monte_carlo(s.gs_position, victim, interferer, s.radio,
                                        s.monte_carlo.snapshots, s.monte_carlo.seed);
    });

    std::string csv = csv_row(
        {"separation_m", "capacity_mean_mbps", "capacity_std_mbps", "interference_mean_dbm"});
    for (std::size_t i = 0; i < seps.size(); ++i) {
        csv += csv_row({format_double(seps[i]),
                        format_double(stats[i].capacity_mean_bps / 1e6),
                        format_double(stats[i].capacity_std_bps / 1e6),
                        format_double(w_to_dbm(stats[i].interference_mean_w))});
    }
    return write_output(common.out, csv);
}

struct EfficiencyOpts {
    double rate_min = 5.0, rate_max = 60.0, rate_step = 5.0;  // Mbps
    std::string separations = "100,200,300,400,500";
};

int run_efficiency(const CommonOpts& common, const EfficiencyOpts& opt) {
    const Scenario s = load_common(common);
    if (s.deployment.type == DeploymentSpec::Type::Explicit) {
        throw ScenarioError("efficiency sweep needs a linear or circular deployment");
    }

    std::vector<double> seps;
    std::stringstream ss(opt.separations);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            seps.push_back(std::stod(tok));
        } catch (const std::exception&) {
            throw ScenarioError("--separations: '" + tok + "' is not a number");
        }
    }
    if (seps.empty()) throw ScenarioError("--separations: empty list");

    const std::vector<double> rates =
        arithmetic_range(opt.rate_min, opt.rate_max, opt.rate_step, "--rate-*");

    // The full-duplex efficiency depends on the separation only; average it
    // over the Monte Carlo snapshots once per separation.
    std::vector<double> proposed_eta(seps.size());
    parallel_for_index(seps.size(), common.threads, [&](std::size_t i) {
        DeploymentSpec d = s.deployment;
        d.separation_m = seps[i];
        const auto [victim, interferer] = deployment_pair(d);
        const std::vector<Uav> uavs{victim, interferer};
        const ChannelPlan plan = pair_channels({victim.id, interferer.id}, 2);
        double sum = 0.0;
        for (int k = 0; k < s.monte_carlo.snapshots; ++k) {
            RngStream rng(s.monte_carlo.seed + static_cast<std::uint64_t>(k));
            sum += proposed_efficiency(s.gs_position, uavs, plan, s.radio, rng).eta_bps_hz;
        }
        proposed_eta[i] = sum / s.monte_carlo.snapshots;
    });

    // The TDD baseline has no interferer: one row per rate, repeated per
    // separation for plot alignment.
    const auto [victim0, interferer0] = deployment_pair(s.deployment);
    const TddFdmParams tdd{};
    std::string csv =
        csv_row({"required_rate_mbps", "scheme", "separation_m", "eta_bps_hz"});
    for (double rate : rates) {
        const TddSplit split = tdd_split_for_demand(rate * 1e6, s.gs_position,
                                                    victim0.position, s.radio, tdd);
        const double tdd_eta =
            tdd_fdm_efficiency(s.gs_position, victim0.position, split.uplink_fraction,
                               split.downlink_fraction, s.radio, tdd);
        for (std::size_t i = 0; i < seps.size(); ++i) {
            csv += csv_row({format_double(rate), "tdd", format_double(seps[i]),
                            format_double(tdd_eta)});
            csv += csv_row({format_double(rate), "proposed", format_double(seps[i]),
                            format_double(proposed_eta[i])});
        }
    }
    return write_output(common.out, csv);
}

struct FlightOpts {
    std::string control;  // "", "on" or "off"
};

int run_flight_sim(const CommonOpts& common, const FlightOpts& opt) {
    const Scenario s = load_common(common);
    if (!s.flight) throw ScenarioError("flight: scenario has no flight section");

    FlightPlan plan = *s.flight;
    if (opt.control == "on") plan.control = true;
    if (opt.control == "off") plan.control = false;

    const FlightResult fr =
        simulate_flight(plan, s.gs_position, s.radio, s.monte_carlo.seed);

    double peak_i_w = 0.0, cap_sum = 0.0;
    std::string csv = csv_row({"row_type", "t_s", "x_m", "y_m", "z_m",
                               "interference_dbm", "capacity_mbps", "converged"});
    for (const FlightStep& st : fr.steps) {
        peak_i_w = std::max(peak_i_w, st.interference_w);
        cap_sum += st.capacity_bps;
        csv += csv_row({"step", format_double(st.t_s), format_double(st.position.x()),
                        format_double(st.position.y()), format_double(st.position.z()),
                        format_double(w_to_dbm(st.interference_w)),
                        format_double(st.capacity_bps / 1e6), ""});
    }
    const FlightStep& last = fr.steps.back();
    csv += csv_row({"summary", format_double(last.t_s), format_double(last.position.x()),
                    format_double(last.position.y()), format_double(last.position.z()),
                    format_double(w_to_dbm(peak_i_w)),
                    format_double(cap_sum / fr.steps.size() / 1e6),
                    fr.converged ? "true" : "false"});

    const int rc = write_output(common.out, csv);
    if (rc != 0) return rc;
    if (!fr.converged) {
        std::cerr << "error: flight did not reach the goal within "
                  << plan.max_steps << " steps\n";
        return 2;
    }
    return 0;
}

struct PowerOpts {
    double target_rate_mbps = 20.0;
};

int run_power_saving(const CommonOpts& common, const PowerOpts& opt) {
    const Scenario s = load_common(common);
    const auto [victim, interferer] = deployment_pair(s.deployment);
    (void)interferer;

    const double rate_bps = opt.target_rate_mbps * 1e6;
    const double dir = required_uplink_power_dbm(rate_bps, s.gs_position,
                                                 victim.position,
                                                 AntennaMode::Directional, s.radio);
    const double omni = required_uplink_power_dbm(rate_bps, s.gs_position,
                                                  victim.position, AntennaMode::Omni,
                                                  s.radio);

    std::string csv = csv_row({"mode", "required_uplink_power_dbm", "delta_db"});
    csv += csv_row({"directional", format_double(dir), format_double(0.0)});
    csv += csv_row({"omni", format_double(omni), format_double(omni - dir)});
    return write_output(common.out, csv);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Link-level simulator for full-duplex multi-UAV aerial networks"};
    app.require_subcommand(1);

    CommonOpts sweep_common, eff_common, flight_common, power_common;
    SweepOpts sweep_opt;
    EfficiencyOpts eff_opt;
    FlightOpts flight_opt;
    PowerOpts power_opt;

    CLI::App* sweep = app.add_subcommand(
        "capacity-sweep", "Mean downlink capacity vs UAV separation");
    add_common(sweep, sweep_common);
    sweep->add_option("--deployment", sweep_opt.deployment, "linear or circular")
        ->check(CLI::IsMember({"linear", "circular"}));
    sweep->add_option("--sep-min", sweep_opt.sep_min, "Smallest separation [m]");
    sweep->add_option("--sep-max", sweep_opt.sep_max, "Largest separation [m]");
    sweep->add_option("--sep-step", sweep_opt.sep_step, "Separation step [m]");

    CLI::App* eff = app.add_subcommand(
        "efficiency", "Spectral efficiency vs required downlink rate");
    add_common(eff, eff_common);
    eff->add_option("--rate-min", eff_opt.rate_min, "Smallest required rate [Mbps]");
    eff->add_option("--rate-max", eff_opt.rate_max, "Largest required rate [Mbps]");
    eff->add_option("--rate-step", eff_opt.rate_step, "Rate step [Mbps]");
    eff->add_option("--separations", eff_opt.separations,
                    "Comma-separated UAV separations [m]");

    CLI::App* flight = app.add_subcommand(
        "flight-sim", "Fly the scenario's flight plan and log the downlink");
    add_common(flight, flight_common);
    flight->add_option("--control", flight_opt.control,
                       "Force interference-aware control on or off")
        ->check(CLI::IsMember({"on", "off"}));

    CLI::App* power = app.add_subcommand(
        "power-saving", "Uplink power needed with directional vs omni antennas");
    add_common(power, power_common);
    power->add_option("--target-rate", power_opt.target_rate_mbps,
                      "Uplink rate target [Mbps]");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (sweep->parsed()) return run_capacity_sweep(sweep_common, sweep_opt);
        if (eff->parsed()) return run_efficiency(eff_common, eff_opt);
        if (flight->parsed()) return run_flight_sim(flight_common, flight_opt);
        if (power->parsed()) return run_power_saving(power_common, power_opt);
    } catch (const ScenarioError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::runtime_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
