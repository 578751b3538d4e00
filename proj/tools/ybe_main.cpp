// Command-line front end: degrees at the boundary, radians inside.

#include <cstdio>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "ybe/csv.hpp"
#include "ybe/experiment.hpp"
#include "ybe/optics.hpp"

namespace {

ybe::PolarizationState parse_input_state(const std::string& spec) {
    using ybe::StateSpec;
    if (spec == "V") return ybe::prepare_state(StateSpec::Vertical);
    if (spec == "H") return ybe::prepare_state(StateSpec::Horizontal);
    if (spec == "D45") return ybe::prepare_state(StateSpec::Diagonal45);
    if (spec == "CR") return ybe::prepare_state(StateSpec::CircularR);
    std::vector<std::string> parts = ybe::csv::split_line(spec);
    if (parts.size() != 4)
        throw CLI::ValidationError("--input",
                                   "expected V, H, D45, CR or \"re,im,re,im\"");
    double re_v = std::stod(parts[0]), im_v = std::stod(parts[1]);
    double re_h = std::stod(parts[2]), im_h = std::stod(parts[3]);
    return ybe::prepare_state(ybe::cplx(re_v, im_v), ybe::cplx(re_h, im_h));
}

/// Probe set whose first entry is the requested input state; the companions
/// keep the set tomographically informative.
ybe::ProbeSet probes_with_input(const ybe::PolarizationState& input) {
    return ybe::probe_set({input, ybe::prepare_state(ybe::StateSpec::Diagonal45),
                           ybe::prepare_state(ybe::StateSpec::CircularR)});
}

struct Args {
    double theta1_deg = 0.0, theta2_deg = 0.0, theta3_deg = 0.0;
    double theta_deg = 0.0;
    double grid_deg = 0.0;
    double threshold = 0.9995;
    double xu = 0.0, xv = 0.0;
    int eps = +1;
    long long photons = 100000;
    std::uint64_t seed = 12345;
    int trials = 100;
    std::string input = "V";
    std::string out;
    std::string side = "lhs";
};

int run_check(const Args& a) {
    ybe::AngleTriple t{ybe::deg_to_rad(a.theta1_deg), ybe::deg_to_rad(a.theta2_deg),
                       ybe::deg_to_rad(a.theta3_deg)};
    double dist = ybe::dist_up_to_phase(ybe::lhs(t), ybe::rhs(t));
    double residual = std::abs(ybe::constraint_residual(t));
    std::printf("lhs_rhs_distance = %.6e\n", dist);
    std::printf("constraint_residual = %.6e\n", residual);
    ybe::ProbeSet probes = ybe::default_probe_set();
    for (size_t i = 0; i < probes.states.size(); ++i) {
        auto [l, r] = ybe::output_states(t, probes.states[i]);
        std::printf("C_YBE[probe%zu] = %.6f\n", i, ybe::fidelity_cybe(l, r));
    }
    return 0;
}

int run_solve(const Args& a) {
    double v = ybe::theta2_star(ybe::deg_to_rad(a.theta1_deg),
                                ybe::deg_to_rad(a.theta3_deg));
    std::printf("%.2f\n", ybe::rad_to_deg(v));
    return 0;
}

int run_sweep(const Args& a) {
    double theta1 = ybe::deg_to_rad(a.theta1_deg);
    double theta3 = ybe::deg_to_rad(a.theta3_deg);
    ybe::AngleGrid grid = ybe::half_turn_grid(a.grid_deg > 0 ? a.grid_deg : 0.01);
    ybe::ProbeSet probes = probes_with_input(parse_input_state(a.input));
    std::vector<ybe::SweepRecord> records = ybe::sweep_theta2(theta1, theta3, grid, probes);
    ybe::csv::write_sweep(a.out, theta1, theta3, records);
    std::printf("wrote %zu rows to %s\n", records.size(), a.out.c_str());
    return 0;
}

int run_scan(const Args& a) {
    double theta3 = ybe::deg_to_rad(a.theta3_deg);
    ybe::AngleGrid grid = ybe::half_turn_grid(a.grid_deg > 0 ? a.grid_deg : 0.25);
    ybe::ProbeSet probes = probes_with_input(parse_input_state(a.input));
    ybe::ScanResult result = ybe::necessity_scan(theta3, grid, grid, a.threshold, probes);
    ybe::csv::write_scan(a.out, result.records);
    std::printf("wrote %zu surviving pairs to %s\n", result.records.size(), a.out.c_str());
    std::printf("max_deviation = %.4f deg\n", ybe::rad_to_deg(result.max_deviation));
    std::printf("violations = %d\n", result.violations);
    return result.violations > 0 ? 3 : 0;
}

int run_spectral(const Args& a) {
    ybe::SpectralPoint pu = ybe::spectral_point(a.xu, a.eps);
    ybe::SpectralPoint pv = ybe::spectral_point(a.xv, a.eps);
    double x23 = ybe::lorentz_compose(a.xu, a.xv);
    ybe::SpectralPoint p23 = ybe::spectral_point(x23, a.eps);
    std::printf("theta1 = %.2f deg\n", ybe::rad_to_deg(ybe::theta_from_spectral(pu).theta));
    std::printf("theta2 = %.2f deg\n", ybe::rad_to_deg(ybe::theta_from_spectral(p23).theta));
    std::printf("theta3 = %.2f deg\n", ybe::rad_to_deg(ybe::theta_from_spectral(pv).theta));
    std::printf("x23 = %.10g\n", x23);
    return 0;
}

int run_braid(const Args& a) {
    double theta = ybe::deg_to_rad(a.theta_deg);
    std::printf("braid_residual = %.6e\n", ybe::braid_residual_theta(theta));
    return 0;
}

int run_mc(const Args& a) {
    ybe::AngleTriple t{ybe::deg_to_rad(a.theta1_deg), ybe::deg_to_rad(a.theta2_deg),
                       ybe::deg_to_rad(a.theta3_deg)};
    ybe::MonteCarloConfig cfg{a.photons, a.seed, a.trials};
    ybe::McEstimate est = ybe::montecarlo_cybe(t, parse_input_state(a.input), cfg);
    ybe::csv::write_mc(a.out, t, cfg, est);
    std::printf("fid_mean = %.6f\nfid_std = %.6f\n", est.fidelity_mean, est.fidelity_std);
    return 0;
}

int run_bench_plates(const Args& a) {
    ybe::AngleTriple t{ybe::deg_to_rad(a.theta1_deg), ybe::deg_to_rad(a.theta2_deg),
                       ybe::deg_to_rad(a.theta3_deg)};
    ybe::Side side = a.side == "rhs" ? ybe::Side::RHS : ybe::Side::LHS;
    std::fputs(ybe::format_sequence(ybe::sequence_side(t, side)).c_str(), stdout);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Two-dimensional Yang-Baxter equation simulator for polarization optics"};
    app.require_subcommand(1);
    Args a;

    CLI::App* check = app.add_subcommand(
        "check", "Operator distance, constraint residual and fidelities for one triple");
    check->add_option("--theta1", a.theta1_deg, "theta1 in degrees")->required();
    check->add_option("--theta2", a.theta2_deg, "theta2 in degrees")->required();
    check->add_option("--theta3", a.theta3_deg, "theta3 in degrees")->required();

    CLI::App* solve = app.add_subcommand(
        "solve", "Middle angle solving the constraint for given theta1, theta3");
    solve->add_option("--theta1", a.theta1_deg, "theta1 in degrees")->required();
    solve->add_option("--theta3", a.theta3_deg, "theta3 in degrees")->required();

    CLI::App* sweep = app.add_subcommand(
        "sweep", "Fidelity versus theta2 over [0,180) at fixed theta1, theta3");
    sweep->add_option("--theta1", a.theta1_deg, "theta1 in degrees")->required();
    sweep->add_option("--theta3", a.theta3_deg, "theta3 in degrees")->required();
    sweep->add_option("--grid", a.grid_deg, "grid pitch in degrees (default 0.01)");
    sweep->add_option("--input", a.input, "input state: V, H, D45, CR or re,im,re,im");
    sweep->add_option("--out", a.out, "output CSV path")->required();

    CLI::App* scan = app.add_subcommand(
        "scan", "Record all (theta1, theta2) pairs whose fidelity clears the threshold");
    scan->add_option("--theta3", a.theta3_deg, "fixed theta3 in degrees")->required();
    scan->add_option("--grid", a.grid_deg, "grid pitch in degrees (default 0.25)");
    scan->add_option("--threshold", a.threshold, "fidelity lower bound (default 0.9995)");
    scan->add_option("--input", a.input, "input state: V, H, D45, CR or re,im,re,im");
    scan->add_option("--out", a.out, "output CSV path")->required();

    CLI::App* spectral = app.add_subcommand(
        "spectral", "Map spectral parameters to angles and print the composed x23");
    spectral->add_option("--xu", a.xu, "spectral parameter x_u")->required();
    spectral->add_option("--xv", a.xv, "spectral parameter x_v")->required();
    spectral->add_option("--eps", a.eps, "sign epsilon, +1 or -1");

    CLI::App* braid = app.add_subcommand(
        "braid", "Scalar braid residual ||ABA - BAB|| at a given angle");
    braid->add_option("--theta", a.theta_deg, "angle in degrees")->required();

    CLI::App* mc = app.add_subcommand(
        "mc", "Shot-noise Monte Carlo of the counting experiment");
    mc->add_option("--theta1", a.theta1_deg, "theta1 in degrees")->required();
    mc->add_option("--theta2", a.theta2_deg, "theta2 in degrees")->required();
    mc->add_option("--theta3", a.theta3_deg, "theta3 in degrees")->required();
    mc->add_option("--photons", a.photons, "photons per basis (default 100000)");
    mc->add_option("--seed", a.seed, "random seed (default 12345)");
    mc->add_option("--trials", a.trials, "number of trials (default 100)");
    mc->add_option("--input", a.input, "input state: V, H, D45, CR or re,im,re,im");
    mc->add_option("--out", a.out, "output CSV path")->required();

    CLI::App* bench = app.add_subcommand(
        "bench-plates", "Wave-plate listing realizing one side of the equation");
    bench->add_option("--theta1", a.theta1_deg, "theta1 in degrees")->required();
    bench->add_option("--theta2", a.theta2_deg, "theta2 in degrees")->required();
    bench->add_option("--theta3", a.theta3_deg, "theta3 in degrees")->required();
    bench->add_option("--side", a.side, "lhs or rhs (default lhs)")
        ->check(CLI::IsMember({"lhs", "rhs"}));

    CLI11_PARSE(app, argc, argv);

    try {
        if (check->parsed()) return run_check(a);
        if (solve->parsed()) return run_solve(a);
        if (sweep->parsed()) return run_sweep(a);
        if (scan->parsed()) return run_scan(a);
        if (spectral->parsed()) return run_spectral(a);
        if (braid->parsed()) return run_braid(a);
        if (mc->parsed()) return run_mc(a);
        if (bench->parsed()) return run_bench_plates(a);
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
    return 0;
}
