#pragma once

// The simulated bench end to end: input-state preparation, the output
// states of both sides of the equation, the overlap fidelity, the
// theta2 sweep, the necessity scan over (theta1, theta2) at fixed theta3,
// and a shot-noise Monte Carlo that emulates the photon-counting
// measurement with single-qubit tomography.
//
// Grid points and Monte Carlo trials are pure evaluations; they may run on
// any number of threads. Per-trial generators are derived deterministically
// from (seed, trial index), and reductions happen in index order, so results
// do not depend on the degree of parallelism.

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <random>
#include <thread>
#include <utility>

#include "ybe/operators.hpp"

namespace ybe {

// ---------------------------------------------------------------------------
// Parallel grid evaluation
// ---------------------------------------------------------------------------

inline int thread_budget() {
    static const int cached = [] {
        int n = static_cast<int>(std::thread::hardware_concurrency());
        if (n < 1) n = 1;
        if (const char* env = std::getenv("YBE_THREADS")) {
            char* end = nullptr;
            long cap = std::strtol(env, &end, 10);
            if (end != env && cap >= 1 && cap < n) n = static_cast<int>(cap);
        }
        return n;
    }();
    return cached;
}

/// Runs fn(i) for i in [0, count) across the thread budget (or an explicit
/// thread count). fn must be a pure function of i writing only to its own
/// output slot.
template <typename Fn>
void parallel_for(int count, Fn&& fn, int threads_override = 0) {
    int threads = std::min(threads_override > 0 ? threads_override : thread_budget(),
                           count);
    if (threads <= 1) {
        for (int i = 0; i < count; ++i) fn(i);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(static_cast<size_t>(threads));
    for (int t = 0; t < threads; ++t) {
        int lo = static_cast<int>(static_cast<long long>(count) * t / threads);
        int hi = static_cast<int>(static_cast<long long>(count) * (t + 1) / threads);
        pool.emplace_back([lo, hi, &fn] {
            for (int i = lo; i < hi; ++i) fn(i);
        });
    }
    for (std::thread& th : pool) th.join();
}

// ---------------------------------------------------------------------------
// State preparation and probes
// ---------------------------------------------------------------------------

enum class StateSpec { Vertical, Horizontal, Diagonal45, CircularR };

inline PolarizationState prepare_state(StateSpec spec) {
    double r = 1.0 / std::sqrt(2.0);
    switch (spec) {
        case StateSpec::Vertical: return {cplx(1), cplx(0)};
        case StateSpec::Horizontal: return {cplx(0), cplx(1)};
        case StateSpec::Diagonal45: return {cplx(r), cplx(r)};
        case StateSpec::CircularR: return {cplx(r), cplx(0, r)};
    }
    throw std::invalid_argument("prepare_state: unknown spec");
}

/// Width of the norm window accepted for explicit amplitude pairs; pairs
/// inside the window are renormalized silently.
inline constexpr double kPrepareNormWindow = 1e-4;

inline PolarizationState prepare_state(cplx amp_v, cplx amp_h) {
    if (!is_finite(amp_v) || !is_finite(amp_h))
        throw std::invalid_argument("prepare_state: non-finite amplitude");
    double n = std::sqrt(std::norm(amp_v) + std::norm(amp_h));
    if (n == 0.0)
        throw std::invalid_argument("prepare_state: zero vector");
    if (std::fabs(n - 1.0) > kPrepareNormWindow)
        throw std::invalid_argument("prepare_state: amplitudes not normalized");
    return {amp_v / n, amp_h / n};
}

/// Input states swept together; fidelity equal to 1 on a set of states
/// spanning more than one Bloch direction certifies operator equality up
/// to a global phase.
struct ProbeSet {
    std::vector<PolarizationState> states;
};

/// Validates that some pair of probes is neither parallel nor orthogonal.
inline ProbeSet probe_set(std::vector<PolarizationState> states) {
    bool ok = false;
    for (size_t i = 0; i < states.size() && !ok; ++i)
        for (size_t j = i + 1; j < states.size() && !ok; ++j) {
            double ov = std::abs(inner(states[i], states[j]));
            ok = ov > 1e-9 && ov < 1.0 - 1e-9;
        }
    if (!ok)
        throw std::invalid_argument(
            "probe_set: need two probes that are neither parallel nor orthogonal");
    return {std::move(states)};
}

/// Vertical, diagonal and right-circular: tomographically complete directions.
inline ProbeSet default_probe_set() {
    return probe_set({prepare_state(StateSpec::Vertical),
                      prepare_state(StateSpec::Diagonal45),
                      prepare_state(StateSpec::CircularR)});
}

// ---------------------------------------------------------------------------
// Output states and fidelity
// ---------------------------------------------------------------------------

/// (apply(lhs(t), input), apply(rhs(t), input)).
inline std::pair<PolarizationState, PolarizationState>
output_states(const AngleTriple& t, const PolarizationState& input) {
    return {apply(lhs(t), input), apply(rhs(t), input)};
}

/// |<l|r>|, the overlap modulus between the two output states.
inline double fidelity_cybe(const PolarizationState& l, const PolarizationState& r) {
    return std::abs(inner(l, r));
}

// ---------------------------------------------------------------------------
// Sweeps and scans
// ---------------------------------------------------------------------------

/// Uniform angle grid, radians.
struct AngleGrid {
    double start = 0.0;
    double step = 0.0;
    int count = 0;

    double at(int i) const { return start + step * i; }
};

/// Grid over [0, pi) with the given pitch in degrees.
inline AngleGrid half_turn_grid(double pitch_deg) {
    if (!(pitch_deg > 0.0))
        throw std::invalid_argument("half_turn_grid: pitch must be positive");
    int n = static_cast<int>(std::llround(180.0 / pitch_deg));
    if (n < 1) n = 1;
    return {0.0, deg_to_rad(pitch_deg), n};
}

struct SweepRecord {
    double theta2 = 0.0;
    std::vector<double> fidelity_per_probe;
    double fidelity_min = 1.0;
};

/// Fidelity of every probe at every grid value of theta2, with theta1 and
/// theta3 held fixed. fidelity_min is the conservative certificate over
/// the probe set.
inline std::vector<SweepRecord> sweep_theta2(double theta1, double theta3,
                                             const AngleGrid& grid,
                                             const ProbeSet& probes) {
    if (grid.count < 1) throw std::invalid_argument("sweep_theta2: empty grid");
    if (probes.states.empty()) throw std::invalid_argument("sweep_theta2: no probes");
    require_off_pole(theta1, theta3, "sweep_theta2");

    std::vector<SweepRecord> out(static_cast<size_t>(grid.count));
    parallel_for(grid.count, [&](int i) {
        AngleTriple t{theta1, grid.at(i), theta3};
        Mat2 l = lhs(t), r = rhs(t);
        SweepRecord rec;
        rec.theta2 = t.theta2;
        rec.fidelity_per_probe.reserve(probes.states.size());
        rec.fidelity_min = 1.0;
        for (const PolarizationState& p : probes.states) {
            double f = fidelity_cybe(apply(l, p), apply(r, p));
            rec.fidelity_per_probe.push_back(f);
            rec.fidelity_min = std::min(rec.fidelity_min, f);
        }
        out[static_cast<size_t>(i)] = std::move(rec);
    });
    return out;
}

struct ScanRecord {
    double theta3 = 0.0;
    double theta1 = 0.0;
    double theta2_found = 0.0;
    double theta2_predicted = 0.0;
    double deviation_mod_pi = 0.0;
};

struct ScanResult {
    std::vector<ScanRecord> records;
    int violations = 0;
    double max_deviation = 0.0;
};

/// Deviation bound a surviving pair may show before the scan flags a
/// necessity violation.
inline constexpr double kScanDeviationTol = kPi / 180.0;

/// Records every (theta2, theta1) grid pair whose certificate fidelity
/// exceeds the threshold, against the predicted middle angle. The predicted
/// value uses the continuous extension of the solved constraint so grids
/// containing the secant pole are handled. Pairs deviating more than
/// deviation_tol (mod pi) count as necessity violations.
inline ScanResult necessity_scan(double theta3, const AngleGrid& theta2_grid,
                                 const AngleGrid& theta1_grid, double threshold,
                                 const ProbeSet& probes,
                                 double deviation_tol = kScanDeviationTol) {
    if (theta2_grid.count < 1 || theta1_grid.count < 1)
        throw std::invalid_argument("necessity_scan: empty grid");
    if (!(threshold > 0.0 && threshold < 1.0))
        throw std::invalid_argument("necessity_scan: threshold must be in (0,1)");
    if (probes.states.empty())
        throw std::invalid_argument("necessity_scan: no probes");

    std::vector<std::vector<ScanRecord>> rows(static_cast<size_t>(theta2_grid.count));
    parallel_for(theta2_grid.count, [&](int i2) {
        double theta2 = theta2_grid.at(i2);
        Mat2 a2 = op_A(theta2), b2 = op_B(theta2);
        std::vector<ScanRecord>& row = rows[static_cast<size_t>(i2)];
        for (int i1 = 0; i1 < theta1_grid.count; ++i1) {
            double theta1 = theta1_grid.at(i1);
            Mat2 l = op_A(theta1) * b2 * op_A(theta3);
            Mat2 r = op_B(theta3) * a2 * op_B(theta1);
            double fmin = 1.0;
            for (const PolarizationState& p : probes.states)
                fmin = std::min(fmin, fidelity_cybe(apply(l, p), apply(r, p)));
            if (fmin > threshold) {
                double predicted = theta2_star_extended(theta1, theta3);
                ScanRecord rec{theta3, theta1, wrap_angle_pi(theta2), predicted,
                               angle_dist_mod_pi(theta2, predicted)};
                row.push_back(rec);
            }
        }
    });

    ScanResult result;
    for (const std::vector<ScanRecord>& row : rows)
        for (const ScanRecord& rec : row) {
            result.max_deviation = std::max(result.max_deviation, rec.deviation_mod_pi);
            if (rec.deviation_mod_pi > deviation_tol) ++result.violations;
            result.records.push_back(rec);
        }
    return result;
}

// ---------------------------------------------------------------------------
// Photon counting and tomography
// ---------------------------------------------------------------------------

enum class MeasBasis { HV, Diag, Circ };

struct Counts {
    long long plus = 0;
    long long minus = 0;
};

inline uint64_t splitmix64(uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

inline PolarizationState basis_plus_state(MeasBasis basis) {
    switch (basis) {
        case MeasBasis::HV: return prepare_state(StateSpec::Vertical);
        case MeasBasis::Diag: return prepare_state(StateSpec::Diagonal45);
        case MeasBasis::Circ: return prepare_state(StateSpec::CircularR);
    }
    throw std::invalid_argument("basis_plus_state: unknown basis");
}

/// Ideal analyzer with a binomial photon-counting model: count_plus is
/// binomial with n trials and success probability |<basis+|state>|^2.
/// Deterministic for a fixed seed.
inline Counts simulate_counts(const PolarizationState& state, MeasBasis basis,
                              long long n, uint64_t seed) {
    if (n < 1) throw std::invalid_argument("simulate_counts: need n >= 1");
    double p = std::norm(inner(basis_plus_state(basis), state));
    p = std::clamp(p, 0.0, 1.0);
    std::mt19937_64 eng(splitmix64(seed));
    std::binomial_distribution<long long> dist(n, p);
    long long plus = dist(eng);
    return {plus, n - plus};
}

/// Linear inversion from relative frequencies in the three bases, projected
/// onto the unit Bloch sphere, with the global phase fixed so the vertical
/// amplitude is real and non-negative.
inline PolarizationState tomography_estimate(const Counts& hv, const Counts& diag,
                                             const Counts& circ) {
    auto frequency = [](const Counts& c) {
        long long total = c.plus + c.minus;
        if (total < 1)
            throw std::invalid_argument("tomography_estimate: empty counts");
        return static_cast<double>(c.plus - c.minus) / static_cast<double>(total);
    };
    double sx = frequency(diag);
    double sy = frequency(circ);
    double sz = frequency(hv);
    double len = std::sqrt(sx * sx + sy * sy + sz * sz);
    if (len < 1e-15) return prepare_state(StateSpec::Vertical);
    double polar = std::acos(std::clamp(sz / len, -1.0, 1.0));
    double azimuth = std::atan2(sy, sx);
    return {cplx(std::cos(polar / 2.0)),
            std::exp(cplx(0, azimuth)) * std::sin(polar / 2.0)};
}

// ---------------------------------------------------------------------------
// Monte Carlo fidelity estimate
// ---------------------------------------------------------------------------

struct MonteCarloConfig {
    long long photons_per_basis = 1;
    uint64_t seed = 0;
    int trials = 1;
};

struct BasisTally {
    long long plus = 0;
    long long minus = 0;
};

struct McEstimate {
    double fidelity_mean = 0.0;
    double fidelity_std = 0.0;
    // counts_summary[arm][basis], arm 0 = left side, 1 = right side;
    // basis order HV, Diag, Circ; totals over all trials.
    std::array<std::array<BasisTally, 3>, 2> counts_summary{};
};

/// Simulates the counting experiment for both output arms, tomography-
/// estimates both states per trial and reports mean and sample standard
/// deviation of the overlap fidelity. Per-trial generators are derived
/// from (seed, trial index), so the result is independent of scheduling.
inline McEstimate montecarlo_cybe(const AngleTriple& t, const PolarizationState& input,
                                  const MonteCarloConfig& cfg) {
    if (cfg.photons_per_basis < 1)
        throw std::invalid_argument("montecarlo_cybe: need photons_per_basis >= 1");
    if (cfg.trials < 1)
        throw std::invalid_argument("montecarlo_cybe: need trials >= 1");

    auto [out_l, out_r] = output_states(t, input);
    const std::array<PolarizationState, 2> arms{out_l, out_r};
    const std::array<MeasBasis, 3> bases{MeasBasis::HV, MeasBasis::Diag, MeasBasis::Circ};

    std::vector<double> fidelities(static_cast<size_t>(cfg.trials));
    std::vector<std::array<std::array<Counts, 3>, 2>> all_counts(
        static_cast<size_t>(cfg.trials));

    parallel_for(cfg.trials, [&](int trial) {
        uint64_t trial_seed = splitmix64(cfg.seed + 0x9E3779B97F4A7C15ULL *
                                                        (static_cast<uint64_t>(trial) + 1));
        std::array<PolarizationState, 2> estimates;
        for (int arm = 0; arm < 2; ++arm) {
            std::array<Counts, 3> counts;
            for (int b = 0; b < 3; ++b) {
                uint64_t sub_seed = splitmix64(trial_seed + static_cast<uint64_t>(arm * 3 + b));
                counts[static_cast<size_t>(b)] = simulate_counts(
                    arms[static_cast<size_t>(arm)], bases[static_cast<size_t>(b)],
                    cfg.photons_per_basis, sub_seed);
            }
            all_counts[static_cast<size_t>(trial)][static_cast<size_t>(arm)] = counts;
            estimates[static_cast<size_t>(arm)] =
                tomography_estimate(counts[0], counts[1], counts[2]);
        }
        fidelities[static_cast<size_t>(trial)] = fidelity_cybe(estimates[0], estimates[1]);
    });

    McEstimate est;
    double sum = 0.0;
    for (double f : fidelities) sum += f;
    est.fidelity_mean = sum / cfg.trials;
    double ss = 0.0;
    for (double f : fidelities) ss += (f - est.fidelity_mean) * (f - est.fidelity_mean);
    est.fidelity_std = cfg.trials > 1 ? std::sqrt(ss / (cfg.trials - 1)) : 0.0;
    for (const auto& trial_counts : all_counts)
        for (int arm = 0; arm < 2; ++arm)
            for (int b = 0; b < 3; ++b) {
                BasisTally& tally = est.counts_summary[static_cast<size_t>(arm)]
                                                      [static_cast<size_t>(b)];
                const Counts& c = trial_counts[static_cast<size_t>(arm)][static_cast<size_t>(b)];
                tally.plus += c.plus;
                tally.minus += c.minus;
            }
    return est;
}

} // namespace ybe
