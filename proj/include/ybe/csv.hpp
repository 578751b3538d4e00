#pragma once

// CSV emission and parsing for sweep, scan and Monte Carlo results.
// UTF-8, header row, '.' decimal separator, angles in degrees with four
// decimals. Readers accept exactly what the writers emit, so files round-
// trip at the printed precision.

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "ybe/experiment.hpp"

namespace ybe::csv {

inline std::string fmt_angle(double deg) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.4f", deg);
    return buf;
}

inline std::string fmt_fidelity(double f) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12f", f);
    return buf;
}

inline std::vector<std::string> split_line(const std::string& line) {
    std::vector<std::string> fields;
    std::stringstream ss(line);
    std::string field;
    while (std::getline(ss, field, ',')) fields.push_back(field);
    return fields;
}

/// Raw table: header plus string rows.
struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};

inline Table read_table(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("csv: cannot open " + path);
    Table t;
    std::string line;
    if (!std::getline(in, line)) throw std::runtime_error("csv: empty file " + path);
    if (!line.empty() && line.back() == '\r') line.pop_back();
    t.header = split_line(line);
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        std::vector<std::string> row = split_line(line);
        if (row.size() != t.header.size())
            throw std::runtime_error("csv: ragged row in " + path);
        t.rows.push_back(std::move(row));
    }
    return t;
}

// ---------------------------------------------------------------------------
// sweep.csv
// ---------------------------------------------------------------------------

struct SweepRow {
    double theta1_deg = 0.0;
    double theta3_deg = 0.0;
    double theta2_deg = 0.0;
    std::vector<double> fid_per_probe;
    double fid_min = 0.0;
};

inline void write_sweep(const std::string& path, double theta1, double theta3,
                        const std::vector<SweepRecord>& records) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("csv: cannot write " + path);
    size_t probes = records.empty() ? 0 : records.front().fidelity_per_probe.size();
    out << "theta1_deg,theta3_deg,theta2_deg";
    for (size_t p = 0; p < probes; ++p) out << ",fid_probe" << p;
    out << ",fid_min\n";
    for (const SweepRecord& rec : records) {
        out << fmt_angle(rad_to_deg(theta1)) << ',' << fmt_angle(rad_to_deg(theta3))
            << ',' << fmt_angle(rad_to_deg(rec.theta2));
        for (double f : rec.fidelity_per_probe) out << ',' << fmt_fidelity(f);
        out << ',' << fmt_fidelity(rec.fidelity_min) << '\n';
    }
}

inline std::vector<SweepRow> read_sweep(const std::string& path) {
    Table t = read_table(path);
    if (t.header.size() < 5 || t.header[0] != "theta1_deg")
        throw std::runtime_error("csv: not a sweep file: " + path);
    std::vector<SweepRow> rows;
    rows.reserve(t.rows.size());
    for (const std::vector<std::string>& r : t.rows) {
        SweepRow row;
        row.theta1_deg = std::stod(r[0]);
        row.theta3_deg = std::stod(r[1]);
        row.theta2_deg = std::stod(r[2]);
        for (size_t i = 3; i + 1 < r.size(); ++i)
            row.fid_per_probe.push_back(std::stod(r[i]));
        row.fid_min = std::stod(r.back());
        rows.push_back(std::move(row));
    }
    return rows;
}

// ---------------------------------------------------------------------------
// scan.csv
// ---------------------------------------------------------------------------

struct ScanRow {
    double theta3_deg = 0.0;
    double theta1_deg = 0.0;
    double theta2_found_deg = 0.0;
    double theta2_pred_deg = 0.0;
    double deviation_deg = 0.0;
};

inline void write_scan(const std::string& path, const std::vector<ScanRecord>& records) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("csv: cannot write " + path);
    out << "theta3_deg,theta1_deg,theta2_found_deg,theta2_pred_deg,deviation_deg\n";
    for (const ScanRecord& rec : records)
        out << fmt_angle(rad_to_deg(rec.theta3)) << ',' << fmt_angle(rad_to_deg(rec.theta1))
            << ',' << fmt_angle(rad_to_deg(rec.theta2_found)) << ','
            << fmt_angle(rad_to_deg(rec.theta2_predicted)) << ','
            << fmt_angle(rad_to_deg(rec.deviation_mod_pi)) << '\n';
}

inline std::vector<ScanRow> read_scan(const std::string& path) {
    Table t = read_table(path);
    if (t.header.size() != 5 || t.header[0] != "theta3_deg")
        throw std::runtime_error("csv: not a scan file: " + path);
    std::vector<ScanRow> rows;
    rows.reserve(t.rows.size());
    for (const std::vector<std::string>& r : t.rows)
        rows.push_back({std::stod(r[0]), std::stod(r[1]), std::stod(r[2]),
                        std::stod(r[3]), std::stod(r[4])});
    return rows;
}

// ---------------------------------------------------------------------------
// mc.csv
// ---------------------------------------------------------------------------

struct McRow {
    double theta1_deg = 0.0;
    double theta2_deg = 0.0;
    double theta3_deg = 0.0;
    long long photons = 0;
    int trials = 0;
    double fid_mean = 0.0;
    double fid_std = 0.0;
};

inline void write_mc(const std::string& path, const AngleTriple& t,
                     const MonteCarloConfig& cfg, const McEstimate& est) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("csv: cannot write " + path);
    out << "theta1_deg,theta2_deg,theta3_deg,photons,trials,fid_mean,fid_std\n";
    out << fmt_angle(rad_to_deg(t.theta1)) << ',' << fmt_angle(rad_to_deg(t.theta2))
        << ',' << fmt_angle(rad_to_deg(t.theta3)) << ',' << cfg.photons_per_basis
        << ',' << cfg.trials << ',' << fmt_fidelity(est.fidelity_mean) << ','
        << fmt_fidelity(est.fidelity_std) << '\n';
}

inline std::vector<McRow> read_mc(const std::string& path) {
    Table t = read_table(path);
    if (t.header.size() != 7 || t.header[0] != "theta1_deg")
        throw std::runtime_error("csv: not an mc file: " + path);
    std::vector<McRow> rows;
    rows.reserve(t.rows.size());
    for (const std::vector<std::string>& r : t.rows)
        rows.push_back({std::stod(r[0]), std::stod(r[1]), std::stod(r[2]),
                        std::stoll(r[3]), std::stoi(r[4]), std::stod(r[5]),
                        std::stod(r[6])});
    return rows;
}

} // namespace ybe::csv
