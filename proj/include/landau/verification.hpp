#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <map>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "landau/classical_dynamics.hpp"
#include "landau/gauge_fields.hpp"
#include "landau/setup.hpp"

namespace landau {

class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct RunConfig {
    MagneticSetup setup;
    std::uint64_t seed = 20240917;
    int workers = 0;  // 0: hardware concurrency

    // kx-basis table
    int table1_n_max = 3;
    std::vector<double> kx_list{-2.0, 0.0, 1.5};
    std::vector<double> sigma_list{0.2, 0.5, 1.0, 2.0, 5.0};
    double tol_table1 = 1e-8;

    // nm-basis table
    int table2_n_max = 5;
    int m_min = -5;
    double tol_fock = 1e-12;
    double tol_realspace = 1e-8;

    int grid_points = 160;
    double fd_step = 1e-3;

    // gauge classes
    int chi_samples = 10;
    int chi_degree = 4;
    double tol_residual = 1e-6;
    double tol_overlap = 1e-8;
    double tol_reconstruction = 1e-6;
    double separation_factor = 10.0;

    // classical orbit
    TrajectoryState initial{0.0, 0.7, -0.4, 0.9, 0.6};
    int periods = 100;
    int steps_per_period = 1000;
    double tol_drift = 1e-6;
    double tol_identity = 1e-12;
    double min_order = 3.9;

    std::map<std::string, std::string> raw;  // every key as given, echoed into reports
};

RunConfig parse_config(std::istream& in);
RunConfig load_config(const std::string& path);
void apply_override(RunConfig& cfg, const std::string& key, const std::string& value);

struct ReportRow {
    std::string suite;
    std::string anchor;
    double re = 0.0, im = 0.0;
    double expected_re = 0.0, expected_im = 0.0;
    double deviation = 0.0;
    bool pass = false;
    bool expected_inequality = false;  // only reported, never gates the exit code
};

struct Report {
    std::string command;
    std::uint64_t seed = 0;
    std::map<std::string, std::string> config;
    std::vector<ReportRow> rows;

    void sort_rows();
    bool all_pass() const;
    std::size_t failures() const;
};

void write_csv(std::ostream& os, const Report& r);
void write_json(std::ostream& os, const Report& r);

// Deterministic uniform draws: the raw mt19937_64 stream is fixed by the
// standard, distributions are done by hand.
class SeededRng {
public:
    explicit SeededRng(std::uint64_t seed) : eng_(seed) {}
    double uniform() { return double(eng_() >> 11) * 0x1.0p-53; }
    double uniform(double a, double b) { return a + (b - a) * uniform(); }
    int integer(int lo, int hi) { return lo + int(uniform() * (hi - lo + 1)); }

private:
    std::mt19937_64 eng_;
};

// harmonic chi with |grad chi| of order one over a disc of the given radius
HarmonicGauge random_harmonic_gauge(SeededRng& rng, int degree, double radius);

// runs fn(i) for i in [0, count) on a small pool; results land by index
void parallel_for(std::size_t count, int workers, const std::function<void(std::size_t)>& fn);

Report run_table1(const RunConfig& cfg);
Report run_table2(const RunConfig& cfg);
Report run_gaugeclass(const RunConfig& cfg);
Report run_classical(const RunConfig& cfg);

}  // namespace landau
