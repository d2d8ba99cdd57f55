// landau_verify: regenerate the operator tables and orbit checks as reports

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "landau/classical_dynamics.hpp"
#include "landau/verification.hpp"

namespace fs = std::filesystem;
using namespace landau;

namespace {

int write_report(const Report& rep, const std::string& out_dir, const std::string& format) {
    std::string path = (fs::path(out_dir) / (rep.command + "." + format)).string();
    std::ofstream f(path);
    if (!f) {
        std::cerr << "cannot write " << path << '\n';
        return 3;
    }
    if (format == "json") write_json(f, rep);
    else write_csv(f, rep);
    std::size_t ineq = 0, ineq_fail = 0;
    for (const auto& r : rep.rows)
        if (r.expected_inequality) {
            ++ineq;
            ineq_fail += !r.pass;
        }
    std::cout << rep.command << ": " << rep.rows.size() << " rows, " << rep.failures() << " failing";
    if (ineq) std::cout << ", " << ineq << " inequality rows (" << ineq_fail << " not separated)";
    std::cout << " -> " << path << '\n';
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Landau-level gauge-class verification"};
    app.require_subcommand(1);

    std::string config_path, out_dir = ".", format = "csv";
    std::uint64_t seed = 0;
    int n_max = -1;
    double sigma = 0.0;
    bool have_seed = false;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--config", config_path, "key = value configuration file");
        sub->add_option("--out", out_dir, "output directory");
        sub->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
        sub->add_option("--seed", seed, "seed for the random gauge functions")->each([&](const std::string&) { have_seed = true; });
        sub->add_option("--n-max", n_max, "largest Landau level in the table sweeps");
        sub->add_option("--sigma", sigma, "single packet width in kx");
    };
    std::vector<std::pair<std::string, std::string>> cmds{
        {"table1", "kx-packet expectation values in both gauge classes"},
        {"table2", "nm-basis matrix elements, Fock and real-space engines"},
        {"gaugeclass", "gauge variance, covariance, gcc coincidences, overlap kernel"},
        {"classical", "cyclotron orbit, conserved quantities, Lagrangian momenta"},
        {"all", "every suite"}};
    std::vector<CLI::App*> subs;
    for (const auto& [name, help] : cmds) {
        subs.push_back(app.add_subcommand(name, help));
        add_common(subs.back());
    }

    CLI11_PARSE(app, argc, argv);

    RunConfig cfg;
    try {
        if (!config_path.empty()) cfg = load_config(config_path);
        if (have_seed) apply_override(cfg, "seed", std::to_string(seed));
        if (n_max >= 0) {
            apply_override(cfg, "table1_n_max", std::to_string(n_max));
            apply_override(cfg, "table2_n_max", std::to_string(n_max));
        }
        if (sigma != 0.0) {
            std::ostringstream os;
            os << std::setprecision(17) << sigma;
            apply_override(cfg, "sigma_list", os.str());
        }
    } catch (const ConfigError& e) {
        std::cerr << "configuration error: " << e.what() << '\n';
        return 2;
    }

    std::error_code ec;
    fs::create_directories(out_dir, ec);
    if (ec) {
        std::cerr << "cannot create " << out_dir << ": " << ec.message() << '\n';
        return 3;
    }

    std::string which;
    for (auto* s : subs)
        if (s->parsed()) which = s->get_name();

    bool ok = true;
    auto run = [&](const std::string& name) -> int {
        Report rep;
        if (name == "table1") rep = run_table1(cfg);
        else if (name == "table2") rep = run_table2(cfg);
        else if (name == "gaugeclass") rep = run_gaugeclass(cfg);
        else rep = run_classical(cfg);
        if (name == "classical") {
            const double period = 2.0 * M_PI / cfg.setup.cyclotron();
            auto traj = integrate(cfg.setup, cfg.initial, period / cfg.steps_per_period,
                                  cfg.periods * cfg.steps_per_period);
            std::ofstream f(fs::path(out_dir) / "classical_trajectory.csv");
            write_trajectory_csv(f, cfg.setup, traj);
        }
        ok = ok && rep.all_pass();
        return write_report(rep, out_dir, format);
    };

    try {
        if (which == "all") {
            for (const char* n : {"table1", "table2", "gaugeclass", "classical"})
                if (int rc = run(n)) return rc;
        } else if (int rc = run(which)) {
            return rc;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    }
    return ok ? 0 : 1;
}
