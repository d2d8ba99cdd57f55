#include "landau/verification.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <mutex>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "landau/classical_dynamics.hpp"
#include "landau/fock_engine.hpp"
#include "landau/landau_states.hpp"
#include "landau/realspace_engine.hpp"

namespace landau {

namespace {

using cplx = std::complex<double>;

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

double to_double(const std::string& key, const std::string& v) {
    try {
        std::size_t pos = 0;
        double d = std::stod(v, &pos);
        if (pos != v.size()) throw std::invalid_argument(v);
        return d;
    } catch (const std::exception&) {
        throw ConfigError("config key '" + key + "': expected a number, got '" + v + "'");
    }
}

int to_int(const std::string& key, const std::string& v) {
    double d = to_double(key, v);
    if (d != std::floor(d) || std::abs(d) > 1e9) throw ConfigError("config key '" + key + "': expected an integer");
    return int(d);
}

std::vector<double> to_list(const std::string& key, const std::string& v) {
    std::vector<double> out;
    std::stringstream ss(v);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (!item.empty()) out.push_back(to_double(key, item));
    }
    if (out.empty()) throw ConfigError("config key '" + key + "': empty list");
    return out;
}

std::string fmt_num(double v) {
    std::ostringstream os;
    os << std::setprecision(6) << v;
    return os.str();
}

ReportRow row(const std::string& suite, const std::string& anchor, cplx value, cplx expected, double deviation,
              bool pass) {
    return {suite, anchor, value.real(), value.imag(), expected.real(), expected.imag(), deviation, pass, false};
}

ReportRow compare_abs(const std::string& suite, const std::string& anchor, cplx value, cplx expected, double tol) {
    double d = std::abs(value - expected);
    return row(suite, anchor, value, expected, d, d < tol);
}

ReportRow compare_rel(const std::string& suite, const std::string& anchor, cplx value, cplx expected, double tol) {
    double d = std::abs(value - expected) / std::max(1.0, std::abs(expected));
    return row(suite, anchor, value, expected, d, d < tol);
}

ReportRow inequality(const std::string& suite, const std::string& anchor, cplx value, cplx other, double margin,
                     double threshold) {
    ReportRow r = row(suite, anchor + " [expected-inequality]", value, other, margin, margin > threshold);
    r.expected_inequality = true;
    return r;
}

Report make_report(const RunConfig& cfg, const std::string& command) {
    Report r;
    r.command = command;
    r.seed = cfg.seed;
    r.config = cfg.raw;
    return r;
}

QuadratureGrid with_points(QuadratureGrid g, const RunConfig& cfg) {
    g.points_per_axis = cfg.grid_points;
    return g;
}

void append(std::vector<ReportRow>& dst, std::vector<ReportRow>&& src) {
    dst.insert(dst.end(), std::make_move_iterator(src.begin()), std::make_move_iterator(src.end()));
}

const std::vector<OperatorTag> kCovariant{OperatorTag::PMechX, OperatorTag::PConsX, OperatorTag::LMechZ,
                                          OperatorTag::LConsZ};

}  // namespace

// config ---------------------------------------------------------------------

void apply_override(RunConfig& c, const std::string& key, const std::string& v) {
    if (key == "eB") c.setup.eB = to_double(key, v);
    else if (key == "m_e") c.setup.m_e = to_double(key, v);
    else if (key == "seed") c.seed = std::uint64_t(to_double(key, v));
    else if (key == "workers") c.workers = to_int(key, v);
    else if (key == "table1_n_max") c.table1_n_max = to_int(key, v);
    else if (key == "kx_list") c.kx_list = to_list(key, v);
    else if (key == "sigma_list") c.sigma_list = to_list(key, v);
    else if (key == "tol_table1") c.tol_table1 = to_double(key, v);
    else if (key == "table2_n_max") c.table2_n_max = to_int(key, v);
    else if (key == "m_min") c.m_min = to_int(key, v);
    else if (key == "tol_fock") c.tol_fock = to_double(key, v);
    else if (key == "tol_realspace") c.tol_realspace = to_double(key, v);
    else if (key == "grid_points") c.grid_points = to_int(key, v);
    else if (key == "fd_step") c.fd_step = to_double(key, v);
    else if (key == "chi_samples") c.chi_samples = to_int(key, v);
    else if (key == "chi_degree") c.chi_degree = to_int(key, v);
    else if (key == "tol_residual") c.tol_residual = to_double(key, v);
    else if (key == "tol_overlap") c.tol_overlap = to_double(key, v);
    else if (key == "tol_reconstruction") c.tol_reconstruction = to_double(key, v);
    else if (key == "separation_factor") c.separation_factor = to_double(key, v);
    else if (key == "x0") c.initial.x = to_double(key, v);
    else if (key == "y0") c.initial.y = to_double(key, v);
    else if (key == "vx0") c.initial.vx = to_double(key, v);
    else if (key == "vy0") c.initial.vy = to_double(key, v);
    else if (key == "periods") c.periods = to_int(key, v);
    else if (key == "steps_per_period") c.steps_per_period = to_int(key, v);
    else if (key == "tol_drift") c.tol_drift = to_double(key, v);
    else if (key == "tol_identity") c.tol_identity = to_double(key, v);
    else if (key == "min_order") c.min_order = to_double(key, v);
    else throw ConfigError("unknown config key '" + key + "'");
    c.raw[key] = v;
    try {
        c.setup.validate();
    } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
    }
    if (c.grid_points < 8) throw ConfigError("grid_points must be at least 8");
    if (c.table1_n_max < 0 || c.table2_n_max < 0) throw ConfigError("n_max must be non-negative");
    if (c.m_min > 0) throw ConfigError("m_min must not be positive");
    if (c.periods < 1 || c.steps_per_period < 4) throw ConfigError("classical run needs periods >= 1, steps >= 4");
    for (double sg : c.sigma_list)
        if (!(sg > 0.0)) throw ConfigError("packet widths must be positive");
}

RunConfig parse_config(std::istream& in) {
    RunConfig c;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError("config line " + std::to_string(lineno) + ": expected key = value");
        apply_override(c, trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
    }
    return c;
}

RunConfig load_config(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw ConfigError("cannot open config file " + path);
    return parse_config(f);
}

// reports --------------------------------------------------------------------

void Report::sort_rows() {
    std::stable_sort(rows.begin(), rows.end(), [](const ReportRow& a, const ReportRow& b) {
        return a.suite != b.suite ? a.suite < b.suite : a.anchor < b.anchor;
    });
}

bool Report::all_pass() const { return failures() == 0; }

std::size_t Report::failures() const {
    return std::size_t(std::count_if(rows.begin(), rows.end(),
                                     [](const ReportRow& r) { return !r.expected_inequality && !r.pass; }));
}

namespace {

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char ch : s) q += ch == '"' ? std::string("\"\"") : std::string(1, ch);
    return q + "\"";
}

}  // namespace

void write_csv(std::ostream& os, const Report& r) {
    os << "# command=" << r.command << " seed=" << r.seed << '\n';
    for (const auto& [k, v] : r.config) os << "# " << k << '=' << v << '\n';
    os << "suite,anchor,re,im,expected_re,expected_im,deviation,pass\n";
    os << std::setprecision(17);
    for (const auto& x : r.rows) {
        os << csv_field(x.suite) << ',' << csv_field(x.anchor) << ',' << x.re << ',' << x.im << ',' << x.expected_re
           << ',' << x.expected_im << ',' << x.deviation << ',' << (x.pass ? "true" : "false") << '\n';
    }
}

void write_json(std::ostream& os, const Report& r) {
    nlohmann::ordered_json j;
    j["command"] = r.command;
    j["seed"] = r.seed;
    j["config"] = r.config;
    j["rows"] = nlohmann::ordered_json::array();
    for (const auto& x : r.rows) {
        j["rows"].push_back({{"suite", x.suite},
                             {"anchor", x.anchor},
                             {"re", x.re},
                             {"im", x.im},
                             {"expected_re", x.expected_re},
                             {"expected_im", x.expected_im},
                             {"deviation", x.deviation},
                             {"pass", x.pass},
                             {"expected_inequality", x.expected_inequality}});
    }
    os << j.dump(2) << '\n';
}

HarmonicGauge random_harmonic_gauge(SeededRng& rng, int degree, double radius) {
    HarmonicGauge h;
    for (int k = 1; k <= degree; ++k) {
        const double scale = 1.0 / (k * std::pow(radius, k - 1));
        h.re.push_back(rng.uniform(-1.0, 1.0) * scale);
        h.im.push_back(rng.uniform(-1.0, 1.0) * scale);
    }
    h.xy_weight = rng.uniform(-0.5, 0.5);
    return h;
}

void parallel_for(std::size_t count, int workers, const std::function<void(std::size_t)>& fn) {
    if (count == 0) return;
    unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    std::size_t nthreads = workers > 0 ? std::size_t(workers) : hw;
    nthreads = std::min(nthreads, count);
    if (nthreads <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr err;
    std::mutex err_mu;
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < nthreads; ++t) {
        pool.emplace_back([&] {
            for (std::size_t i = next++; i < count; i = next++) {
                try {
                    fn(i);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(err_mu);
                    if (!err) err = std::current_exception();
                }
            }
        });
    }
    for (auto& th : pool) th.join();
    if (err) std::rethrow_exception(err);
}

// kx-basis packets -----------------------------------------------------------

Report run_table1(const RunConfig& cfg) {
    Report rep = make_report(cfg, "table1");
    const MagneticSetup& s = cfg.setup;
    struct Cell {
        PacketSpec p;
        BasisClass b;
    };
    std::vector<Cell> cells;
    for (int n = 0; n <= cfg.table1_n_max; ++n)
        for (double kx : cfg.kx_list)
            for (double sg : cfg.sigma_list)
                for (BasisClass b : {BasisClass::L1NM, BasisClass::SymNM}) cells.push_back({{n, kx, sg}, b});
    std::vector<std::vector<ReportRow>> out(cells.size());
    std::vector<OperatorKind> ops;
    for (auto t : table_operators()) ops.push_back(OperatorKind::of(t));
    parallel_for(cells.size(), cfg.workers, [&](std::size_t i) {
        const Cell& c = cells[i];
        const GaugeChoice g = basis_gauge(c.b);
        QuantumState st = QuantumState::packet_l1(s, c.p).in_gauge(g);
        SweepResult sw = matrix_sweep(s, {st}, ops, g, with_points(default_grid(st), cfg), {cfg.fd_step});
        const std::string cls = c.b == BasisClass::SymNM ? "Sym" : "L1";
        for (std::size_t o = 0; o < ops.size(); ++o) {
            const MatrixElementResult& r = sw.values[o][0][0];
            std::string anchor = "kx-packet/" + cls + "/" + ops[o].name() + "/n=" + std::to_string(c.p.n) +
                                 "/kx=" + fmt_num(c.p.kx_center) + "/sigma=" + fmt_num(c.p.sigma);
            out[i].push_back(compare_rel("table1", anchor, r.value,
                                         table1_closed_form(s, ops[o].tag, c.b, c.p), cfg.tol_table1));
        }
    });
    for (auto& v : out) append(rep.rows, std::move(v));
    rep.sort_rows();
    return rep;
}

// nm-basis table, both engines ------------------------------------------------

Report run_table2(const RunConfig& cfg) {
    Report rep = make_report(cfg, "table2");
    const MagneticSetup& s = cfg.setup;
    struct Cell {
        int n;
        BasisClass b;
    };
    std::vector<Cell> cells;
    for (int n = 0; n <= cfg.table2_n_max; ++n)
        for (BasisClass b : {BasisClass::SymNM, BasisClass::L1NM}) cells.push_back({n, b});
    std::vector<std::vector<ReportRow>> out(cells.size());
    std::vector<OperatorKind> ops;
    for (auto t : table_operators()) ops.push_back(OperatorKind::of(t));
    parallel_for(cells.size(), cfg.workers, [&](std::size_t i) {
        const int n = cells[i].n;
        const BasisClass b = cells[i].b;
        const GaugeChoice g = basis_gauge(b);
        std::vector<int> ms;
        for (int m = cfg.m_min; m <= n; ++m) ms.push_back(m);
        std::vector<QuantumState> states;
        for (int m : ms) states.push_back(b == BasisClass::SymNM ? QuantumState::sym_nm(s, n, m) : QuantumState::l1_nm(s, n, m));
        QuadratureGrid grid = with_points(default_grid(QuantumState::sym_nm(s, n, cfg.m_min)), cfg);
        SweepResult sw = matrix_sweep(s, states, ops, g, grid, {cfg.fd_step});
        const FockCutoff cut{n + 4, n - cfg.m_min + 4};
        for (std::size_t o = 0; o < ops.size(); ++o) {
            FockMatrix fm = assemble(build_operator(s, ops[o], b), cut);
            for (std::size_t a = 0; a < ms.size(); ++a) {
                for (std::size_t c = 0; c < ms.size(); ++c) {
                    const int mp = ms[a], m = ms[c];
                    std::string tail = "/" + basis_class_name(b) + "/" + ops[o].name() + "/n=" + std::to_string(n) +
                                       "/m'=" + std::to_string(mp) + "/m=" + std::to_string(m);
                    auto fv = fm.element(FockLabel::from_nm(n, mp), FockLabel::from_nm(n, m));
                    if (!fv) {
                        out[i].push_back(row("table2.fock", "nm" + tail + " truncation boundary", 0.0, 0.0, 1.0, false));
                        continue;
                    }
                    out[i].push_back(compare_abs("table2.fock", "nm" + tail, *fv,
                                                 table2_closed_form(s, ops[o].tag, b, n, mp, m), cfg.tol_fock));
                    out[i].push_back(compare_abs("table2.realspace", "nm" + tail, sw.values[o][a][c].value, *fv,
                                                 cfg.tol_realspace));
                }
            }
        }
    });
    for (auto& v : out) append(rep.rows, std::move(v));
    rep.sort_rows();
    return rep;
}

// gauge classes ---------------------------------------------------------------

Report run_gaugeclass(const RunConfig& cfg) {
    Report rep = make_report(cfg, "gaugeclass");
    const MagneticSetup& s = cfg.setup;
    const double l = s.magnetic_length();
    const FiniteDifference fd{cfg.fd_step};
    SeededRng rng(cfg.seed);
    std::vector<HarmonicGauge> chis;
    for (int i = 0; i < cfg.chi_samples; ++i) chis.push_back(random_harmonic_gauge(rng, cfg.chi_degree, 6.0 * l));

    std::vector<std::function<std::vector<ReportRow>()>> jobs;

    // potentials: curl everywhere equal to eB, divergence reported only
    jobs.push_back([&] {
        std::vector<ReportRow> rows;
        std::vector<Vec2> pts;
        SeededRng prng(cfg.seed + 1);
        for (int i = 0; i < 64; ++i) pts.push_back({prng.uniform(-8, 8) * l, prng.uniform(-8, 8) * l});
        std::vector<GaugeChoice> gs{GaugeChoice::symmetric(), GaugeChoice::landau1(), GaugeChoice::landau2()};
        for (const auto& c : chis) gs.push_back(GaugeChoice::symmetric().deformed(c));
        for (std::size_t k = 0; k < gs.size(); ++k) {
            CurlReport cr = curl_check(s, gs[k], pts);
            std::string name = gs[k].name() + (k >= 3 ? "#" + std::to_string(k - 3) : "");
            rows.push_back(row("gaugeclass.potential", "curl/" + name, cr.max_curl_deviation + s.eB, s.eB,
                               cr.max_curl_deviation, cr.max_curl_deviation < 1e-12 * std::max(1.0, s.eB)));
            ReportRow dv = row("gaugeclass.potential", "divergence/" + name + " [report-only]", cr.max_divergence, 0.0,
                               cr.max_divergence, true);
            rows.push_back(dv);
        }
        return rows;
    });

    // canonical operators are gauge-variant between the two nm classes
    jobs.push_back([&] {
        std::vector<ReportRow> rows;
        const int n = 2;
        QuadratureGrid grid = with_points(default_grid(QuantumState::sym_nm(s, n, -2)), cfg);
        auto elem = [&](BasisClass b, OperatorTag t, int mp, int m) {
            auto mk = [&](int mm) { return b == BasisClass::SymNM ? QuantumState::sym_nm(s, n, mm) : QuantumState::l1_nm(s, n, mm); };
            return matrix_element(s, mk(mp), OperatorKind::of(t), basis_gauge(b), mk(m), grid, fd);
        };
        auto pcs = elem(BasisClass::SymNM, OperatorTag::PCanX, 1, 0);
        auto pcl = elem(BasisClass::L1NM, OperatorTag::PCanX, 1, 0);
        rows.push_back(inequality("gaugeclass.variance", "p_can/n=2/m'=1/m=0 SymNM vs L1NM", pcs.value, pcl.value,
                                  std::abs(pcs.value - pcl.value),
                                  cfg.separation_factor * (pcs.error_estimate + pcl.error_estimate)));
        auto lcs = elem(BasisClass::SymNM, OperatorTag::LCanZ, 2, 0);
        auto lcl = elem(BasisClass::L1NM, OperatorTag::LCanZ, 2, 0);
        rows.push_back(inequality("gaugeclass.variance", "L_can/n=2/m'=2/m=0 SymNM vs L1NM", lcs.value, lcl.value,
                                  std::abs(lcs.value - lcl.value),
                                  cfg.separation_factor * (lcs.error_estimate + lcl.error_estimate)));
        return rows;
    });

    // covariance within the symmetric class under random harmonic chi
    for (std::size_t k = 0; k < chis.size(); ++k) {
        jobs.push_back([&, k] {
            std::vector<ReportRow> rows;
            const int n = 1;
            const GaugeChoice g = GaugeChoice::symmetric().deformed(chis[k]);
            std::vector<QuantumState> states;
            for (int m = -1; m <= n; ++m) states.push_back(QuantumState::sym_nm(s, n, m).deformed(chis[k]));
            std::vector<OperatorKind> ops;
            for (auto t : kCovariant) ops.push_back(OperatorKind::of(t));
            QuadratureGrid grid = with_points(default_grid(states.front()), cfg);
            SweepResult sw = matrix_sweep(s, states, ops, g, grid, fd);
            for (std::size_t o = 0; o < ops.size(); ++o)
                for (std::size_t a = 0; a < states.size(); ++a)
                    for (std::size_t c = 0; c < states.size(); ++c) {
                        const int mp = int(a) - 1, m = int(c) - 1;
                        std::string anchor = ops[o].name() + "/chi#" + std::to_string(k) + "/n=1/m'=" +
                                             std::to_string(mp) + "/m=" + std::to_string(m);
                        rows.push_back(compare_abs("gaugeclass.covariance", anchor, sw.values[o][a][c].value,
                                                   table2_closed_form(s, ops[o].tag, BasisClass::SymNM, n, mp, m),
                                                   cfg.tol_realspace));
                    }
            double res = eigen_residual(states[0], grid, fd);
            rows.push_back(compare_abs("gaugeclass.residual", "SymNM(n=1,m=-1)+chi#" + std::to_string(k), res, 0.0,
                                       cfg.tol_residual));
            return rows;
        });
    }

    // gcc coincidences, in several gauges
    jobs.push_back([&] {
        std::vector<ReportRow> rows;
        const OperatorKind gcc_l = gcc_build(OperatorTag::LConsZ, GaugeChoice::symmetric());
        const OperatorKind gcc_p = gcc_build(OperatorTag::PConsX, GaugeChoice::landau1());
        struct Family {
            std::string name;
            std::vector<QuantumState> states;
        };
        std::vector<Family> fams;
        const int n = 1;
        Family sym{"SymNM", {}}, l1{"L1NM", {}}, def{"SymNM+chi#0", {}}, l2{"inL2", {}};
        for (int m = -1; m <= n; ++m) {
            sym.states.push_back(QuantumState::sym_nm(s, n, m));
            l1.states.push_back(QuantumState::l1_nm(s, n, m));
            if (!chis.empty()) def.states.push_back(QuantumState::sym_nm(s, n, m).deformed(chis[0]));
            l2.states.push_back(QuantumState::sym_nm(s, n, m).in_gauge(GaugeChoice::landau2()));
        }
        fams.push_back(sym);
        fams.push_back(l1);
        if (!chis.empty()) fams.push_back(def);
        fams.push_back(l2);
        for (const auto& f : fams) {
            const GaugeChoice g = f.states.front().gauge();
            QuadratureGrid grid = with_points(default_grid(f.states.front()), cfg);
            std::vector<OperatorKind> ops{gcc_l, OperatorKind::of(OperatorTag::LConsZ), gcc_p,
                                          OperatorKind::of(OperatorTag::PConsX)};
            SweepResult sw = matrix_sweep(s, f.states, ops, g, grid, fd);
            for (std::size_t a = 0; a < f.states.size(); ++a)
                for (std::size_t c = 0; c < f.states.size(); ++c) {
                    std::string idx = "/" + f.name + "/m'=" + std::to_string(int(a) - 1) + "/m=" + std::to_string(int(c) - 1);
                    rows.push_back(compare_abs("gaugeclass.gcc", "L_gcc[Symmetric]=L_cons" + idx,
                                               sw.values[0][a][c].value, sw.values[1][a][c].value, cfg.tol_realspace));
                    rows.push_back(compare_abs("gaugeclass.gcc", "p_gcc[Landau1]=p_cons" + idx,
                                               sw.values[2][a][c].value, sw.values[3][a][c].value, cfg.tol_realspace));
                }
        }
        for (BasisClass b : {BasisClass::L1NM, BasisClass::SymNM}) {
            PacketSpec p{1, 0.7, 1.0};
            const GaugeChoice g = basis_gauge(b);
            auto a1 = packet_expectation(s, gcc_l, g, p, std::nullopt, fd);
            auto a2 = packet_expectation(s, OperatorKind::of(OperatorTag::LConsZ), g, p, std::nullopt, fd);
            auto b1 = packet_expectation(s, gcc_p, g, p, std::nullopt, fd);
            auto b2 = packet_expectation(s, OperatorKind::of(OperatorTag::PConsX), g, p, std::nullopt, fd);
            const std::string cls = b == BasisClass::SymNM ? "Sym" : "L1";
            rows.push_back(compare_abs("gaugeclass.gcc", "L_gcc[Symmetric]=L_cons/packet-" + cls, a1.value, a2.value, cfg.tol_realspace));
            rows.push_back(compare_abs("gaugeclass.gcc", "p_gcc[Landau1]=p_cons/packet-" + cls, b1.value, b2.value, cfg.tol_realspace));
        }
        // the same identities hold as ladder polynomials
        for (BasisClass b : {BasisClass::SymNM, BasisClass::L1NM}) {
            const FockCutoff cut{8, 8};
            FockMatrix d1 = assemble(build_operator(s, gcc_l, b), cut) - assemble(build_operator(s, OperatorKind::of(OperatorTag::LConsZ), b), cut);
            FockMatrix d2 = assemble(build_operator(s, gcc_p, b), cut) - assemble(build_operator(s, OperatorKind::of(OperatorTag::PConsX), b), cut);
            double w1 = 0.0, w2 = 0.0;
            for (int j = 0; j < cut.dimension(); ++j) {
                if (!d1.valid(cut.label(j))) continue;
                for (FockMatrix::Sparse::InnerIterator it(d1.matrix(), j); it; ++it) w1 = std::max(w1, std::abs(it.value()));
                for (FockMatrix::Sparse::InnerIterator it(d2.matrix(), j); it; ++it) w2 = std::max(w2, std::abs(it.value()));
            }
            rows.push_back(compare_abs("gaugeclass.gcc", "fock/L_gcc[Symmetric]-L_cons/" + basis_class_name(b), w1, 0.0, cfg.tol_fock));
            rows.push_back(compare_abs("gaugeclass.gcc", "fock/p_gcc[Landau1]-p_cons/" + basis_class_name(b), w2, 0.0, cfg.tol_fock));
        }
        return rows;
    });

    // eigen-residuals of the four families
    jobs.push_back([&] {
        std::vector<ReportRow> rows;
        std::vector<QuantumState> sts{QuantumState::sym_nm(s, 2, -1), QuantumState::l1_nm(s, 2, 1),
                                      QuantumState::l1_nkx(s, 1, 0.5), QuantumState::sym_nkx(s, 1, -0.7)};
        for (const auto& st : sts) {
            QuadratureGrid grid = with_points(default_grid(st), cfg);
            rows.push_back(compare_abs("gaugeclass.residual", st.label(), eigen_residual(st, grid, fd), 0.0, cfg.tol_residual));
        }
        return rows;
    });

    // strip/disk overlap kernel and its inverse
    jobs.push_back([&] {
        std::vector<ReportRow> rows;
        for (int n = 0; n <= 4; ++n)
            for (int m = -4; m <= n; ++m)
                for (double kx : {-2.0, -1.0, 0.0, 1.0, 2.0}) {
                    MatrixElementResult q = strip_disk_overlap(s, n, kx, m, with_points(default_grid(QuantumState::sym_nm(s, n, m)), cfg));
                    cplx amp = overlap_amplitude(s, n, kx, m);
                    std::string anchor = "n=" + std::to_string(n) + "/m=" + std::to_string(m) + "/kx=" + fmt_num(kx);
                    rows.push_back(compare_abs("gaugeclass.overlap", "amplitude/" + anchor, q.value, amp, cfg.tol_overlap));
                    // i^{-m} q should be the real kernel
                    cplx stripped = q.value * std::polar(1.0, -0.5 * M_PI * m);
                    rows.push_back(compare_abs("gaugeclass.overlap", "phase-stripped-imag/" + anchor,
                                               cplx(0.0, stripped.imag()), 0.0, 1e-10));
                }
        for (int n = 0; n <= 2; ++n)
            for (double kx : {-1.0, 0.8})
                for (Vec2 p : {Vec2{0.3, -0.2}, Vec2{1.3, -0.4}, Vec2{-2.0, 1.5}, Vec2{0.0, 2.5}}) {
                    Reconstruction rc = reconstruct_l1_nkx(s, n, kx, p.x * l, p.y * l);
                    cplx ex = psi_l1_nkx(s, n, kx, p.x * l, p.y * l);
                    std::string anchor = "reconstruct/n=" + std::to_string(n) + "/kx=" + fmt_num(kx) + "/x=" +
                                         fmt_num(p.x) + "/y=" + fmt_num(p.y) + "/terms=" + std::to_string(rc.terms);
                    rows.push_back(compare_abs("gaugeclass.overlap", anchor, rc.value, ex, cfg.tol_reconstruction));
                }
        return rows;
    });

    // conserved OAM separates the classes; mechanical OAM does not
    jobs.push_back([&] {
        std::vector<ReportRow> rows;
        for (int n = 0; n <= cfg.table1_n_max; ++n)
            for (double kx : cfg.kx_list)
                for (double sg : cfg.sigma_list) {
                    PacketSpec p{n, kx, sg};
                    std::string base = "/n=" + std::to_string(n) + "/kx=" + fmt_num(kx) + "/sigma=" + fmt_num(sg);
                    for (BasisClass b : {BasisClass::L1NM, BasisClass::SymNM}) {
                        const GaugeChoice g = basis_gauge(b);
                        QuantumState st = QuantumState::packet_l1(s, p).in_gauge(g);
                        SweepResult sw = matrix_sweep(s, {st}, {OperatorKind::of(OperatorTag::LConsZ), OperatorKind::of(OperatorTag::LMechZ)},
                                                      g, with_points(default_grid(st), cfg), fd);
                        const MatrixElementResult& lc = sw.values[0][0][0];
                        const MatrixElementResult& lm = sw.values[1][0][0];
                        const double v = lc.value.real();
                        const double nearest = std::min(double(n), std::round(v));
                        const double margin = std::abs(v - nearest);
                        const std::string cls = b == BasisClass::SymNM ? "Sym" : "L1";
                        rows.push_back(inequality("gaugeclass.separation", "L_cons packet-" + cls + " vs integer m" + base,
                                                  lc.value, nearest, margin, cfg.separation_factor * lc.error_estimate));
                        rows.push_back(compare_rel("gaugeclass.separation", "L_mech packet-" + cls + base, lm.value,
                                                   2.0 * n + 1.0, cfg.tol_table1));
                    }
                }
        return rows;
    });

    std::vector<std::vector<ReportRow>> out(jobs.size());
    parallel_for(jobs.size(), cfg.workers, [&](std::size_t i) { out[i] = jobs[i](); });
    for (auto& v : out) append(rep.rows, std::move(v));
    rep.sort_rows();
    return rep;
}

// classical orbit -------------------------------------------------------------

Report run_classical(const RunConfig& cfg) {
    Report rep = make_report(cfg, "classical");
    const MagneticSetup& s = cfg.setup;
    const double w = s.cyclotron();
    const double period = 2.0 * M_PI / w;
    const double dt = period / cfg.steps_per_period;
    auto traj = integrate(s, cfg.initial, dt, cfg.periods * cfg.steps_per_period);
    ConservedSeries cs = conserved_series(s, traj);
    const std::string tag = "/periods=" + std::to_string(cfg.periods) + "/steps=" + std::to_string(cfg.steps_per_period);
    const ConservedSample& c0 = cs.samples.front();
    const ConservedSample& c1 = cs.samples.back();
    rep.rows.push_back(row("classical.conserved", "p_cons_x drift" + tag, c1.p_cons_x, c0.p_cons_x, cs.drift_p_cons_x,
                           cs.drift_p_cons_x < cfg.tol_drift));
    rep.rows.push_back(row("classical.conserved", "p_cons_y drift" + tag, c1.p_cons_y, c0.p_cons_y, cs.drift_p_cons_y,
                           cs.drift_p_cons_y < cfg.tol_drift));
    rep.rows.push_back(row("classical.conserved", "L_cons drift" + tag, c1.l_cons, c0.l_cons, cs.drift_l_cons,
                           cs.drift_l_cons < cfg.tol_drift));
    rep.rows.push_back(row("classical.conserved", "guiding centre drift" + tag, cplx(c1.center_x, c1.center_y),
                           cplx(c0.center_x, c0.center_y), cs.drift_center, cs.drift_center < cfg.tol_drift));
    // conserved momenta are eB times the guiding centre
    rep.rows.push_back(compare_abs("classical.conserved", "p_cons = eB (Yc, -Xc)", cplx(c0.p_cons_x, c0.p_cons_y),
                                   cplx(s.eB * c0.center_y, -s.eB * c0.center_x), cfg.tol_identity));

    LagrangianCheck lc = lagrangian_identities(s, traj);
    const std::string n_s = "/samples=" + std::to_string(lc.samples) + "/skipped=" + std::to_string(lc.skipped);
    rep.rows.push_back(compare_abs("classical.lagrangian", "symmetric p_phi = L_cons" + n_s, lc.sym_p_phi, 0.0, cfg.tol_identity));
    rep.rows.push_back(compare_abs("classical.lagrangian", "symmetric p_x + eB y/2 = p_cons_x" + n_s, lc.sym_p_x, 0.0, cfg.tol_identity));
    rep.rows.push_back(compare_abs("classical.lagrangian", "landau1 p_x = p_cons_x" + n_s, lc.l1_p_x, 0.0, cfg.tol_identity));
    rep.rows.push_back(compare_abs("classical.lagrangian", "landau1 p_phi - eB r^2 cos(2phi)/2 = L_cons" + n_s, lc.l1_p_phi, 0.0,
                                   cfg.tol_identity));

    // analytic orbit from rest at the origin
    {
        const double v0 = 1.0;
        auto orbit = integrate(s, {0.0, 0.0, 0.0, v0, 0.0}, dt, cfg.steps_per_period);
        double worst = 0.0;
        for (const auto& st : orbit) {
            const double ex = v0 / w * std::sin(w * st.t), ey = v0 / w * (1.0 - std::cos(w * st.t));
            worst = std::max(worst, std::hypot(st.x - ex, st.y - ey));
        }
        rep.rows.push_back(compare_abs("classical.orbit", "circle x=sin(wt)/w, y=(1-cos(wt))/w, one period", worst, 0.0,
                                       cfg.tol_drift));
    }
    // convergence order from one period at two step sizes
    {
        auto err_at = [&](int steps) {
            auto tr = integrate(s, cfg.initial, period / steps, steps);
            const auto& e = tr.back();
            return std::hypot(std::hypot(e.x - cfg.initial.x, e.y - cfg.initial.y),
                              std::hypot(e.vx - cfg.initial.vx, e.vy - cfg.initial.vy) / w);
        };
        const double e1 = err_at(50), e2 = err_at(100);
        const double order = std::log2(e1 / e2);
        rep.rows.push_back(row("classical.order", "RK4 order from 50/100 steps per period", order, 4.0,
                               std::abs(order - 4.0), order >= cfg.min_order));
    }
    rep.sort_rows();
    return rep;
}

}  // namespace landau
