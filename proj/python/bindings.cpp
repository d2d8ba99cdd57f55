#include <pybind11/complex.h>
#include <pybind11/functional.h>
#include <pybind11/numpy.h>
#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "landau/classical_dynamics.hpp"
#include "landau/fock_engine.hpp"
#include "landau/gauge_fields.hpp"
#include "landau/landau_states.hpp"
#include "landau/realspace_engine.hpp"
#include "landau/special_functions.hpp"
#include "landau/verification.hpp"

namespace py = pybind11;
using namespace pybind11::literals;
using namespace landau;

namespace {

py::list rows_to_list(const Report& r) {
    py::list out;
    for (const auto& x : r.rows)
        out.append(py::dict("suite"_a = x.suite, "anchor"_a = x.anchor, "value"_a = Amplitude(x.re, x.im),
                            "expected"_a = Amplitude(x.expected_re, x.expected_im), "deviation"_a = x.deviation,
                            "passed"_a = x.pass, "expected_inequality"_a = x.expected_inequality));
    return out;
}

RunConfig config_from(const py::dict& d) {
    RunConfig c;
    for (auto [k, v] : d) {
        std::string val;
        if (py::isinstance<py::list>(v) || py::isinstance<py::tuple>(v)) {
            for (auto item : v) val += (val.empty() ? "" : ",") + py::str(item).cast<std::string>();
        } else {
            val = py::str(v).cast<std::string>();
        }
        apply_override(c, py::str(k).cast<std::string>(), val);
    }
    return c;
}

py::array_t<double> trajectory_array(const std::vector<TrajectoryState>& t) {
    py::array_t<double> a({py::ssize_t(t.size()), py::ssize_t(5)});
    auto v = a.mutable_unchecked<2>();
    for (std::size_t i = 0; i < t.size(); ++i) {
        v(i, 0) = t[i].t;
        v(i, 1) = t[i].x;
        v(i, 2) = t[i].y;
        v(i, 3) = t[i].vx;
        v(i, 4) = t[i].vy;
    }
    return a;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Landau levels in several gauges: states, matrix elements, Fock algebra, cyclotron orbits";

    py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);
    py::register_exception<ConfigurationError>(m, "ConfigurationError", PyExc_ValueError);
    py::register_exception<DeltaNormalizedError>(m, "DeltaNormalizedError", PyExc_ValueError);

    py::class_<MagneticSetup>(m, "MagneticSetup")
        .def(py::init([](double eB, double m_e) {
                 MagneticSetup s{eB, m_e};
                 s.validate();
                 return s;
             }),
             "eB"_a = 1.0, "m_e"_a = 1.0)
        .def_readonly("eB", &MagneticSetup::eB)
        .def_readonly("m_e", &MagneticSetup::m_e)
        .def_property_readonly("magnetic_length", &MagneticSetup::magnetic_length)
        .def_property_readonly("larmor", &MagneticSetup::larmor)
        .def_property_readonly("cyclotron", &MagneticSetup::cyclotron)
        .def("level_energy", &MagneticSetup::level_energy, "n"_a)
        .def("__repr__", [](const MagneticSetup& s) {
            return "MagneticSetup(eB=" + std::to_string(s.eB) + ", m_e=" + std::to_string(s.m_e) + ")";
        });

    // special functions
    m.def("hermite", py::vectorize(&hermite), "n"_a, "xi"_a);
    m.def("hermite_function", py::vectorize(&hermite_function), "n"_a, "xi"_a);
    m.def("assoc_laguerre", py::vectorize(&assoc_laguerre), "k"_a, "alpha"_a, "xi"_a);
    m.def("norm_constants", [](const MagneticSetup& s, int n, int mm) {
        auto c = norm_constants(s, n, mm);
        return py::dict("n_n"_a = c.n_n, "n_nm"_a = c.n_nm, "c_nm"_a = c.c_nm);
    }, "setup"_a, "n"_a, "m"_a);

    // gauges
    py::enum_<StandardGauge>(m, "StandardGauge")
        .value("Symmetric", StandardGauge::Symmetric)
        .value("Landau1", StandardGauge::Landau1)
        .value("Landau2", StandardGauge::Landau2);

    py::class_<HarmonicGauge>(m, "HarmonicGauge")
        .def(py::init([](std::vector<double> re, std::vector<double> im, double w) {
                 HarmonicGauge h;
                 h.re = std::move(re);
                 h.im = std::move(im);
                 h.xy_weight = w;
                 return h;
             }),
             "re"_a = std::vector<double>{}, "im"_a = std::vector<double>{}, "xy_weight"_a = 0.0)
        .def_static("xy", &HarmonicGauge::xy, "weight"_a)
        .def_readwrite("re", &HarmonicGauge::re)
        .def_readwrite("im", &HarmonicGauge::im)
        .def_readwrite("xy_weight", &HarmonicGauge::xy_weight)
        .def("degree", &HarmonicGauge::degree)
        .def("is_zero", &HarmonicGauge::is_zero)
        .def("value", &HarmonicGauge::value, "setup"_a, "x"_a, "y"_a)
        .def("gradient", [](const HarmonicGauge& h, const MagneticSetup& s, double x, double y) {
            Vec2 g = h.gradient(s, x, y);
            return py::make_tuple(g.x, g.y);
        })
        .def(py::self + py::self)
        .def(-py::self)
        .def(py::self == py::self);

    py::class_<GaugeChoice>(m, "GaugeChoice")
        .def_static("symmetric", &GaugeChoice::symmetric)
        .def_static("landau1", &GaugeChoice::landau1)
        .def_static("landau2", &GaugeChoice::landau2)
        .def("deformed", &GaugeChoice::deformed, "chi"_a)
        .def_readonly("base", &GaugeChoice::base)
        .def_readonly("chi", &GaugeChoice::chi)
        .def("is_standard", &GaugeChoice::is_standard)
        .def_property_readonly("name", &GaugeChoice::name)
        .def(py::self == py::self)
        .def("__repr__", [](const GaugeChoice& g) { return "GaugeChoice(" + g.name() + ")"; });

    m.def("potential", [](const MagneticSetup& s, const GaugeChoice& g, double x, double y) {
        Vec2 a = potential(s, g, x, y);
        return py::make_tuple(a.x, a.y);
    }, "setup"_a, "gauge"_a, "x"_a, "y"_a);
    m.def("curl_check", [](const MagneticSetup& s, const GaugeChoice& g, const std::vector<std::pair<double, double>>& pts) {
        std::vector<Vec2> v;
        for (auto [x, y] : pts) v.push_back({x, y});
        CurlReport r = curl_check(s, g, v);
        return py::make_tuple(r.max_curl_deviation, r.max_divergence);
    }, "setup"_a, "gauge"_a, "points"_a);
    m.def("gauge_phase", py::vectorize([](MagneticSetup s, HarmonicGauge chi, double x, double y) {
        return gauge_phase(s, chi, x, y);
    }), "setup"_a, "chi"_a, "x"_a, "y"_a);
    m.def("relative_gauge", &relative_gauge, "source"_a, "target"_a);

    // states
    py::enum_<Family>(m, "Family")
        .value("SymNM", Family::SymNM)
        .value("SymNKx", Family::SymNKx)
        .value("L1NM", Family::L1NM)
        .value("L1NKx", Family::L1NKx)
        .value("PacketL1", Family::PacketL1)
        .value("PacketSym", Family::PacketSym);

    py::class_<PacketSpec>(m, "PacketSpec")
        .def(py::init([](int n, double kx, double sigma) { return PacketSpec{n, kx, sigma}; }), "n"_a,
             "kx_center"_a, "sigma"_a)
        .def_readwrite("n", &PacketSpec::n)
        .def_readwrite("kx_center", &PacketSpec::kx_center)
        .def_readwrite("sigma", &PacketSpec::sigma);

    m.def("psi_sym_nm", py::vectorize([](MagneticSetup s, int n, int mm, double x, double y) {
        return psi_sym_nm(s, n, mm, x, y);
    }), "setup"_a, "n"_a, "m"_a, "x"_a, "y"_a);
    m.def("psi_l1_nm", py::vectorize([](MagneticSetup s, int n, int mm, double x, double y) {
        return psi_l1_nm(s, n, mm, x, y);
    }), "setup"_a, "n"_a, "m"_a, "x"_a, "y"_a);
    m.def("psi_l1_nkx", py::vectorize([](MagneticSetup s, int n, double kx, double x, double y) {
        return psi_l1_nkx(s, n, kx, x, y);
    }), "setup"_a, "n"_a, "kx"_a, "x"_a, "y"_a);
    m.def("psi_sym_nkx", py::vectorize([](MagneticSetup s, int n, double kx, double x, double y) {
        return psi_sym_nkx(s, n, kx, x, y);
    }), "setup"_a, "n"_a, "kx"_a, "x"_a, "y"_a);
    m.def("psi_packet", py::vectorize([](MagneticSetup s, PacketSpec p, double x, double y) {
        return psi_packet(s, p, x, y);
    }), "setup"_a, "packet"_a, "x"_a, "y"_a);
    m.def("overlap_kernel", &overlap_kernel, "setup"_a, "n"_a, "kx"_a, "m"_a);
    m.def("overlap_amplitude", &overlap_amplitude, "setup"_a, "n"_a, "kx"_a, "m"_a);

    py::class_<QuantumState>(m, "QuantumState")
        .def_static("sym_nm", &QuantumState::sym_nm, "setup"_a, "n"_a, "m"_a)
        .def_static("sym_nkx", &QuantumState::sym_nkx, "setup"_a, "n"_a, "kx"_a)
        .def_static("l1_nm", &QuantumState::l1_nm, "setup"_a, "n"_a, "m"_a)
        .def_static("l1_nkx", &QuantumState::l1_nkx, "setup"_a, "n"_a, "kx"_a)
        .def_static("packet_l1", &QuantumState::packet_l1, "setup"_a, "packet"_a)
        .def_static("packet_sym", &QuantumState::packet_sym, "setup"_a, "packet"_a)
        .def("deformed", &QuantumState::deformed, "chi"_a)
        .def("in_gauge", &QuantumState::in_gauge, "gauge"_a)
        .def("__call__", py::vectorize([](QuantumState st, double x, double y) { return st(x, y); }),
             "x"_a, "y"_a)
        .def_property_readonly("family", &QuantumState::family)
        .def_property_readonly("n", &QuantumState::n)
        .def_property_readonly("m", &QuantumState::m)
        .def_property_readonly("kx", &QuantumState::kx)
        .def_property_readonly("sigma", &QuantumState::sigma)
        .def_property_readonly("gauge", &QuantumState::gauge)
        .def_property_readonly("normalizable", &QuantumState::normalizable)
        .def_property_readonly("label", &QuantumState::label)
        .def("__repr__", &QuantumState::label);

    // real-space engine
    py::enum_<OperatorTag>(m, "Operator")
        .value("PCanX", OperatorTag::PCanX)
        .value("PMechX", OperatorTag::PMechX)
        .value("PConsX", OperatorTag::PConsX)
        .value("LCanZ", OperatorTag::LCanZ)
        .value("LMechZ", OperatorTag::LMechZ)
        .value("LConsZ", OperatorTag::LConsZ)
        .value("Hamiltonian", OperatorTag::Hamiltonian)
        .value("GccMomentum", OperatorTag::GccMomentum)
        .value("GccOam", OperatorTag::GccOam);

    py::class_<OperatorKind>(m, "OperatorKind")
        .def(py::init(&OperatorKind::of), "tag"_a)
        .def_readonly("tag", &OperatorKind::tag)
        .def_readonly("physical", &OperatorKind::physical)
        .def_property_readonly("name", &OperatorKind::name);
    py::implicitly_convertible<OperatorTag, OperatorKind>();
    m.def("gcc_build", &gcc_build, "family"_a, "physical"_a);

    py::class_<QuadratureGrid>(m, "QuadratureGrid")
        .def(py::init([](double cx, double cy, double hx, double hy, int pts, double refine) {
                 return QuadratureGrid{cx, cy, hx, hy, pts, refine};
             }),
             "center_x"_a = 0.0, "center_y"_a = 0.0, "half_width_x"_a = 8.0, "half_width_y"_a = 8.0,
             "points_per_axis"_a = 160, "refine"_a = 1.5)
        .def_readwrite("center_x", &QuadratureGrid::center_x)
        .def_readwrite("center_y", &QuadratureGrid::center_y)
        .def_readwrite("half_width_x", &QuadratureGrid::half_width_x)
        .def_readwrite("half_width_y", &QuadratureGrid::half_width_y)
        .def_readwrite("points_per_axis", &QuadratureGrid::points_per_axis);
    m.def("default_grid", py::overload_cast<const QuantumState&>(&default_grid), "state"_a);

    py::class_<MatrixElementResult>(m, "MatrixElementResult")
        .def_readonly("value", &MatrixElementResult::value)
        .def_readonly("error_estimate", &MatrixElementResult::error_estimate)
        .def_readonly("grid_used", &MatrixElementResult::grid_used)
        .def("__repr__", [](const MatrixElementResult& r) {
            return "MatrixElementResult(" + py::repr(py::cast(r.value)).cast<std::string>() +
                   ", error_estimate=" + std::to_string(r.error_estimate) + ")";
        });

    m.def("apply", [](const MagneticSetup& s, const OperatorKind& op, std::optional<GaugeChoice> g, const QuantumState& st,
                      double x, double y, double step) {
        Field f = apply(s, op, g, [st](double a, double b) { return st(a, b); }, {step});
        return f(x, y);
    }, "setup"_a, "op"_a, "gauge"_a, "state"_a, "x"_a, "y"_a, "step"_a = 1e-3);
    m.def("matrix_element", [](const MagneticSetup& s, const QuantumState& bra, const OperatorKind& op,
                               std::optional<GaugeChoice> g, const QuantumState& ket, std::optional<QuadratureGrid> grid) {
        py::gil_scoped_release nogil;
        return matrix_element(s, bra, op, g, ket, grid);
    }, "setup"_a, "bra"_a, "op"_a, "gauge"_a, "ket"_a, "grid"_a = py::none());
    m.def("inner_product", [](const QuantumState& a, const QuantumState& b, std::optional<QuadratureGrid> grid) {
        py::gil_scoped_release nogil;
        return inner_product(a, b, grid);
    }, "bra"_a, "ket"_a, "grid"_a = py::none());
    m.def("packet_expectation", [](const MagneticSetup& s, const OperatorKind& op, const GaugeChoice& g,
                                   const PacketSpec& p) {
        py::gil_scoped_release nogil;
        return packet_expectation(s, op, g, p);
    }, "setup"_a, "op"_a, "gauge"_a, "packet"_a);
    m.def("strip_disk_overlap", [](const MagneticSetup& s, int n, double kx, int mm) {
        py::gil_scoped_release nogil;
        return strip_disk_overlap(s, n, kx, mm);
    }, "setup"_a, "n"_a, "kx"_a, "m"_a);
    m.def("eigen_residual", [](const QuantumState& st) {
        py::gil_scoped_release nogil;
        return eigen_residual(st);
    }, "state"_a);

    // Fock engine
    py::enum_<BasisClass>(m, "BasisClass").value("SymNM", BasisClass::SymNM).value("L1NM", BasisClass::L1NM);
    m.def("table2_entry", &table2_entry, "setup"_a, "op"_a, "basis"_a, "n"_a, "m_prime"_a, "m"_a,
          "extra_cutoff"_a = 4);
    m.def("table2_closed_form", &table2_closed_form, "setup"_a, "op"_a, "basis"_a, "n"_a, "m_prime"_a, "m"_a);
    m.def("table1_closed_form", &table1_closed_form, "setup"_a, "op"_a, "basis"_a, "packet"_a);
    m.def("operator_matrix", [](const MagneticSetup& s, const OperatorKind& op, BasisClass b, int na, int nb) {
        FockCutoff c{na, nb};
        FockMatrix f = assemble(build_operator(s, op, b), c);
        py::array_t<std::complex<double>> a({c.dimension(), c.dimension()});
        auto v = a.mutable_unchecked<2>();
        for (int i = 0; i < c.dimension(); ++i)
            for (int j = 0; j < c.dimension(); ++j) v(i, j) = 0.0;
        for (int k = 0; k < f.matrix().outerSize(); ++k)
            for (FockMatrix::Sparse::InnerIterator it(f.matrix(), k); it; ++it) v(it.row(), it.col()) = it.value();
        py::list valid;
        for (int j = 0; j < c.dimension(); ++j) valid.append(f.valid(c.label(j)));
        return py::make_tuple(a, valid);
    }, "setup"_a, "op"_a, "basis"_a, "n_a_max"_a, "n_b_max"_a);
    m.def("commutator_suite", [](const MagneticSetup& s, int na, int nb) {
        py::list out;
        for (const auto& c : commutator_suite(s, {na, nb}))
            out.append(py::dict("name"_a = c.name, "max_deviation"_a = c.max_deviation,
                                "expect_nonzero"_a = c.expect_nonzero, "valid_columns"_a = c.valid_columns));
        return out;
    }, "setup"_a, "n_a_max"_a, "n_b_max"_a);

    // classical dynamics
    m.def("integrate", [](const MagneticSetup& s, std::array<double, 4> init, double dt, int steps) {
        return trajectory_array(integrate(s, {0.0, init[0], init[1], init[2], init[3]}, dt, steps));
    }, "setup"_a, "initial"_a, "dt"_a, "steps"_a, "columns t, x, y, vx, vy; initial is (x, y, vx, vy)");
    m.def("conserved_drift", [](const MagneticSetup& s, std::array<double, 4> init, double dt, int steps) {
        auto cs = conserved_series(s, integrate(s, {0.0, init[0], init[1], init[2], init[3]}, dt, steps));
        return py::dict("p_cons_x"_a = cs.drift_p_cons_x, "p_cons_y"_a = cs.drift_p_cons_y,
                        "l_cons"_a = cs.drift_l_cons, "center"_a = cs.drift_center);
    }, "setup"_a, "initial"_a, "dt"_a, "steps"_a);
    m.def("lagrangian_identities", [](const MagneticSetup& s, std::array<double, 4> init, double dt, int steps) {
        auto lc = lagrangian_identities(s, integrate(s, {0.0, init[0], init[1], init[2], init[3]}, dt, steps));
        return py::dict("sym_p_phi"_a = lc.sym_p_phi, "sym_p_x"_a = lc.sym_p_x, "l1_p_x"_a = lc.l1_p_x,
                        "l1_p_phi"_a = lc.l1_p_phi, "samples"_a = lc.samples, "skipped"_a = lc.skipped);
    }, "setup"_a, "initial"_a, "dt"_a, "steps"_a);

    // suites; config keys as in the CLI config file
    auto suite = [&m](const char* name, Report (*fn)(const RunConfig&)) {
        m.def(name, [fn](const py::dict& cfg) {
            RunConfig c = config_from(cfg);
            Report r;
            {
                py::gil_scoped_release nogil;
                r = fn(c);
            }
            return rows_to_list(r);
        }, "config"_a = py::dict());
    };
    suite("run_table1", &run_table1);
    suite("run_table2", &run_table2);
    suite("run_gaugeclass", &run_gaugeclass);
    suite("run_classical", &run_classical);
}
