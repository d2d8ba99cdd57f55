#include "landau/realspace_engine.hpp"

#include <algorithm>
#include <cmath>

#include "landau/quadrature.hpp"

namespace landau {

namespace {

const Amplitude kI(0.0, 1.0);

// O psi = cdx (-i d_x psi) + cdy (-i d_y psi) + v psi
struct Form {
    double cdx = 0.0;
    double cdy = 0.0;
    double v = 0.0;
};

Form first_order_form(const MagneticSetup& s, const OperatorKind& op, const std::optional<GaugeChoice>& gauge,
                      double x, double y) {
    Vec2 a{};
    if (op.needs_gauge()) a = potential(s, *gauge, x, y);
    const double lmech = x * a.y - y * a.x;
    switch (op.tag) {
        case OperatorTag::PCanX: return {1.0, 0.0, 0.0};
        case OperatorTag::PMechX: return {1.0, 0.0, a.x};
        case OperatorTag::PConsX: return {1.0, 0.0, a.x + s.eB * y};
        case OperatorTag::LCanZ: return {-y, x, 0.0};
        case OperatorTag::LMechZ: return {-y, x, lmech};
        case OperatorTag::LConsZ: return {-y, x, lmech - 0.5 * s.eB * (x * x + y * y)};
        case OperatorTag::GccMomentum: {
            Vec2 p = potential(s, *op.physical, x, y);
            return {1.0, 0.0, a.x - p.x};
        }
        case OperatorTag::GccOam: {
            Vec2 p = potential(s, *op.physical, x, y);
            return {-y, x, lmech - (x * p.y - y * p.x)};
        }
        case OperatorTag::Hamiltonian: break;
    }
    throw std::logic_error("second-order operator has no first-order form");
}

template <class F>
Amplitude d_dx(const F& f, double x, double y, double h) {
    return (-f(x + 2 * h, y) + 8.0 * f(x + h, y) - 8.0 * f(x - h, y) + f(x - 2 * h, y)) / (12.0 * h);
}

template <class F>
Amplitude d_dy(const F& f, double x, double y, double h) {
    return (-f(x, y + 2 * h) + 8.0 * f(x, y + h) - 8.0 * f(x, y - h) + f(x, y - 2 * h)) / (12.0 * h);
}

void check_gauge(const OperatorKind& op, const std::optional<GaugeChoice>& gauge) {
    if ((op.needs_gauge() || op.tag == OperatorTag::Hamiltonian) && !gauge)
        throw ConfigurationError(op.name() + " requires a gauge");
    if ((op.tag == OperatorTag::GccMomentum || op.tag == OperatorTag::GccOam) && !op.physical)
        throw ConfigurationError(op.name() + " requires a physical potential");
}

void require_normalizable(const QuantumState& st) {
    if (!st.normalizable())
        throw DeltaNormalizedError("matrix element of the delta-normalized state " + st.label() +
                                   " is not a finite number; use a packet");
}

// mechanical momentum components used to assemble H
Field pi_x(const MagneticSetup& s, const GaugeChoice& g, Field psi, double h) {
    return [=](double x, double y) {
        return -kI * d_dx(psi, x, y, h) + potential(s, g, x, y).x * psi(x, y);
    };
}

Field pi_y(const MagneticSetup& s, const GaugeChoice& g, Field psi, double h) {
    return [=](double x, double y) {
        return -kI * d_dy(psi, x, y, h) + potential(s, g, x, y).y * psi(x, y);
    };
}

QuadratureGrid unite(const QuadratureGrid& a, const QuadratureGrid& b) {
    QuadratureGrid g = a;
    double x0 = std::min(a.center_x - a.half_width_x, b.center_x - b.half_width_x);
    double x1 = std::max(a.center_x + a.half_width_x, b.center_x + b.half_width_x);
    double y0 = std::min(a.center_y - a.half_width_y, b.center_y - b.half_width_y);
    double y1 = std::max(a.center_y + a.half_width_y, b.center_y + b.half_width_y);
    g.center_x = 0.5 * (x0 + x1);
    g.center_y = 0.5 * (y0 + y1);
    g.half_width_x = 0.5 * (x1 - x0);
    g.half_width_y = 0.5 * (y1 - y0);
    g.points_per_axis = std::max(a.points_per_axis, b.points_per_axis);
    return g;
}

// radius where a level with radial quantum weight ~xi^p e^{-xi} has decayed
// below double precision
double reach(double p, double l) { return std::sqrt(2.0 * (p + 12.0 * std::sqrt(p + 1.0) + 30.0)) * l; }

template <class F>
Amplitude integrate(const GridNodes& nd, const F& f) {
    Amplitude acc = 0.0;
    for (std::size_t i = 0; i < nd.x.size(); ++i) {
        Amplitude row = 0.0;
        for (std::size_t j = 0; j < nd.y.size(); ++j) row += nd.wy[j] * f(nd.x[i], nd.y[j]);
        acc += nd.wx[i] * row;
    }
    return acc;
}

}  // namespace

std::string operator_name(OperatorTag t) {
    switch (t) {
        case OperatorTag::PCanX: return "p_can";
        case OperatorTag::PMechX: return "p_mech";
        case OperatorTag::PConsX: return "p_cons";
        case OperatorTag::LCanZ: return "L_can";
        case OperatorTag::LMechZ: return "L_mech";
        case OperatorTag::LConsZ: return "L_cons";
        case OperatorTag::Hamiltonian: return "H";
        case OperatorTag::GccMomentum: return "p_gcc";
        case OperatorTag::GccOam: return "L_gcc";
    }
    return "?";
}

std::string OperatorKind::name() const {
    std::string n = operator_name(tag);
    if (physical) n += "[" + physical->name() + "]";
    return n;
}

const std::vector<OperatorTag>& table_operators() {
    static const std::vector<OperatorTag> ops{OperatorTag::PCanX, OperatorTag::PMechX, OperatorTag::PConsX,
                                              OperatorTag::LCanZ, OperatorTag::LMechZ, OperatorTag::LConsZ};
    return ops;
}

OperatorKind gcc_build(OperatorTag family, const GaugeChoice& physical) {
    if (!physical.is_standard()) throw ConfigurationError("physical potential must be a standard gauge");
    switch (family) {
        case OperatorTag::PCanX:
        case OperatorTag::PMechX:
        case OperatorTag::PConsX:
        case OperatorTag::GccMomentum: return {OperatorTag::GccMomentum, physical};
        case OperatorTag::LCanZ:
        case OperatorTag::LMechZ:
        case OperatorTag::LConsZ:
        case OperatorTag::GccOam: return {OperatorTag::GccOam, physical};
        case OperatorTag::Hamiltonian: break;
    }
    throw ConfigurationError("gcc construction needs a momentum or angular-momentum family");
}

Field apply(const MagneticSetup& s, const OperatorKind& op, const std::optional<GaugeChoice>& gauge, Field psi,
            FiniteDifference fd) {
    s.validate();
    check_gauge(op, gauge);
    const double h = fd.step * s.magnetic_length();
    if (op.tag == OperatorTag::Hamiltonian) {
        const GaugeChoice g = *gauge;
        Field px = pi_x(s, g, psi, h), py = pi_y(s, g, psi, h);
        Field pxx = pi_x(s, g, px, h), pyy = pi_y(s, g, py, h);
        const double inv2m = 0.5 / s.m_e;
        return [=](double x, double y) { return inv2m * (pxx(x, y) + pyy(x, y)); };
    }
    return [=](double x, double y) {
        Form f = first_order_form(s, op, gauge, x, y);
        Amplitude out = f.v * psi(x, y);
        if (f.cdx != 0.0) out += -kI * f.cdx * d_dx(psi, x, y, h);
        if (f.cdy != 0.0) out += -kI * f.cdy * d_dy(psi, x, y, h);
        return out;
    };
}

QuadratureGrid default_grid(const QuantumState& a) {
    const MagneticSetup& s = a.setup();
    const double l = s.magnetic_length();
    QuadratureGrid g;
    const int n = a.n();
    switch (a.family()) {
        case Family::SymNM:
        case Family::L1NM: {
            double hw = std::max(8.0 * l, reach(2.0 * n + std::abs(a.m()), l));
            g.half_width_x = g.half_width_y = hw;
            break;
        }
        case Family::SymNKx:
        case Family::L1NKx: {
            g.center_y = a.kx() * l * l;
            g.half_width_x = 8.0 * l;
            g.half_width_y = std::max(8.0 * l, reach(2.0 * n, l));
            break;
        }
        case Family::PacketL1:
        case Family::PacketSym: {
            const double reach = 6.5 + std::sqrt(2.0 * n + 1.0);
            const double sg = a.sigma();
            g.center_y = a.kx() * l * l;
            g.half_width_x = std::max(8.0 * l, reach * std::sqrt(1.0 / (sg * sg) + l * l));
            g.half_width_y = std::max(8.0 * l, reach * std::sqrt(l * l + sg * sg * l * l * l * l));
            break;
        }
    }
    return g;
}

QuadratureGrid default_grid(const QuantumState& a, const QuantumState& b) {
    return unite(default_grid(a), default_grid(b));
}

GridNodes make_nodes(const QuadratureGrid& g, bool refined) {
    if (g.points_per_axis < 2) throw ConfigurationError("quadrature grid needs at least two points per axis");
    const int n = refined ? int(std::ceil(g.points_per_axis * g.refine)) : g.points_per_axis;
    const QuadratureRule& r = cached_gauss_legendre(n);
    GridNodes nd;
    nd.x.resize(n);
    nd.y.resize(n);
    nd.wx.resize(n);
    nd.wy.resize(n);
    for (int i = 0; i < n; ++i) {
        nd.x[i] = g.center_x + g.half_width_x * r.nodes[i];
        nd.wx[i] = g.half_width_x * r.weights[i];
        nd.y[i] = g.center_y + g.half_width_y * r.nodes[i];
        nd.wy[i] = g.half_width_y * r.weights[i];
    }
    return nd;
}

SampledState sample(const QuantumState& st, const GridNodes& nodes, double step) {
    const double h = step * st.setup().magnetic_length();
    const std::size_t nx = nodes.x.size(), ny = nodes.y.size();
    SampledState out;
    out.psi.resize(nx * ny);
    out.dx.resize(nx * ny);
    out.dy.resize(nx * ny);
    for (std::size_t i = 0; i < nx; ++i) {
        for (std::size_t j = 0; j < ny; ++j) {
            const double x = nodes.x[i], y = nodes.y[j];
            const std::size_t k = i * ny + j;
            out.psi[k] = st(x, y);
            out.dx[k] = d_dx(st, x, y, h);
            out.dy[k] = d_dy(st, x, y, h);
        }
    }
    return out;
}

namespace {

std::vector<Amplitude> applied(const MagneticSetup& s, const GridNodes& nodes, const OperatorKind& op,
                               const std::optional<GaugeChoice>& gauge, const SampledState& ket) {
    const std::size_t ny = nodes.y.size();
    std::vector<Amplitude> out(ket.psi.size());
    for (std::size_t i = 0; i < nodes.x.size(); ++i) {
        for (std::size_t j = 0; j < ny; ++j) {
            const std::size_t k = i * ny + j;
            Form f = first_order_form(s, op, gauge, nodes.x[i], nodes.y[j]);
            out[k] = f.v * ket.psi[k] - kI * (f.cdx * ket.dx[k] + f.cdy * ket.dy[k]);
        }
    }
    return out;
}

Amplitude weighted_dot(const GridNodes& nodes, const std::vector<Amplitude>& bra, const std::vector<Amplitude>& v) {
    const std::size_t ny = nodes.y.size();
    Amplitude acc = 0.0;
    for (std::size_t i = 0; i < nodes.x.size(); ++i) {
        Amplitude row = 0.0;
        for (std::size_t j = 0; j < ny; ++j) row += nodes.wy[j] * std::conj(bra[i * ny + j]) * v[i * ny + j];
        acc += nodes.wx[i] * row;
    }
    return acc;
}

}  // namespace

Amplitude contract(const MagneticSetup& s, const GridNodes& nodes, const SampledState& bra, const OperatorKind& op,
                   const std::optional<GaugeChoice>& gauge, const SampledState& ket) {
    check_gauge(op, gauge);
    return weighted_dot(nodes, bra.psi, applied(s, nodes, op, gauge, ket));
}

MatrixElementResult matrix_element(const MagneticSetup& s, const QuantumState& bra, const OperatorKind& op,
                                   const std::optional<GaugeChoice>& gauge, const QuantumState& ket,
                                   std::optional<QuadratureGrid> grid, FiniteDifference fd) {
    s.validate();
    check_gauge(op, gauge);
    require_normalizable(bra);
    require_normalizable(ket);
    MatrixElementResult r;
    r.grid_used = grid ? *grid : default_grid(bra, ket);
    Amplitude vals[2];
    for (int pass = 0; pass < 2; ++pass) {
        const bool refined = pass == 1;
        GridNodes nodes = make_nodes(r.grid_used, refined);
        const double step = refined ? fd.step / r.grid_used.refine : fd.step;
        if (op.tag == OperatorTag::Hamiltonian) {
            Field h = apply(s, op, gauge, ket, {step});
            vals[pass] = integrate(nodes, [&](double x, double y) { return std::conj(bra(x, y)) * h(x, y); });
        } else {
            SampledState k = sample(ket, nodes, step);
            std::vector<Amplitude> b(k.psi.size());
            const std::size_t ny = nodes.y.size();
            for (std::size_t i = 0; i < nodes.x.size(); ++i)
                for (std::size_t j = 0; j < ny; ++j) b[i * ny + j] = bra(nodes.x[i], nodes.y[j]);
            vals[pass] = weighted_dot(nodes, b, applied(s, nodes, op, gauge, k));
        }
    }
    r.value = vals[0];
    r.error_estimate = std::abs(vals[0] - vals[1]);
    return r;
}

MatrixElementResult inner_product(const QuantumState& bra, const QuantumState& ket, std::optional<QuadratureGrid> grid) {
    require_normalizable(bra);
    require_normalizable(ket);
    MatrixElementResult r;
    r.grid_used = grid ? *grid : default_grid(bra, ket);
    Amplitude vals[2];
    for (int pass = 0; pass < 2; ++pass) {
        GridNodes nodes = make_nodes(r.grid_used, pass == 1);
        vals[pass] = integrate(nodes, [&](double x, double y) { return std::conj(bra(x, y)) * ket(x, y); });
    }
    r.value = vals[0];
    r.error_estimate = std::abs(vals[0] - vals[1]);
    return r;
}

MatrixElementResult packet_expectation(const MagneticSetup& s, const OperatorKind& op, const GaugeChoice& gauge,
                                       const PacketSpec& p, std::optional<QuadratureGrid> grid, FiniteDifference fd) {
    QuantumState st = QuantumState::packet_l1(s, p).in_gauge(gauge);
    return matrix_element(s, st, op, gauge, st, grid, fd);
}

MatrixElementResult strip_disk_overlap(const MagneticSetup& s, int n, double kx, int m,
                                       std::optional<QuadratureGrid> grid) {
    QuantumState disk = QuantumState::sym_nm(s, n, m);
    MatrixElementResult r;
    r.grid_used = grid ? *grid : default_grid(disk);
    const HarmonicGauge u = HarmonicGauge::xy(1.0);
    Amplitude vals[2];
    for (int pass = 0; pass < 2; ++pass) {
        GridNodes nodes = make_nodes(r.grid_used, pass == 1);
        vals[pass] = integrate(nodes, [&](double x, double y) {
            return std::conj(psi_l1_nkx(s, n, kx, x, y)) * gauge_phase(s, u, x, y) * disk(x, y);
        });
    }
    r.value = vals[0];
    r.error_estimate = std::abs(vals[0] - vals[1]);
    return r;
}

double eigen_residual(const QuantumState& psi, std::optional<QuadratureGrid> grid, FiniteDifference fd) {
    const MagneticSetup& s = psi.setup();
    const QuadratureGrid g = grid ? *grid : default_grid(psi);
    Field h = apply(s, OperatorKind::of(OperatorTag::Hamiltonian), psi.gauge(), psi, fd);
    const double e = s.level_energy(psi.n());
    GridNodes nodes = make_nodes(g, false);
    Amplitude acc = integrate(nodes, [&](double x, double y) {
        Amplitude r = h(x, y) - e * psi(x, y);
        return Amplitude(std::norm(r), 0.0);
    });
    return std::sqrt(acc.real());
}

SweepResult matrix_sweep(const MagneticSetup& s, const std::vector<QuantumState>& states,
                         const std::vector<OperatorKind>& ops, const GaugeChoice& gauge, const QuadratureGrid& grid,
                         FiniteDifference fd) {
    s.validate();
    for (const auto& st : states) require_normalizable(st);
    for (const auto& op : ops) {
        if (op.tag == OperatorTag::Hamiltonian) throw ConfigurationError("sweeps take first-order operators only");
        check_gauge(op, gauge);
    }
    const std::size_t ns = states.size();
    SweepResult out;
    out.values.assign(ops.size(), std::vector<std::vector<MatrixElementResult>>(ns, std::vector<MatrixElementResult>(ns)));
    for (int pass = 0; pass < 2; ++pass) {
        const bool refined = pass == 1;
        GridNodes nodes = make_nodes(grid, refined);
        const double step = refined ? fd.step / grid.refine : fd.step;
        std::vector<SampledState> samples;
        samples.reserve(ns);
        for (const auto& st : states) samples.push_back(sample(st, nodes, step));
        for (std::size_t o = 0; o < ops.size(); ++o) {
            for (std::size_t j = 0; j < ns; ++j) {
                std::vector<Amplitude> oket = applied(s, nodes, ops[o], gauge, samples[j]);
                for (std::size_t i = 0; i < ns; ++i) {
                    Amplitude v = weighted_dot(nodes, samples[i].psi, oket);
                    MatrixElementResult& r = out.values[o][i][j];
                    if (!refined) {
                        r.value = v;
                        r.grid_used = grid;
                    } else {
                        r.error_estimate = std::abs(r.value - v);
                    }
                }
            }
        }
    }
    return out;
}

}  // namespace landau
