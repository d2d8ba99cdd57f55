#include "landau/classical_dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <stdexcept>

namespace landau {

namespace {

struct Deriv {
    double dx, dy, dvx, dvy;
};

Deriv rhs(double w, double vx, double vy) { return {vx, vy, -w * vy, w * vx}; }

}  // namespace

std::vector<TrajectoryState> integrate(const MagneticSetup& s, const TrajectoryState& initial, double dt, int steps) {
    s.validate();
    if (!(dt > 0.0) || !std::isfinite(dt)) throw std::invalid_argument("time step must be positive");
    if (steps < 0) throw std::invalid_argument("step count must be non-negative");
    const double w = s.cyclotron();
    std::vector<TrajectoryState> out;
    out.reserve(std::size_t(steps) + 1);
    out.push_back(initial);
    TrajectoryState c = initial;
    for (int i = 0; i < steps; ++i) {
        Deriv k1 = rhs(w, c.vx, c.vy);
        Deriv k2 = rhs(w, c.vx + 0.5 * dt * k1.dvx, c.vy + 0.5 * dt * k1.dvy);
        Deriv k3 = rhs(w, c.vx + 0.5 * dt * k2.dvx, c.vy + 0.5 * dt * k2.dvy);
        Deriv k4 = rhs(w, c.vx + dt * k3.dvx, c.vy + dt * k3.dvy);
        c.x += dt / 6.0 * (k1.dx + 2 * k2.dx + 2 * k3.dx + k4.dx);
        c.y += dt / 6.0 * (k1.dy + 2 * k2.dy + 2 * k3.dy + k4.dy);
        c.vx += dt / 6.0 * (k1.dvx + 2 * k2.dvx + 2 * k3.dvx + k4.dvx);
        c.vy += dt / 6.0 * (k1.dvy + 2 * k2.dvy + 2 * k3.dvy + k4.dvy);
        c.t = initial.t + (i + 1) * dt;
        out.push_back(c);
    }
    return out;
}

ConservedSample conserved_at(const MagneticSetup& s, const TrajectoryState& st) {
    const double m = s.m_e, eb = s.eB, w = s.cyclotron();
    ConservedSample c{};
    c.t = st.t;
    c.p_mech_x = m * st.vx;
    c.p_mech_y = m * st.vy;
    c.l_mech = m * (st.x * st.vy - st.y * st.vx);
    c.p_cons_x = c.p_mech_x + eb * st.y;
    c.p_cons_y = c.p_mech_y - eb * st.x;
    c.l_cons = c.l_mech - 0.5 * eb * (st.x * st.x + st.y * st.y);
    c.center_x = st.x - st.vy / w;
    c.center_y = st.y + st.vx / w;
    return c;
}

ConservedSeries conserved_series(const MagneticSetup& s, const std::vector<TrajectoryState>& traj) {
    ConservedSeries out;
    if (traj.empty()) return out;
    out.samples.reserve(traj.size());
    for (const auto& st : traj) out.samples.push_back(conserved_at(s, st));
    const ConservedSample& c0 = out.samples.front();
    const double speed = std::hypot(traj.front().vx, traj.front().vy);
    const double pscale = std::max(s.m_e * speed, 1e-300);
    const double lscale = std::max(pscale * speed / s.cyclotron(), 1e-300);
    const double dpx = std::max(std::abs(c0.p_cons_x), pscale);
    const double dpy = std::max(std::abs(c0.p_cons_y), pscale);
    const double dl = std::max(std::abs(c0.l_cons), lscale);
    const double l = s.magnetic_length();
    for (const auto& c : out.samples) {
        out.drift_p_cons_x = std::max(out.drift_p_cons_x, std::abs(c.p_cons_x - c0.p_cons_x) / dpx);
        out.drift_p_cons_y = std::max(out.drift_p_cons_y, std::abs(c.p_cons_y - c0.p_cons_y) / dpy);
        out.drift_l_cons = std::max(out.drift_l_cons, std::abs(c.l_cons - c0.l_cons) / dl);
        out.drift_center = std::max(out.drift_center,
                                    std::hypot(c.center_x - c0.center_x, c.center_y - c0.center_y) / l);
    }
    return out;
}

LagrangianCheck lagrangian_identities(const MagneticSetup& s, const std::vector<TrajectoryState>& traj) {
    LagrangianCheck out;
    const double m = s.m_e, eb = s.eB, l = s.magnetic_length();
    for (const auto& st : traj) {
        const double r = std::hypot(st.x, st.y);
        ConservedSample c = conserved_at(s, st);
        // Cartesian ones need no polar angle
        const double px_sym = m * st.vx + 0.5 * eb * st.y;
        const double px_l1 = m * st.vx + eb * st.y;
        out.sym_p_x = std::max(out.sym_p_x, std::abs(px_sym + 0.5 * eb * st.y - c.p_cons_x));
        out.l1_p_x = std::max(out.l1_p_x, std::abs(px_l1 - c.p_cons_x));
        ++out.samples;
        if (r < 1e-9 * l) {
            ++out.skipped;
            continue;
        }
        const double phi = std::atan2(st.y, st.x);
        const double phidot = (st.x * st.vy - st.y * st.vx) / (r * r);
        const double cs = std::cos(phi), sn = std::sin(phi);
        const double pphi_sym = m * r * r * phidot - 0.5 * eb * r * r;
        const double pphi_l1 = m * r * r * phidot - eb * r * r * sn * sn;
        out.sym_p_phi = std::max(out.sym_p_phi, std::abs(pphi_sym - c.l_cons));
        out.l1_p_phi = std::max(out.l1_p_phi, std::abs(pphi_l1 - 0.5 * eb * r * r * (cs * cs - sn * sn) - c.l_cons));
    }
    return out;
}

void write_trajectory_csv(std::ostream& os, const MagneticSetup& s, const std::vector<TrajectoryState>& traj) {
    os << "t,x,y,vx,vy,p_mech_x,p_mech_y,L_mech,p_cons_x,p_cons_y,L_cons\n";
    os << std::setprecision(17);
    for (const auto& st : traj) {
        ConservedSample c = conserved_at(s, st);
        os << st.t << ',' << st.x << ',' << st.y << ',' << st.vx << ',' << st.vy << ',' << c.p_mech_x << ','
           << c.p_mech_y << ',' << c.l_mech << ',' << c.p_cons_x << ',' << c.p_cons_y << ',' << c.l_cons << '\n';
    }
}

}  // namespace landau
