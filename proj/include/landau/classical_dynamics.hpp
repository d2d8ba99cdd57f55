#pragma once

#include <ostream>
#include <vector>

#include "landau/setup.hpp"

namespace landau {

struct TrajectoryState {
    double t = 0.0;
    double x = 0.0, y = 0.0;
    double vx = 0.0, vy = 0.0;
};

// m xdd = -eB yd,  m ydd = eB xd   (fixed-step RK4)
std::vector<TrajectoryState> integrate(const MagneticSetup& s, const TrajectoryState& initial, double dt, int steps);

struct ConservedSample {
    double t;
    double p_mech_x, p_mech_y, l_mech;
    double p_cons_x, p_cons_y, l_cons;
    double center_x, center_y;  // guiding centre
};

ConservedSample conserved_at(const MagneticSetup& s, const TrajectoryState& st);

struct ConservedSeries {
    std::vector<ConservedSample> samples;
    // max |q(t) - q(0)| / max(|q(0)|, scale); scale is m|v| for momenta
    // and m|v| times the cyclotron radius for angular momentum
    double drift_p_cons_x = 0.0;
    double drift_p_cons_y = 0.0;
    double drift_l_cons = 0.0;
    double drift_center = 0.0;  // absolute, in units of the magnetic length
};

ConservedSeries conserved_series(const MagneticSetup& s, const std::vector<TrajectoryState>& traj);

// Canonical momenta from the Lagrangian in each gauge compared with the
// conserved quantities; mismatches are absolute values.
struct LagrangianCheck {
    double sym_p_phi = 0.0;      // p_phi(A_S) vs L_cons
    double sym_p_x = 0.0;        // p_x(A_S) + eB y / 2 vs p_cons_x
    double l1_p_x = 0.0;         // p_x(A_L1) vs p_cons_x
    double l1_p_phi = 0.0;       // p_phi(A_L1) - eB r^2 (cos^2 - sin^2)/2 vs L_cons
    std::size_t samples = 0;
    std::size_t skipped = 0;     // too close to the origin for polar angles
};

LagrangianCheck lagrangian_identities(const MagneticSetup& s, const std::vector<TrajectoryState>& traj);

void write_trajectory_csv(std::ostream& os, const MagneticSetup& s, const std::vector<TrajectoryState>& traj);

}  // namespace landau
