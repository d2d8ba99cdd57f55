#include <doctest.h>

#include <cmath>
#include <sstream>
#include <string>

#include "landau/classical_dynamics.hpp"

using namespace landau;
using doctest::Approx;

TEST_CASE("cyclotron orbit from the origin") {
    MagneticSetup s;
    const double period = 2 * M_PI / s.cyclotron();
    auto traj = integrate(s, {0, 0, 0, 1, 0}, period / 1000, 1000);
    REQUIRE(traj.size() == 1001);
    CHECK(std::hypot(traj.back().x, traj.back().y) < 1e-8);
    double rmax = 0.0;
    for (const auto& p : traj) {
        CHECK(std::abs(p.x - std::sin(p.t)) < 1e-9);
        CHECK(std::abs(p.y - (1 - std::cos(p.t))) < 1e-9);
        rmax = std::max(rmax, std::hypot(p.x, p.y - 1.0));
    }
    CHECK(rmax == Approx(1.0).epsilon(1e-9));  // R = m|v|/eB
    auto c = conserved_at(s, traj.front());
    CHECK(c.center_x == Approx(0.0).scale(1.0));
    CHECK(c.center_y == Approx(1.0));
    CHECK(c.p_cons_x == Approx(s.eB * c.center_y));
    CHECK(c.p_cons_y == Approx(-s.eB * c.center_x).scale(1.0));
}

TEST_CASE("conserved quantities drift below 1e-6") {
    MagneticSetup s{1.7, 0.6};
    const double period = 2 * M_PI / s.cyclotron();
    auto traj = integrate(s, {0, 0.7, -0.4, 0.9, 0.6}, period / 1000, 100 * 1000);
    auto cs = conserved_series(s, traj);
    CHECK(cs.drift_p_cons_x < 1e-6);
    CHECK(cs.drift_p_cons_y < 1e-6);
    CHECK(cs.drift_l_cons < 1e-6);
    CHECK(cs.drift_center < 1e-6);
}

TEST_CASE("drift converges at fourth order") {
    MagneticSetup s;
    const double period = 2 * M_PI / s.cyclotron();
    auto drift = [&](int steps) {
        return conserved_series(s, integrate(s, {0, 0.7, -0.4, 0.9, 0.6}, period / steps, 10 * steps)).drift_l_cons;
    };
    double ratio = drift(40) / drift(80);
    CHECK(ratio > 12.0);
    CHECK(ratio < 40.0);
}

TEST_CASE("Lagrangian momenta") {
    MagneticSetup s{2.0, 1.3};
    const double period = 2 * M_PI / s.cyclotron();
    auto traj = integrate(s, {0, 1.1, 0.3, -0.5, 0.8}, period / 500, 2000);
    auto lc = lagrangian_identities(s, traj);
    CHECK(lc.samples == traj.size());
    CHECK(lc.skipped == 0);
    CHECK(lc.sym_p_phi < 1e-12);
    CHECK(lc.sym_p_x < 1e-12);
    CHECK(lc.l1_p_x < 1e-12);
    CHECK(lc.l1_p_phi < 1e-12);
    // starting at the origin puts one sample at r = 0
    auto through = integrate(s, {0, 0, 0, 1, 0}, period / 100, 100);
    auto l0 = lagrangian_identities(s, through);
    CHECK(l0.skipped >= 1);
    CHECK(l0.sym_p_phi < 1e-12);
}

TEST_CASE("trajectory csv") {
    MagneticSetup s;
    auto traj = integrate(s, {0, 0.7, -0.4, 0.9, 0.6}, 2 * M_PI / 1000, 2000);
    std::ostringstream os;
    write_trajectory_csv(os, s, traj);
    std::istringstream in(os.str());
    std::string line;
    std::getline(in, line);
    CHECK(line == "t,x,y,vx,vy,p_mech_x,p_mech_y,L_mech,p_cons_x,p_cons_y,L_cons");
    int rows = 0;
    double px0 = 0, py0 = 0, worst = 0;
    while (std::getline(in, line)) {
        std::vector<double> v;
        std::stringstream ls(line);
        std::string cell;
        while (std::getline(ls, cell, ',')) v.push_back(std::stod(cell));
        REQUIRE(v.size() == 11);
        if (rows == 0) px0 = v[8], py0 = v[9];
        worst = std::max({worst, std::abs(v[8] - px0), std::abs(v[9] - py0)});
        ++rows;
    }
    CHECK(rows == 2001);
    CHECK(worst < 1e-6);
}

TEST_CASE("integrator input checks") {
    MagneticSetup s;
    CHECK_THROWS_AS(integrate(s, {}, 0.0, 10), std::invalid_argument);
    CHECK_THROWS_AS(integrate(s, {}, 0.1, -1), std::invalid_argument);
    CHECK(integrate(s, {0, 1, 2, 3, 4}, 0.1, 0).size() == 1);
}
