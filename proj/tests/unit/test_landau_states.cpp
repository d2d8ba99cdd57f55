#include <doctest.h>

#include <cmath>
#include <complex>

#include "landau/landau_states.hpp"
#include "landau/quadrature.hpp"
#include "landau/special_functions.hpp"
#include "landau/verification.hpp"

using namespace landau;
using doctest::Approx;
using cplx = std::complex<double>;

namespace {

// plain tensor Gauss-Legendre norm, independent of the realspace engine
double norm2(const std::function<cplx(double, double)>& f, double cx, double cy, double hx, double hy, int pts = 200) {
    auto gx = gauss_legendre(pts, cx - hx, cx + hx), gy = gauss_legendre(pts, cy - hy, cy + hy);
    double s = 0.0;
    for (int i = 0; i < pts; ++i)
        for (int j = 0; j < pts; ++j) s += gx.weights[i] * gy.weights[j] * std::norm(f(gx.nodes[i], gy.nodes[j]));
    return s;
}

}  // namespace

TEST_CASE("values at the origin") {
    MagneticSetup s;
    CHECK(psi_sym_nm(s, 0, 0, 0.0, 0.0).real() == Approx(0.3989422804014327));
    CHECK(psi_l1_nkx(s, 0, 0.0, 0.0, 0.0).real() == Approx(0.2996557376).epsilon(1e-10));
    // Laguerre degree one carries the ladder sign
    CHECK(psi_sym_nm(s, 1, 0, 0.0, 0.0).real() < 0.0);
    CHECK(std::abs(psi_sym_nm(s, 2, 1, 0.0, 0.0)) == 0.0);
}

TEST_CASE("label validation") {
    MagneticSetup s;
    CHECK_THROWS_AS(psi_sym_nm(s, 1, 2, 0.0, 0.0), std::domain_error);
    CHECK_THROWS_AS(QuantumState::l1_nm(s, 0, 1), std::domain_error);
    CHECK_THROWS_AS(QuantumState::sym_nm(s, -1, -1), std::domain_error);
    CHECK_THROWS_AS(QuantumState::packet_l1(s, {1, 0.0, 0.0}), std::domain_error);
    CHECK_THROWS_AS(QuantumState::sym_nm(MagneticSetup{-1.0, 1.0}, 0, 0), std::invalid_argument);
}

TEST_CASE("disk states are normalized") {
    for (MagneticSetup s : {MagneticSetup{1.0, 1.0}, MagneticSetup{2.3, 0.5}}) {
        const double l = s.magnetic_length();
        for (auto [n, m] : {std::pair{0, 0}, {1, -2}, {2, 1}, {3, -4}, {4, 4}}) {
            auto f = [&](double x, double y) { return psi_sym_nm(s, n, m, x, y); };
            CHECK(norm2(f, 0, 0, 11 * l, 11 * l) == Approx(1.0).epsilon(1e-10));
        }
    }
}

TEST_CASE("first Landau class disk state is U times the symmetric one") {
    MagneticSetup s;
    for (auto [x, y] : {std::pair{1.0, 1.0}, {-0.4, 2.2}, {3.0, -0.7}}) {
        cplx a = psi_l1_nm(s, 1, -1, x, y), b = psi_sym_nm(s, 1, -1, x, y);
        CHECK(std::abs(a) == Approx(std::abs(b)));
        CHECK(std::abs(a - std::polar(1.0, 0.5 * x * y) * b) < 1e-15);
    }
    // n=0, m=0 at (1,1): phase +0.5 relative to the symmetric value
    cplx r = psi_l1_nm(s, 0, 0, 1.0, 1.0) / psi_sym_nm(s, 0, 0, 1.0, 1.0);
    CHECK(std::arg(r) == Approx(0.5));
}

TEST_CASE("state objects agree with the free functions") {
    MagneticSetup s{1.4, 1.0};
    auto a = QuantumState::sym_nm(s, 2, -1);
    auto b = QuantumState::l1_nm(s, 2, -1);
    auto c = QuantumState::l1_nkx(s, 1, 0.6);
    auto d = QuantumState::sym_nkx(s, 1, 0.6);
    for (auto [x, y] : {std::pair{0.3, -0.2}, {1.5, 0.9}}) {
        CHECK(std::abs(a(x, y) - psi_sym_nm(s, 2, -1, x, y)) < 1e-15);
        CHECK(std::abs(b(x, y) - psi_l1_nm(s, 2, -1, x, y)) < 1e-15);
        CHECK(std::abs(c(x, y) - psi_l1_nkx(s, 1, 0.6, x, y)) < 1e-15);
        CHECK(std::abs(d(x, y) - psi_sym_nkx(s, 1, 0.6, x, y)) < 1e-15);
        CHECK(std::abs(a.in_gauge(GaugeChoice::landau1())(x, y) - b(x, y)) < 1e-14);
        CHECK(std::abs(c.in_gauge(GaugeChoice::symmetric())(x, y) - d(x, y)) < 1e-14);
    }
    CHECK(a.gauge() == GaugeChoice::symmetric());
    CHECK(b.gauge() == GaugeChoice::landau1());
    CHECK_FALSE(c.normalizable());
    CHECK(a.normalizable());
    CHECK(a.label() == "SymNM(n=2,m=-1)");
    HarmonicGauge chi;
    chi.re = {0.2, 0.1};
    auto e = a.deformed(chi);
    CHECK(e.label() == "SymNM(n=2,m=-1)+chi");
    CHECK(e.gauge() == GaugeChoice::symmetric().deformed(chi));
    CHECK(std::abs(e(0.5, 0.5) - gauge_phase(s, chi, 0.5, 0.5) * a(0.5, 0.5)) < 1e-15);
}

TEST_CASE("packet closed form against brute-force k integration") {
    MagneticSetup s{1.0, 1.0};
    const double l = s.magnetic_length();
    for (int n : {0, 1, 3})
        for (double sg : {0.2, 1.0, 5.0})
            for (double kc : {-2.0, 1.5}) {
                PacketSpec p{n, kc, sg};
                auto k = gauss_legendre(1200, kc - 12 * sg, kc + 12 * sg);
                for (auto [x, y] : {std::pair{0.0, kc}, {0.7, kc - 0.4}, {-1.1, kc + 1.3}}) {
                    cplx acc = 0.0;
                    for (std::size_t i = 0; i < k.nodes.size(); ++i) {
                        double g = std::pow(M_PI * sg * sg, -0.25) *
                                   std::exp(-(k.nodes[i] - kc) * (k.nodes[i] - kc) / (2 * sg * sg));
                        acc += k.weights[i] * g * psi_l1_nkx(s, n, k.nodes[i], x, y * l * l);
                    }
                    CHECK(std::abs(psi_packet(s, p, x, y * l * l) - acc) < 1e-12);
                }
            }
}

TEST_CASE("packet normalization") {
    MagneticSetup s;
    PacketSpec p{2, 1.0, 0.5};
    auto f = [&](double x, double y) { return psi_packet(s, p, x, y); };
    CHECK(norm2(f, 0.0, 1.0, 28.0, 12.0, 300) == Approx(1.0).epsilon(1e-10));
    // on the centre line the x envelope is Gaussian with variance l^2 + 1/sigma^2
    for (double sg : {0.2, 1.0, 5.0}) {
        PacketSpec w{0, 0.3, sg};
        for (double x : {0.5, 2.0, 6.0}) {
            double ratio = std::abs(psi_packet(s, w, x, 0.3)) / std::abs(psi_packet(s, w, 0.0, 0.3));
            CHECK(ratio == Approx(std::exp(-x * x / (2.0 * (1.0 + 1.0 / (sg * sg))))).epsilon(1e-10));
        }
    }
    // the symmetric-class packet differs only by a phase
    auto ps = QuantumState::packet_sym(s, p), pl = QuantumState::packet_l1(s, p);
    CHECK(std::abs(ps(0.8, 0.3)) == Approx(std::abs(pl(0.8, 0.3))));
    CHECK(std::abs(ps(0.8, 0.3) - std::polar(1.0, -0.5 * 0.8 * 0.3) * pl(0.8, 0.3)) < 1e-15);
}

TEST_CASE("overlap kernel") {
    MagneticSetup s;
    CHECK(overlap_kernel(s, 0, 0.0, 0) == Approx(std::pow(M_PI, -0.25)));
    CHECK(overlap_amplitude(s, 0, 0.0, 0) == cplx(std::pow(M_PI, -0.25), 0.0));
    for (int m = -3; m <= 2; ++m) {
        cplx a = overlap_amplitude(s, 2, 0.7, m);
        cplx ref = std::pow(cplx(0.0, 1.0), m) * overlap_kernel(s, 2, 0.7, m);
        CHECK(std::abs(a - ref) < 1e-15);
    }
    CHECK_THROWS_AS(overlap_kernel(s, 1, 0.0, 2), std::domain_error);
}

TEST_CASE("strip state rebuilt from disk states") {
    MagneticSetup s{0.8, 1.0};
    const double l = s.magnetic_length();
    for (int n : {0, 2})
        for (double kx : {-1.0, 0.5})
            for (auto [x, y] : {std::pair{0.2, 0.1}, {1.8, -1.1}}) {
                Reconstruction r = reconstruct_l1_nkx(s, n, kx, x * l, y * l);
                CHECK(std::abs(r.value - psi_l1_nkx(s, n, kx, x * l, y * l)) < 1e-10);
                CHECK(r.terms > 3);
            }
}
