#pragma once

#include <complex>
#include <string>

#include "landau/gauge_fields.hpp"
#include "landau/setup.hpp"

namespace landau {

using Amplitude = std::complex<double>;

enum class Family { SymNM, SymNKx, L1NM, L1NKx, PacketL1, PacketSym };

std::string family_name(Family f);

struct PacketSpec {
    int n = 0;
    double kx_center = 0.0;
    double sigma = 1.0;  // width of the Gaussian weight in kx
};

// Pointwise evaluations.  Disk states carry the sign (-1)^k, k the Laguerre
// degree, so that they coincide with |nA>|nB> built from the ladder operators.
Amplitude psi_sym_nm(const MagneticSetup& s, int n, int m, double x, double y);
Amplitude psi_l1_nkx(const MagneticSetup& s, int n, double kx, double x, double y);
Amplitude psi_l1_nm(const MagneticSetup& s, int n, int m, double x, double y);
Amplitude psi_sym_nkx(const MagneticSetup& s, int n, double kx, double x, double y);
// Gaussian superposition over kx of strip states, in closed form
Amplitude psi_packet(const MagneticSetup& s, const PacketSpec& p, double x, double y);

class QuantumState {
public:
    static QuantumState sym_nm(const MagneticSetup& s, int n, int m);
    static QuantumState sym_nkx(const MagneticSetup& s, int n, double kx);
    static QuantumState l1_nm(const MagneticSetup& s, int n, int m);
    static QuantumState l1_nkx(const MagneticSetup& s, int n, double kx);
    static QuantumState packet_l1(const MagneticSetup& s, const PacketSpec& p);
    static QuantumState packet_sym(const MagneticSetup& s, const PacketSpec& p);

    // exp(-i e chi) psi, eigenstate of the gauge A + grad chi
    QuantumState deformed(const HarmonicGauge& chi) const;
    // same physical state, re-expressed in the gauge g
    QuantumState in_gauge(const GaugeChoice& g) const;

    Amplitude operator()(double x, double y) const;

    Family family() const { return family_; }
    int n() const { return n_; }
    int m() const { return m_; }
    double kx() const { return kx_; }
    double sigma() const { return sigma_; }
    const MagneticSetup& setup() const { return setup_; }
    const HarmonicGauge& deformation() const { return extra_; }
    bool normalizable() const { return family_ != Family::SymNKx && family_ != Family::L1NKx; }
    bool is_packet() const { return family_ == Family::PacketL1 || family_ == Family::PacketSym; }
    GaugeChoice gauge() const;
    std::string label() const;

private:
    QuantumState(const MagneticSetup& s, Family f, int n, int m, double kx, double sigma);

    MagneticSetup setup_;
    Family family_;
    int n_;
    int m_;
    double kx_;
    double sigma_;
    HarmonicGauge extra_;
    HarmonicGauge natural_;  // fixed phase relating the family to its base function
    HarmonicGauge phase_;    // natural_ + extra_
    double pref_ = 0.0;
};

// Real closed-form kernel C_nm H_{n-m}(y0/lB) exp(-y0^2/2lB^2), y0 = kx lB^2
double overlap_kernel(const MagneticSetup& s, int n, double kx, int m);
// <strip n,kx | exp(i eB x y / 2) | disk n,m> in the ladder phase convention,
// equal to i^m times the kernel
Amplitude overlap_amplitude(const MagneticSetup& s, int n, double kx, int m);

struct Reconstruction {
    Amplitude value;
    int terms = 0;
};

// sum over m <= n of conj(overlap) * psi_l1_nm, truncated adaptively
Reconstruction reconstruct_l1_nkx(const MagneticSetup& s, int n, double kx, double x, double y,
                                  double tol = 1e-15, int max_terms = 4000);

}  // namespace landau
