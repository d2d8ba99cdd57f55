#include "landau/landau_states.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "landau/special_functions.hpp"

namespace landau {

namespace {

constexpr double kInvSqrt2Pi = 0.39894228040143267794;

void check_nm(int n, int m) {
    if (n < 0) throw std::domain_error("Landau level index must be non-negative");
    if (m > n) throw std::domain_error("angular label m must not exceed n");
}

Amplitude i_pow(int m) {
    switch (((m % 4) + 4) % 4) {
        case 0: return {1.0, 0.0};
        case 1: return {0.0, 1.0};
        case 2: return {-1.0, 0.0};
        default: return {0.0, -1.0};
    }
}

double disk_prefactor(const MagneticSetup& s, int n, int m) {
    const int k = n - (std::abs(m) + m) / 2;
    const double sign = (k % 2 == 0) ? 1.0 : -1.0;
    return sign * kInvSqrt2Pi * norm_constants(s, n, m).n_nm;
}

Amplitude disk_eval(double l, int n, int m, double pref, double x, double y) {
    const int am = std::abs(m);
    const int k = n - (am + m) / 2;
    const double xi = (x * x + y * y) / (2.0 * l * l);
    // xi^{|m|/2} e^{i m phi} = ((x + i sgn(m) y) / (sqrt2 l))^{|m|}
    Amplitude w(x / (std::sqrt(2.0) * l), (m >= 0 ? y : -y) / (std::sqrt(2.0) * l));
    Amplitude ang(1.0, 0.0);
    for (int i = 0; i < am; ++i) ang *= w;
    return pref * std::exp(-0.5 * xi) * assoc_laguerre(k, am, xi) * ang;
}

double packet_prefactor(const MagneticSetup& s, const PacketSpec& p) {
    if (p.n < 0) throw std::domain_error("Landau level index must be non-negative");
    if (!(p.sigma > 0.0)) throw std::domain_error("packet width must be positive");
    const double l = s.magnetic_length();
    const double sg2 = p.sigma * p.sigma;
    const double A = 0.5 + 1.0 / (2.0 * sg2 * l * l);
    const double nn = norm_constants(s, p.n, p.n).n_n;
    return std::pow(M_PI * sg2, -0.25) * kInvSqrt2Pi * nn / l * std::sqrt(M_PI / A);
}

Amplitude packet_eval(double l, const PacketSpec& p, double pref, double x, double y) {
    const double sg2 = p.sigma * p.sigma;
    const double d = y / (l * l) - p.kx_center;
    // exponent in u = (y - k l^2)/l is -A u^2 + B u + C0
    const double A = 0.5 + 1.0 / (2.0 * sg2 * l * l);
    const Amplitude B(d / (sg2 * l), -x / l);
    const Amplitude C0(-d * d / (2.0 * sg2), x * y / (l * l));
    const Amplitude c = B / (2.0 * A);
    const double lam2 = 1.0 - 1.0 / A;
    return pref * std::exp(C0 + B * B / (4.0 * A)) * scaled_hermite(p.n, c, lam2);
}

}  // namespace

std::string family_name(Family f) {
    switch (f) {
        case Family::SymNM: return "SymNM";
        case Family::SymNKx: return "SymNKx";
        case Family::L1NM: return "L1NM";
        case Family::L1NKx: return "L1NKx";
        case Family::PacketL1: return "PacketL1";
        case Family::PacketSym: return "PacketSym";
    }
    return "?";
}

Amplitude psi_sym_nm(const MagneticSetup& s, int n, int m, double x, double y) {
    check_nm(n, m);
    return disk_eval(s.magnetic_length(), n, m, disk_prefactor(s, n, m), x, y);
}

Amplitude psi_l1_nkx(const MagneticSetup& s, int n, double kx, double x, double y) {
    if (n < 0) throw std::domain_error("Landau level index must be non-negative");
    const double l = s.magnetic_length();
    const double u = (y - kx * l * l) / l;
    return std::polar(kInvSqrt2Pi * hermite_function(n, u) / std::sqrt(l), kx * x);
}

Amplitude psi_l1_nm(const MagneticSetup& s, int n, int m, double x, double y) {
    return gauge_phase(s, HarmonicGauge::xy(1.0), x, y) * psi_sym_nm(s, n, m, x, y);
}

Amplitude psi_sym_nkx(const MagneticSetup& s, int n, double kx, double x, double y) {
    return gauge_phase(s, HarmonicGauge::xy(-1.0), x, y) * psi_l1_nkx(s, n, kx, x, y);
}

Amplitude psi_packet(const MagneticSetup& s, const PacketSpec& p, double x, double y) {
    return packet_eval(s.magnetic_length(), p, packet_prefactor(s, p), x, y);
}

QuantumState::QuantumState(const MagneticSetup& s, Family f, int n, int m, double kx, double sigma)
    : setup_(s), family_(f), n_(n), m_(m), kx_(kx), sigma_(sigma) {
    s.validate();
    if (n < 0) throw std::domain_error("Landau level index must be non-negative");
    switch (f) {
        case Family::SymNM:
        case Family::L1NM:
            check_nm(n, m);
            pref_ = disk_prefactor(s, n, m);
            if (f == Family::L1NM) natural_ = HarmonicGauge::xy(1.0);
            break;
        case Family::SymNKx:
        case Family::L1NKx:
            pref_ = kInvSqrt2Pi / std::sqrt(s.magnetic_length());
            if (f == Family::SymNKx) natural_ = HarmonicGauge::xy(-1.0);
            break;
        case Family::PacketL1:
        case Family::PacketSym:
            pref_ = packet_prefactor(s, {n, kx, sigma});
            if (f == Family::PacketSym) natural_ = HarmonicGauge::xy(-1.0);
            break;
    }
    phase_ = natural_;
}

QuantumState QuantumState::sym_nm(const MagneticSetup& s, int n, int m) { return {s, Family::SymNM, n, m, 0.0, 0.0}; }
QuantumState QuantumState::sym_nkx(const MagneticSetup& s, int n, double kx) { return {s, Family::SymNKx, n, 0, kx, 0.0}; }
QuantumState QuantumState::l1_nm(const MagneticSetup& s, int n, int m) { return {s, Family::L1NM, n, m, 0.0, 0.0}; }
QuantumState QuantumState::l1_nkx(const MagneticSetup& s, int n, double kx) { return {s, Family::L1NKx, n, 0, kx, 0.0}; }
QuantumState QuantumState::packet_l1(const MagneticSetup& s, const PacketSpec& p) {
    return {s, Family::PacketL1, p.n, 0, p.kx_center, p.sigma};
}
QuantumState QuantumState::packet_sym(const MagneticSetup& s, const PacketSpec& p) {
    return {s, Family::PacketSym, p.n, 0, p.kx_center, p.sigma};
}

QuantumState QuantumState::deformed(const HarmonicGauge& chi) const {
    QuantumState out = *this;
    out.extra_ = extra_ + chi;
    out.phase_ = out.natural_ + out.extra_;
    return out;
}

QuantumState QuantumState::in_gauge(const GaugeChoice& g) const { return deformed(relative_gauge(gauge(), g)); }

GaugeChoice QuantumState::gauge() const {
    GaugeChoice g;
    switch (family_) {
        case Family::SymNM:
        case Family::SymNKx:
        case Family::PacketSym: g = GaugeChoice::symmetric(); break;
        case Family::L1NM:
        case Family::L1NKx:
        case Family::PacketL1: g = GaugeChoice::landau1(); break;
    }
    return g.deformed(extra_);
}

Amplitude QuantumState::operator()(double x, double y) const {
    const double l = setup_.magnetic_length();
    Amplitude v;
    switch (family_) {
        case Family::SymNM:
        case Family::L1NM: v = disk_eval(l, n_, m_, pref_, x, y); break;
        case Family::SymNKx:
        case Family::L1NKx: v = std::polar(pref_ * hermite_function(n_, (y - kx_ * l * l) / l), kx_ * x); break;
        case Family::PacketL1:
        case Family::PacketSym: v = packet_eval(l, {n_, kx_, sigma_}, pref_, x, y); break;
    }
    if (!phase_.is_zero()) v *= gauge_phase(setup_, phase_, x, y);
    return v;
}

std::string QuantumState::label() const {
    std::ostringstream os;
    os << family_name(family_) << "(n=" << n_;
    switch (family_) {
        case Family::SymNM:
        case Family::L1NM: os << ",m=" << m_; break;
        case Family::SymNKx:
        case Family::L1NKx: os << ",kx=" << kx_; break;
        default: os << ",kx=" << kx_ << ",sigma=" << sigma_; break;
    }
    os << ")";
    if (!extra_.is_zero()) os << "+chi";
    return os.str();
}

double overlap_kernel(const MagneticSetup& s, int n, double kx, int m) {
    check_nm(n, m);
    s.validate();
    const double l = s.magnetic_length();
    // C_nm H_{n-m}(xi0) e^{-xi0^2/2} = sqrt(l) hermite_function(n-m, xi0)
    return std::sqrt(l) * hermite_function(n - m, kx * l);
}

Amplitude overlap_amplitude(const MagneticSetup& s, int n, double kx, int m) {
    return i_pow(m) * overlap_kernel(s, n, kx, m);
}

Reconstruction reconstruct_l1_nkx(const MagneticSetup& s, int n, double kx, double x, double y, double tol,
                                  int max_terms) {
    const double l = s.magnetic_length();
    const double xi = (x * x + y * y) / (2.0 * l * l);
    const double floor = tol / l;
    Reconstruction r{{0.0, 0.0}, 0};
    int quiet = 0;
    for (int m = n; r.terms < max_terms; --m) {
        Amplitude t = std::conj(overlap_amplitude(s, n, kx, m)) * psi_l1_nm(s, n, m, x, y);
        r.value += t;
        ++r.terms;
        const bool small = std::abs(t) <= floor + tol * std::abs(r.value);
        quiet = small ? quiet + 1 : 0;
        // terms peak near n - m ~ xi, do not stop before the peak has passed
        if (quiet >= 3 && (n - m) > xi + 10.0) break;
    }
    return r;
}

}  // namespace landau
