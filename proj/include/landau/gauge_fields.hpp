#pragma once

#include <complex>
#include <string>
#include <vector>

#include "landau/setup.hpp"

namespace landau {

struct Vec2 {
    double x = 0.0;
    double y = 0.0;
};

// d(eA_i)/d(x_j), row i, column j
struct Jacobian2 {
    double xx = 0.0, xy = 0.0, yx = 0.0, yy = 0.0;
};

enum class StandardGauge { Symmetric, Landau1, Landau2 };

// e*chi(x,y) = sum_k re[k-1] Re (x+iy)^k + im[k-1] Im (x+iy)^k
//              + xy_weight * (-eB x y / 2)
// Harmonic by construction.
class HarmonicGauge {
public:
    std::vector<double> re;
    std::vector<double> im;
    double xy_weight = 0.0;

    static HarmonicGauge xy(double weight);

    int degree() const;
    bool is_zero() const;

    double value(const MagneticSetup& s, double x, double y) const;
    Vec2 gradient(const MagneticSetup& s, double x, double y) const;
    Jacobian2 hessian(const MagneticSetup& s, double x, double y) const;

    HarmonicGauge operator+(const HarmonicGauge& o) const;
    HarmonicGauge operator-() const;
    HarmonicGauge operator-(const HarmonicGauge& o) const { return *this + (-o); }
    bool operator==(const HarmonicGauge& o) const;
};

// A standard gauge optionally shifted by grad chi.
struct GaugeChoice {
    StandardGauge base = StandardGauge::Symmetric;
    HarmonicGauge chi;

    static GaugeChoice symmetric() { return {StandardGauge::Symmetric, {}}; }
    static GaugeChoice landau1() { return {StandardGauge::Landau1, {}}; }
    static GaugeChoice landau2() { return {StandardGauge::Landau2, {}}; }

    GaugeChoice deformed(const HarmonicGauge& extra) const { return {base, chi + extra}; }
    bool is_standard() const { return chi.is_zero(); }
    std::string name() const;
    bool operator==(const GaugeChoice& o) const { return base == o.base && chi == o.chi; }
};

Vec2 potential(const MagneticSetup& s, const GaugeChoice& g, double x, double y);
Jacobian2 potential_jacobian(const MagneticSetup& s, const GaugeChoice& g, double x, double y);
double divergence(const MagneticSetup& s, const GaugeChoice& g, double x, double y);

struct CurlReport {
    double max_curl_deviation = 0.0;  // max |curl(eA) - eB|
    double max_divergence = 0.0;      // reported only
    std::size_t samples = 0;
};

CurlReport curl_check(const MagneticSetup& s, const GaugeChoice& g, const std::vector<Vec2>& points);

// exp(-i e chi)
std::complex<double> gauge_phase(const MagneticSetup& s, const HarmonicGauge& chi, double x, double y);

// chi with A_to = A_from + grad chi
HarmonicGauge relative_gauge(const GaugeChoice& from, const GaugeChoice& to);

}  // namespace landau
