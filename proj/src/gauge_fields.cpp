#include "landau/gauge_fields.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace landau {

namespace {

using cplx = std::complex<double>;

cplx zpow(double x, double y, int k) {
    cplx z(x, y), out(1.0, 0.0);
    for (int i = 0; i < k; ++i) out *= z;
    return out;
}

double coeff(const std::vector<double>& v, std::size_t i) { return i < v.size() ? v[i] : 0.0; }

void trim(std::vector<double>& v) {
    while (!v.empty() && v.back() == 0.0) v.pop_back();
}

// e*chi offset of each standard gauge relative to the symmetric one
HarmonicGauge base_offset(StandardGauge g) {
    switch (g) {
        case StandardGauge::Symmetric: return {};
        case StandardGauge::Landau1: return HarmonicGauge::xy(1.0);
        case StandardGauge::Landau2: return HarmonicGauge::xy(-1.0);
    }
    return {};
}

}  // namespace

HarmonicGauge HarmonicGauge::xy(double weight) {
    HarmonicGauge h;
    h.xy_weight = weight;
    return h;
}

int HarmonicGauge::degree() const {
    int d = int(std::max(re.size(), im.size()));
    if (xy_weight != 0.0) d = std::max(d, 2);
    return d;
}

bool HarmonicGauge::is_zero() const {
    return xy_weight == 0.0 && std::all_of(re.begin(), re.end(), [](double c) { return c == 0.0; }) &&
           std::all_of(im.begin(), im.end(), [](double c) { return c == 0.0; });
}

double HarmonicGauge::value(const MagneticSetup& s, double x, double y) const {
    double v = -0.5 * s.eB * xy_weight * x * y;
    const std::size_t n = std::max(re.size(), im.size());
    for (std::size_t k = 1; k <= n; ++k) {
        cplx zk = zpow(x, y, int(k));
        v += coeff(re, k - 1) * zk.real() + coeff(im, k - 1) * zk.imag();
    }
    return v;
}

Vec2 HarmonicGauge::gradient(const MagneticSetup& s, double x, double y) const {
    Vec2 g{-0.5 * s.eB * xy_weight * y, -0.5 * s.eB * xy_weight * x};
    const std::size_t n = std::max(re.size(), im.size());
    for (std::size_t k = 1; k <= n; ++k) {
        // d/dx z^k = k z^{k-1}, d/dy z^k = i k z^{k-1}
        cplx d = double(k) * zpow(x, y, int(k) - 1);
        double cr = coeff(re, k - 1), ci = coeff(im, k - 1);
        g.x += cr * d.real() + ci * d.imag();
        g.y += -cr * d.imag() + ci * d.real();
    }
    return g;
}

Jacobian2 HarmonicGauge::hessian(const MagneticSetup& s, double x, double y) const {
    Jacobian2 h;
    h.xy = h.yx = -0.5 * s.eB * xy_weight;
    const std::size_t n = std::max(re.size(), im.size());
    for (std::size_t k = 2; k <= n; ++k) {
        cplx d2 = double(k) * double(k - 1) * zpow(x, y, int(k) - 2);
        double cr = coeff(re, k - 1), ci = coeff(im, k - 1);
        h.xx += cr * d2.real() + ci * d2.imag();
        h.yy += -cr * d2.real() - ci * d2.imag();
        double mixed = -cr * d2.imag() + ci * d2.real();
        h.xy += mixed;
        h.yx += mixed;
    }
    return h;
}

HarmonicGauge HarmonicGauge::operator+(const HarmonicGauge& o) const {
    HarmonicGauge r;
    r.re.resize(std::max(re.size(), o.re.size()));
    r.im.resize(std::max(im.size(), o.im.size()));
    for (std::size_t i = 0; i < r.re.size(); ++i) r.re[i] = coeff(re, i) + coeff(o.re, i);
    for (std::size_t i = 0; i < r.im.size(); ++i) r.im[i] = coeff(im, i) + coeff(o.im, i);
    r.xy_weight = xy_weight + o.xy_weight;
    trim(r.re);
    trim(r.im);
    return r;
}

HarmonicGauge HarmonicGauge::operator-() const {
    HarmonicGauge r = *this;
    for (auto& c : r.re) c = -c;
    for (auto& c : r.im) c = -c;
    r.xy_weight = -r.xy_weight;
    return r;
}

bool HarmonicGauge::operator==(const HarmonicGauge& o) const {
    HarmonicGauge d = *this - o;
    return d.is_zero();
}

std::string GaugeChoice::name() const {
    std::string b = base == StandardGauge::Symmetric ? "Symmetric" : base == StandardGauge::Landau1 ? "Landau1" : "Landau2";
    if (is_standard()) return b;
    std::ostringstream os;
    os << "Deformed(" << b << ",deg=" << chi.degree() << ")";
    return os.str();
}

Vec2 potential(const MagneticSetup& s, const GaugeChoice& g, double x, double y) {
    Vec2 a;
    switch (g.base) {
        case StandardGauge::Symmetric: a = {-0.5 * s.eB * y, 0.5 * s.eB * x}; break;
        case StandardGauge::Landau1: a = {-s.eB * y, 0.0}; break;
        case StandardGauge::Landau2: a = {0.0, s.eB * x}; break;
    }
    if (!g.chi.is_zero()) {
        Vec2 d = g.chi.gradient(s, x, y);
        a.x += d.x;
        a.y += d.y;
    }
    return a;
}

Jacobian2 potential_jacobian(const MagneticSetup& s, const GaugeChoice& g, double x, double y) {
    Jacobian2 j;
    switch (g.base) {
        case StandardGauge::Symmetric: j.xy = -0.5 * s.eB; j.yx = 0.5 * s.eB; break;
        case StandardGauge::Landau1: j.xy = -s.eB; break;
        case StandardGauge::Landau2: j.yx = s.eB; break;
    }
    if (!g.chi.is_zero()) {
        Jacobian2 h = g.chi.hessian(s, x, y);
        j.xx += h.xx;
        j.xy += h.xy;
        j.yx += h.yx;
        j.yy += h.yy;
    }
    return j;
}

double divergence(const MagneticSetup& s, const GaugeChoice& g, double x, double y) {
    Jacobian2 j = potential_jacobian(s, g, x, y);
    return j.xx + j.yy;
}

CurlReport curl_check(const MagneticSetup& s, const GaugeChoice& g, const std::vector<Vec2>& points) {
    s.validate();
    CurlReport r;
    for (const auto& p : points) {
        Jacobian2 j = potential_jacobian(s, g, p.x, p.y);
        r.max_curl_deviation = std::max(r.max_curl_deviation, std::abs(j.yx - j.xy - s.eB));
        r.max_divergence = std::max(r.max_divergence, std::abs(j.xx + j.yy));
        ++r.samples;
    }
    return r;
}

std::complex<double> gauge_phase(const MagneticSetup& s, const HarmonicGauge& chi, double x, double y) {
    return std::polar(1.0, -chi.value(s, x, y));
}

HarmonicGauge relative_gauge(const GaugeChoice& from, const GaugeChoice& to) {
    return (base_offset(to.base) + to.chi) - (base_offset(from.base) + from.chi);
}

}  // namespace landau
