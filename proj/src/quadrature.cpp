#include "landau/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

namespace landau {

namespace {

constexpr double kNewtonTol = 1e-15;
constexpr int kMaxNewton = 100;

}  // namespace

QuadratureRule gauss_legendre(int n) {
    if (n < 1) throw std::invalid_argument("gauss_legendre: need at least one node");
    if (n == 1) return {{0.0}, {2.0}};
    QuadratureRule r;
    r.nodes.resize(n);
    r.weights.resize(n);
    const int half = (n + 1) / 2;
    for (int i = 0; i < half; ++i) {
        double z = std::cos(M_PI * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int it = 0; it < kMaxNewton; ++it) {
            double p0 = 1.0, p1 = z;
            for (int k = 2; k <= n; ++k) {
                double p2 = ((2.0 * k - 1.0) * z * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (z * p1 - p0) / (z * z - 1.0);
            double dz = p1 / dp;
            z -= dz;
            if (std::abs(dz) < kNewtonTol) break;
        }
        // derivative at the converged root
        double p0 = 1.0, p1 = z;
        for (int k = 2; k <= n; ++k) {
            double p2 = ((2.0 * k - 1.0) * z * p1 - (k - 1.0) * p0) / k;
            p0 = p1;
            p1 = p2;
        }
        dp = n * (z * p1 - p0) / (z * z - 1.0);
        double w = 2.0 / ((1.0 - z * z) * dp * dp);
        r.nodes[i] = -z;
        r.nodes[n - 1 - i] = z;
        r.weights[i] = w;
        r.weights[n - 1 - i] = w;
    }
    if (n % 2 == 1) r.nodes[n / 2] = 0.0;
    return r;
}

QuadratureRule gauss_legendre(int n, double a, double b) {
    QuadratureRule r = gauss_legendre(n);
    const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    for (int i = 0; i < n; ++i) {
        r.nodes[i] = mid + half * r.nodes[i];
        r.weights[i] *= half;
    }
    return r;
}

const QuadratureRule& cached_gauss_legendre(int n) {
    static std::mutex mu;
    static std::map<int, QuadratureRule> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, gauss_legendre(n)).first;
    return it->second;
}

// Newton on the orthonormal Hermite recurrence, initial guesses as in the
// classic asymptotic fits
QuadratureRule gauss_hermite(int n) {
    if (n < 1) throw std::invalid_argument("gauss_hermite: need at least one node");
    QuadratureRule r;
    r.nodes.assign(n, 0.0);
    r.weights.assign(n, 0.0);
    const double pim4 = std::pow(M_PI, -0.25);
    const int half = (n + 1) / 2;
    double z = 0.0;
    for (int i = 0; i < half; ++i) {
        if (i == 0) z = std::sqrt(2.0 * n + 1.0) - 1.85575 * std::pow(2.0 * n + 1.0, -0.16667);
        else if (i == 1) z -= 1.14 * std::pow(double(n), 0.426) / z;
        else if (i == 2) z = 1.86 * z - 0.86 * r.nodes[0];
        else if (i == 3) z = 1.91 * z - 0.91 * r.nodes[1];
        else z = 2.0 * z - r.nodes[i - 2];
        double pp = 0.0;
        for (int it = 0; it < kMaxNewton; ++it) {
            double p1 = pim4, p2 = 0.0;
            for (int j = 0; j < n; ++j) {
                double p3 = p2;
                p2 = p1;
                p1 = z * std::sqrt(2.0 / (j + 1)) * p2 - std::sqrt(double(j) / (j + 1)) * p3;
            }
            pp = std::sqrt(2.0 * n) * p2;
            double dz = p1 / pp;
            z -= dz;
            if (std::abs(dz) < kNewtonTol * std::max(1.0, std::abs(z))) break;
        }
        r.nodes[i] = z;
        r.nodes[n - 1 - i] = -z;
        r.weights[i] = 2.0 / (pp * pp);
        r.weights[n - 1 - i] = r.weights[i];
    }
    // ascending order
    std::vector<double> x(r.nodes.rbegin(), r.nodes.rend());
    std::vector<double> w(r.weights.rbegin(), r.weights.rend());
    r.nodes = x;
    r.weights = w;
    if (n % 2 == 1) r.nodes[n / 2] = 0.0;
    return r;
}

QuadratureRule gauss_laguerre(int n, double alpha) {
    if (n < 1) throw std::invalid_argument("gauss_laguerre: need at least one node");
    if (!(alpha > -1.0)) throw std::invalid_argument("gauss_laguerre: alpha must exceed -1");
    QuadratureRule r;
    r.nodes.assign(n, 0.0);
    r.weights.assign(n, 0.0);
    double z = 0.0;
    for (int i = 0; i < n; ++i) {
        if (i == 0) z = (1.0 + alpha) * (3.0 + 0.92 * alpha) / (1.0 + 2.4 * n + 1.8 * alpha);
        else if (i == 1) z += (15.0 + 6.25 * alpha) / (1.0 + 0.9 * alpha + 2.5 * n);
        else {
            double ai = i - 1;
            z += ((1.0 + 2.55 * ai) / (1.9 * ai) + 1.26 * ai * alpha / (1.0 + 3.5 * ai)) *
                 (z - r.nodes[i - 2]) / (1.0 + 0.3 * alpha);
        }
        double pp = 0.0, p2 = 0.0;
        for (int it = 0; it < kMaxNewton; ++it) {
            double p1 = 1.0;
            p2 = 0.0;
            for (int j = 0; j < n; ++j) {
                double p3 = p2;
                p2 = p1;
                p1 = ((2.0 * j + 1.0 + alpha - z) * p2 - (j + alpha) * p3) / (j + 1);
            }
            pp = (n * p1 - (n + alpha) * p2) / z;
            double dz = p1 / pp;
            z -= dz;
            if (std::abs(dz) < kNewtonTol * std::max(1.0, z)) break;
        }
        r.nodes[i] = z;
        r.weights[i] = -std::exp(std::lgamma(alpha + n) - std::lgamma(double(n))) / (pp * n * p2);
    }
    return r;
}

}  // namespace landau
