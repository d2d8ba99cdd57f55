#include "landau/special_functions.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace landau {

namespace {

void require_degree(int n, const char* what) {
    if (n < 0) throw std::domain_error(std::string(what) + ": negative degree " + std::to_string(n));
}

}  // namespace

double hermite(int n, double xi) {
    require_degree(n, "hermite");
    if (n == 0) return 1.0;
    double h0 = 1.0;
    double h1 = 2.0 * xi;
    for (int k = 1; k < n; ++k) {
        double h2 = 2.0 * xi * h1 - 2.0 * k * h0;
        h0 = h1;
        h1 = h2;
    }
    return h1;
}

double hermite_function(int n, double xi) {
    require_degree(n, "hermite_function");
    const double pi_quarter = std::pow(M_PI, -0.25);
    double p0 = pi_quarter * std::exp(-0.5 * xi * xi);
    if (n == 0) return p0;
    double p1 = std::sqrt(2.0) * xi * p0;
    for (int k = 1; k < n; ++k) {
        double p2 = std::sqrt(2.0 / (k + 1)) * xi * p1 - std::sqrt(double(k) / (k + 1)) * p0;
        p0 = p1;
        p1 = p2;
    }
    return p1;
}

double assoc_laguerre(int k, double alpha, double xi) {
    require_degree(k, "assoc_laguerre");
    if (!(alpha > -1.0)) throw std::domain_error("assoc_laguerre: alpha must exceed -1");
    if (k == 0) return 1.0;
    double l0 = 1.0;
    double l1 = 1.0 + alpha - xi;
    for (int j = 1; j < k; ++j) {
        double l2 = ((2.0 * j + 1.0 + alpha - xi) * l1 - (j + alpha) * l0) / (j + 1.0);
        l0 = l1;
        l1 = l2;
    }
    return l1;
}

std::complex<double> scaled_hermite(int n, std::complex<double> c, std::complex<double> lambda_sq) {
    require_degree(n, "scaled_hermite");
    std::complex<double> p0 = 1.0;
    if (n == 0) return p0;
    std::complex<double> p1 = 2.0 * c;
    for (int k = 1; k < n; ++k) {
        std::complex<double> p2 = 2.0 * c * p1 - 2.0 * double(k) * lambda_sq * p0;
        p0 = p1;
        p1 = p2;
    }
    return p1;
}

double log_factorial(int n) {
    require_degree(n, "log_factorial");
    return std::lgamma(n + 1.0);
}

NormConstants norm_constants(const MagneticSetup& setup, int n, int m) {
    setup.validate();
    require_degree(n, "norm_constants");
    if (m > n) throw std::domain_error("norm_constants: m must not exceed n");
    const double l = setup.magnetic_length();
    NormConstants out{};
    out.n_n = std::exp(-0.5 * (0.5 * std::log(M_PI) + n * std::log(2.0) + log_factorial(n) + std::log(l)));
    const int am = std::abs(m);
    const int top = n - (am + m) / 2;
    const int bottom = n + (am - m) / 2;
    out.n_nm = std::exp(0.5 * (log_factorial(top) - log_factorial(bottom))) / l;
    const int d = n - m;
    out.c_nm = l * std::exp(-0.5 * (0.5 * std::log(M_PI) + d * std::log(2.0) + log_factorial(d) + std::log(l)));
    return out;
}

}  // namespace landau
