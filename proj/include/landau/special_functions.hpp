#pragma once

#include <complex>
#include <vector>

#include "landau/setup.hpp"

namespace landau {

// physicists' Hermite polynomial by three-term recurrence
double hermite(int n, double xi);

// (sqrt(pi) 2^n n!)^{-1/2} H_n(xi) exp(-xi^2/2), normalized recurrence so it
// stays finite where H_n itself would overflow
double hermite_function(int n, double xi);

double assoc_laguerre(int k, double alpha, double xi);

// lambda^n H_n(c / lambda) with lambda^2 given, valid for complex arguments
// and for lambda -> 0 (gives (2c)^n)
std::complex<double> scaled_hermite(int n, std::complex<double> c,
                                    std::complex<double> lambda_sq);

double log_factorial(int n);

struct NormConstants {
    double n_n;   // strip normalization of the Landau-gauge Hermite function
    double n_nm;  // disk normalization of the symmetric-gauge state
    double c_nm;  // prefactor of the strip/disk overlap kernel
};

NormConstants norm_constants(const MagneticSetup& setup, int n, int m);

}  // namespace landau
