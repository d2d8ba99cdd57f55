#pragma once

#include <vector>

namespace landau {

struct QuadratureRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

QuadratureRule gauss_legendre(int n);  // [-1, 1]
QuadratureRule gauss_legendre(int n, double a, double b);
QuadratureRule gauss_hermite(int n);   // weight exp(-x^2)
QuadratureRule gauss_laguerre(int n, double alpha);  // weight x^alpha exp(-x)

// cached [-1, 1] rule, safe to call from several threads
const QuadratureRule& cached_gauss_legendre(int n);

}  // namespace landau
