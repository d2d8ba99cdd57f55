#include <doctest.h>

#include <cmath>
#include <thread>
#include <vector>

#include "landau/quadrature.hpp"
#include "landau/special_functions.hpp"

using namespace landau;
using doctest::Approx;

namespace {

double sum(const QuadratureRule& r, double (*f)(double, int), int k) {
    double s = 0.0;
    for (std::size_t i = 0; i < r.nodes.size(); ++i) s += r.weights[i] * f(r.nodes[i], k);
    return s;
}

double power(double x, int k) { return std::pow(x, k); }

}  // namespace

TEST_CASE("gauss-legendre exactness") {
    for (int n : {1, 2, 5, 16, 64, 161}) {
        auto r = gauss_legendre(n);
        CHECK(r.nodes.size() == std::size_t(n));
        for (int k = 0; k <= std::min(2 * n - 1, 40); ++k) {
            double exact = k % 2 ? 0.0 : 2.0 / (k + 1);
            CHECK(sum(r, power, k) == Approx(exact).epsilon(1e-13).scale(1.0));
        }
    }
    auto r = gauss_legendre(8, 1.0, 3.0);
    CHECK(sum(r, power, 3) == Approx(20.0));
    CHECK_THROWS_AS(gauss_legendre(0), std::invalid_argument);
}

TEST_CASE("gauss-hermite moments and orthonormality") {
    auto r = gauss_hermite(40);
    for (std::size_t i = 1; i < r.nodes.size(); ++i) CHECK(r.nodes[i] > r.nodes[i - 1]);
    for (int k = 0; k <= 30; k += 2) CHECK(sum(r, power, k) == Approx(std::tgamma(k / 2.0 + 0.5)).epsilon(1e-12));
    // hermite functions without their Gaussian, weight exp(-x^2) supplied by the rule
    for (int a = 0; a <= 8; ++a)
        for (int b = 0; b <= 8; ++b) {
            double s = 0.0;
            for (std::size_t i = 0; i < r.nodes.size(); ++i) {
                double x = r.nodes[i];
                s += r.weights[i] * hermite_function(a, x) * hermite_function(b, x) * std::exp(x * x);
            }
            CHECK(s == Approx(a == b ? 1.0 : 0.0).epsilon(1e-12).scale(1.0));
        }
}

TEST_CASE("gauss-laguerre moments") {
    for (double alpha : {0.0, 1.0, 2.5}) {
        auto r = gauss_laguerre(30, alpha);
        for (int k = 0; k <= 20; ++k)
            CHECK(sum(r, power, k) == Approx(std::tgamma(k + alpha + 1.0)).epsilon(1e-11));
        // generalized Laguerre orthogonality
        for (int a = 0; a <= 5; ++a)
            for (int b = 0; b <= 5; ++b) {
                double s = 0.0;
                for (std::size_t i = 0; i < r.nodes.size(); ++i)
                    s += r.weights[i] * assoc_laguerre(a, alpha, r.nodes[i]) * assoc_laguerre(b, alpha, r.nodes[i]);
                double exact = a == b ? std::tgamma(a + alpha + 1.0) / std::tgamma(a + 1.0) : 0.0;
                CHECK(s == Approx(exact).epsilon(1e-10).scale(1.0));
            }
    }
    CHECK_THROWS_AS(gauss_laguerre(5, -1.0), std::invalid_argument);
}

TEST_CASE("cached rule is shared across threads") {
    std::vector<const QuadratureRule*> seen(4);
    std::vector<std::thread> pool;
    for (int i = 0; i < 4; ++i) pool.emplace_back([&, i] { seen[i] = &cached_gauss_legendre(77); });
    for (auto& t : pool) t.join();
    for (auto* p : seen) CHECK(p == seen[0]);
    CHECK(seen[0]->nodes == gauss_legendre(77).nodes);
}
