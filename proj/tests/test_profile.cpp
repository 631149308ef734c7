#include <doctest.h>

#include <cmath>

#include "cylbend/closed_form.hpp"
#include "gen.hpp"

using namespace cylbend;
using cylbend::testing::Gen;

namespace {

HypPoly random_profile(Gen& g, double half) {
    HypPoly f(half);
    for (int k = 0; k < 4; ++k) f.add_poly(k, g.normal());
    for (int i = 0; i < 3; ++i) f.add_term(g.normal(), g.log_uniform(1e-3, 1e3), g.integer(0, 1) == 1);
    return f;
}

double integral(const HypPoly& f, double a, double b) {
    const Quadrature q = gauss_legendre(64, a, b);
    double s = 0.0;
    for (std::size_t i = 0; i < q.x.size(); ++i) s += q.w[i] * f(q.x[i]);
    return s;
}

}  // namespace

TEST_SUITE("profile") {

TEST_CASE("antiderivative vanishes at zero and integrates") {
    Gen g(81);
    for (int n = 0; n < 50; ++n) {
        const double half = g.log_uniform(0.05, 5.0);
        const HypPoly f = random_profile(g, half);
        const HypPoly F = f.antiderivative();
        CHECK(F(0.0) == 0.0);
        for (double t : {-1.0, -0.3, 0.2, 0.7, 1.0}) {
            const double x = t * half;
            CHECK(std::abs(F.deriv(x, 1) - f(x)) <= 1e-12 * (1.0 + std::abs(f(x))));
        }
        // piecewise, so the boundary layers are resolved
        double ref = 0.0;
        for (int j = 0; j < 40; ++j) ref += integral(f, -half + j * half / 20.0, -half + (j + 1) * half / 20.0);
        CHECK(std::abs(F(half) - F(-half) - ref) <= 1e-10 * (1.0 + std::abs(ref)));
    }
}

TEST_CASE("antiderivative keeps its digits for very long decay lengths") {
    for (double ell : {1e3, 1e6, 1e9}) {
        HypPoly f(0.5);
        // ell sinh(x/ell) / cosh(1/(2 ell)) is x to within (x/ell)^2
        f.add_term(ell, ell, true);
        const HypPoly F = f.antiderivative();
        for (double x : {-0.5, -0.1, 0.3, 0.5}) {
            INFO(ell << " " << x);
            CHECK(std::abs(F(x) - 0.5 * x * x) <= 1e-14 + 0.5 * x * x * 0.25 / (ell * ell));
        }
    }
}

TEST_CASE("shifted terms survive arithmetic") {
    HypPoly f(0.5);
    f.add_term(2.0, 1e5, true);
    const HypPoly F = f.antiderivative();
    const HypPoly G = 3.0 * F + F;
    CHECK(std::abs(G(0.5) - 4.0 * F(0.5)) <= 1e-15);
    CHECK(std::abs(F.derivative()(0.4) - f(0.4)) <= 1e-15);
}

TEST_CASE("saturated hyperbolic helpers") {
    CHECK(stable_tanh(1e3) == 1.0);
    CHECK(stable_tanh(-1e3) == -1.0);
    CHECK(stable_sech(1e3) == 0.0);
    CHECK(std::abs(stable_sech(0.3) - 1.0 / std::cosh(0.3)) <= 2e-16);
    // ell far below half: no overflow, and the surface value is amp
    CHECK(std::abs(scaled_sinh(0.5, 1e-6, 0.5) - 1.0) <= 1e-15);
    CHECK(scaled_cosh(0.0, 1e-6, 0.5) == 0.0);
}

}
