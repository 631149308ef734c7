#pragma once

#include <random>

#include "cylbend/materials.hpp"
#include "cylbend/problem.hpp"
#include "cylbend/tensor.hpp"

namespace cylbend::testing {

// Small hand-rolled generators for the property tests. Seeds are fixed so a
// failure reproduces.
class Gen {
public:
    explicit Gen(unsigned seed) : rng_(seed) {}

    double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
    double normal() { return std::normal_distribution<double>(0.0, 1.0)(rng_); }
    double log_uniform(double lo, double hi) { return std::exp(uniform(std::log(lo), std::log(hi))); }
    int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

    Vector3 vector() { return {normal(), normal(), normal()}; }
    Tensor3 tensor() {
        Tensor3 t;
        for (double& x : t.m) x = normal();
        return t;
    }
    Tensor3 skew_tensor() { return skew(tensor()); }
    MatrixGradient gradient() { return {tensor(), tensor(), tensor()}; }

    // lambda chosen so that kappa > 0 and nu in (-0.4, 0.45)
    IsotropicModuli moduli() {
        const double mu = log_uniform(0.2, 5.0);
        const double nu = uniform(-0.4, 0.45);
        return {mu, 2.0 * mu * nu / (1.0 - 2.0 * nu)};
    }
    IsotropicModuli nonnegative_lambda_moduli() {
        const double mu = log_uniform(0.2, 5.0);
        return {mu, uniform(0.0, 2.0) * mu};
    }

    MaterialScales scales() {
        MaterialScales s;
        s.e = moduli();
        s.micro = moduli();
        s.mu_c = uniform(0.0, 3.0);
        s.mu = log_uniform(0.2, 5.0);
        s.a1 = uniform(0.2, 3.0);
        s.a2 = uniform(0.2, 3.0);
        s.a3 = uniform(0.2, 3.0);
        return s;
    }

    BendingProblem problem(Model m, Variant v) {
        BendingProblem p;
        p.model = m;
        p.variant = v;
        p.scales = scales();
        p.h = log_uniform(0.1, 10.0);
        p.scales.Lc = log_uniform(1e-2, 1e2) * p.h;
        p.kappa = uniform(0.1, 3.0) * (integer(0, 1) ? 1.0 : -1.0);
        return p;
    }

private:
    std::mt19937_64 rng_;
};

}  // namespace cylbend::testing
