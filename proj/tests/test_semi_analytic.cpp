#include <doctest.h>

#include <cmath>

#include "cylbend/oracle.hpp"
#include "cylbend/semi_analytic.hpp"
#include "gen.hpp"

using namespace cylbend;
using cylbend::testing::Gen;

namespace {

double rel(double a, double b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

BendingProblem soft_meso(Model m, double Lc) {
    BendingProblem p;
    p.model = m;
    p.scales.e = {1.0 / 3.0, 1.0 / 8.0};
    p.scales.micro = IsotropicModuli{2.0, 1.0};
    p.scales.mu = 1.0;
    p.scales.Lc = Lc;
    p.scales.a1 = p.scales.a2 = 0.5;
    p.scales.a3 = 1.5;
    return p;
}

double plate_D(const IsotropicModuli& m, double h) { return h * h * h / 12.0 * m.plate_modulus(); }

}  // namespace

TEST_SUITE("semi_analytic") {

TEST_CASE("decoupling for zero Poisson and 3 a1 = 2 a3") {
    BendingProblem p = soft_meso(Model::Micromorphic, 1.0);
    p.scales.e.lambda = 0.0;
    p.scales.micro->lambda = 0.0;
    p.scales.a1 = p.scales.a2 = 1.0;
    p.scales.a3 = 1.5;
    const LinearOdeSystem sys = assemble_micromorphic(p);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            if (i != j) {
                CHECK(sys.M(i, j) == 0.0);
                CHECK(sys.K(i, j) == 0.0);
            }
}

TEST_CASE("assembled systems have real hyperbolic spectra") {
    for (Model m : {Model::Micromorphic, Model::MicroStrain}) {
        const LinearOdeSystem sys = assemble(soft_meso(m, 1.0));
        const Eigen::EigenSolver<Eigen::Matrix<double, 6, 6>> es(sys.companion());
        const auto ev = es.eigenvalues();
        for (int i = 0; i < 6; ++i) {
            CHECK(std::abs(ev[i].imag()) <= 1e-12 * std::abs(ev[i]));
            // +- pairs
            double best = INFINITY;
            for (int j = 0; j < 6; ++j) best = std::min(best, std::abs(ev[i] + ev[j]));
            CHECK(best <= 1e-10 * std::abs(ev[i]));
        }
        const auto B = sys.boundary_rows();
        CHECK(B.block<3, 3>(0, 0).norm() == 0.0);
        CHECK((B.block<3, 3>(0, 3) - sys.M).norm() == 0.0);
    }
}

TEST_CASE("zero curvature gives the zero solution") {
    BendingProblem p = soft_meso(Model::MicroStrain, 0.3);
    p.kappa = 0.0;
    const BendingSolution s = solve(p);
    for (const auto& name : s.field_names())
        for (double x : s.sample(name)) CHECK(x == 0.0);
    CHECK(s.Wtot == 0.0);
}

TEST_CASE("micro-strain limits") {
    BendingProblem p = soft_meso(Model::MicroStrain, 1e-4);
    MaterialScales s = p.scales;
    const double Dmac = plate_D(homogenize(s), p.h);
    CHECK(rel(solve(p).Deff, Dmac) <= 1e-6);
    p.scales.Lc = 1e3;
    const double D3 = solve(p).Deff;
    p.scales.Lc = 1e4;
    const double D4 = solve(p).Deff;
    CHECK(std::abs(D4 / D3 - 1.0) < 1e-3);
    CHECK(rel(D4, limit_stiffnesses(p).Dinf) < 1e-3);
}

TEST_CASE("classical micromorphic grows like Lc squared") {
    BendingProblem p = soft_meso(Model::Micromorphic, 1e3);
    const double D3 = solve(p).Deff;
    p.scales.Lc = 1e4;
    const double D4 = solve(p).Deff;
    CHECK(std::abs(std::log10(D4 / D3) - 2.0) <= 0.05);
}

TEST_CASE("penalization towards second gradient") {
    BendingProblem p;
    p.model = Model::Micromorphic;
    p.scales.e = {1.0, 0.0};
    p.scales.micro = IsotropicModuli{1.0, 0.0};
    p.scales.mu_c = 1.0;
    p.scales.Lc = 1.0;
    p.scales.a1 = 2.0;
    p.scales.a2 = 1.0;
    p.scales.a3 = 0.5;
    const BendingSolution s1 = penalized_second_gradient_limit(p, 1.0);
    const BendingSolution s0 = solve(p);
    CHECK(s1.Deff == s0.Deff);
    double prev = s1.Deff;
    for (double t : {10.0, 100.0, 1000.0}) {
        const double D = penalized_second_gradient_limit(p, t).Deff;
        CHECK(D >= prev);
        prev = D;
    }
    BendingProblem sg = p;
    sg.model = Model::SecondGradient;
    sg.variant = Variant::Full;
    sg.scales.e = *p.scales.micro;
    sg.scales.micro.reset();
    const double Dsg = solve(sg).Deff;
    CHECK(std::abs(penalized_second_gradient_limit(p, 1e4).Deff / Dsg - 1.0) <= 0.01);
    CHECK_THROWS_AS(penalized_second_gradient_limit(p, 0.5), std::invalid_argument);
}

TEST_CASE("reconstructed fields satisfy the equations, the faces and parity") {
    Gen g(41);
    for (Model m : {Model::Micromorphic, Model::MicroStrain})
        for (int n = 0; n < 10; ++n) {
            BendingProblem p = g.problem(m, Variant::None);
            const BendingSolution s = solve(p);
            const ResidualPair r = solution_residuals(s);
            CHECK(r.equilibrium <= 1e-8);
            CHECK(r.boundary <= 1e-10);
            for (const auto& name : assemble(p).unknowns) {
                const HypPoly& f = s.field(name);
                double sup = 0.0, asym = 0.0;
                for (double x : s.grid()) {
                    sup = std::max(sup, std::abs(f(x)));
                    asym = std::max(asym, std::abs(f(x) + f(-x)));
                }
                CHECK(asym <= 1e-12 * sup);
            }
            CHECK(rel(2.0 * s.Wtot / (p.kappa * p.kappa), (s.Mc + s.Mm) / p.kappa) <= 1e-9);
            if (m == Model::MicroStrain) CHECK(s.Mm == 0.0);
        }
}

TEST_CASE("ill-posed curvature weights") {
    BendingProblem p = soft_meso(Model::Micromorphic, 1.0);
    p.scales.a3 = 0.0;
    CHECK_THROWS_AS(assemble(p), IllPosedCurvature);
    p = soft_meso(Model::Cauchy, 1.0);
    CHECK_THROWS_AS(assemble(p), UnsupportedVariant);
}

}
