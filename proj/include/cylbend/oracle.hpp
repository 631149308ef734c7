#pragma once

#include <Eigen/Dense>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "cylbend/closed_form.hpp"

namespace cylbend {

// Energy density of one model restricted to the cylindrical-bending ansatz at
// x1 = 0. The state is s = (q, q', kappa, kappa x2) for the unknown fields q;
// the density is a quadratic form in s.
struct ModelEnergy {
    std::vector<std::string> unknowns;
    std::function<double(const std::vector<double>&)> density;

    int nq() const { return static_cast<int>(unknowns.size()); }
    int state_size() const { return 2 * nq() + 2; }
    int kappa_index() const { return 2 * nq(); }
    int kx_index() const { return 2 * nq() + 1; }
    // W(s) = 1/2 s^T H s, built by polarization
    Eigen::MatrixXd hessian() const;
};

ModelEnergy model_energy(const BendingProblem& p);

struct DiscreteProfile {
    std::vector<double> x;
    std::vector<std::string> names;
    // values[k][i]: field k at node i
    std::vector<std::vector<double>> values;
    // ratio of the largest to the smallest LDL^T pivot
    double condition_estimate = 1.0;

    int n() const { return static_cast<int>(x.size()); }
    const std::vector<double>& field(const std::string& name) const;
};

struct CheckResult {
    std::string name;
    double residual = 0.0;
    double tol = 0.0;
    bool pass = false;
    double runtime_ms = 0.0;
    std::string detail;
};

struct VerificationReport {
    std::vector<CheckResult> checks;

    bool all_pass() const;
    void add(CheckResult c);
    void append(const VerificationReport& o);
    // one JSON object per check
    std::string json_lines() const;
};

class SingularOperator : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Linear finite elements on a uniform grid of n nodes (n odd, 101..100001).
DiscreteProfile fd_solve(const BendingProblem& p, int n);

struct EnergyMoments {
    double Wtot = 0.0;
    double Mc = 0.0;
    double Mm = 0.0;
};

// Integrals over the piecewise linear interpolant of the profile.
EnergyMoments energy_and_moments(const DiscreteProfile& profile, const BendingProblem& p);

// Composite Simpson rule on n nodes applied to the density evaluated on the
// analytic fields of sol.
EnergyMoments quadrature_of_solution(const BendingSolution& sol, int n = 801);

// Euler-Lagrange residual (sup over a uniform grid of n nodes, relative to
// the size of the individual terms) and natural boundary residual at +-h/2.
struct ResidualPair {
    double equilibrium = 0.0;
    double boundary = 0.0;
};
ResidualPair solution_residuals(const BendingSolution& sol, int n = 201);

// Copy of sol with one profile coefficient scaled by (1 + rel).
BendingSolution mutate_solution(const BendingSolution& sol, double rel = 1e-3);

VerificationReport neumann_identity_check(const BendingProblem& p);

struct VerifyOptions {
    std::vector<int> grids{201, 401, 801};
    double stiffness_tol = 5e-5;
    double order_target = 2.0;
    double order_tol = 0.2;
    double energy_tol = 1e-6;
    double bc_tol = 1e-10;
    double ode_tol = 1e-9;
    bool sweeps = true;
};

VerificationReport verify_model(const BendingProblem& p, const VerifyOptions& opt = {});

// Richardson order from three successive refinements by 2; empty when either
// difference is below the given absolute noise level.
std::optional<double> richardson_order(double coarse, double mid, double fine, double noise);

}  // namespace cylbend
