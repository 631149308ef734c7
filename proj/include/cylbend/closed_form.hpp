#pragma once

#include <string>
#include <utility>
#include <vector>

#include "cylbend/problem.hpp"
#include "cylbend/profile.hpp"

namespace cylbend {

struct BendingSolution {
    // problem with the variant restrictions already applied to the scales
    BendingProblem problem;
    std::vector<std::pair<std::string, HypPoly>> fields;
    std::vector<std::pair<std::string, double>> coeffs;
    double Mc = 0.0;
    double Mm = 0.0;
    double Wtot = 0.0;
    double Deff = 0.0;
    // true when Lc < 1e-9 h and the analytic Lc -> 0 limit was returned
    bool lc_limit = false;

    bool has_field(const std::string& name) const;
    const HypPoly& field(const std::string& name) const;
    void set_field(const std::string& name, HypPoly f);
    bool has_coeff(const std::string& name) const;
    double coeff(const std::string& name) const;
    void set_coeff(const std::string& name, double v);

    std::vector<std::string> field_names() const;
    // 201 uniform samples over [-h/2, h/2] unless n is given
    std::vector<double> grid(int n = 201) const;
    std::vector<double> sample(const std::string& name, int n = 201) const;
};

// Normalizations used in the stiffness tables.
inline double moment_scale(const BendingProblem& p) { return p.h * p.h * p.h / 12.0 * p.kappa; }
inline double energy_scale(const BendingProblem& p) { return 0.5 * p.h * p.h * p.h / 12.0 * p.kappa * p.kappa; }

BendingSolution solve_cauchy(const BendingProblem& p);
BendingSolution solve_relaxed(const BendingProblem& p);
BendingSolution solve_micro_stretch(const BendingProblem& p);
BendingSolution solve_cosserat(const BendingProblem& p);
BendingSolution solve_couple_stress(const BendingProblem& p);
BendingSolution solve_micro_void(const BendingProblem& p);
BendingSolution solve_second_gradient(const BendingProblem& p);

// Dispatch for the closed-form models; throws UnsupportedVariant for the
// semi-analytic ones (micromorphic, micro-strain).
BendingSolution solve_closed_form(const BendingProblem& p);
bool has_closed_form(Model m);

struct LimitStiffness {
    double D0 = 0.0;
    // infinity when unbounded
    double Dinf = 0.0;
    bool unbounded = false;
    std::string label_inf;
};

LimitStiffness limit_stiffnesses(const BendingProblem& p);

// Relaxed model with mu_micro -> infinity at fixed Lc: Mm/kappa = h mu Lc^2 (a1+a2)/2.
double relaxed_micro_rigid_moment(const BendingProblem& p);

struct CouplingTractions {
    // profiles on the face with outward normal +e1; the other face flips sign
    HypPoly t1;
    HypPoly eta12;
    // max |(P - Du) x e1| over the sampled grid
    double coupling_residual = 0.0;
};

CouplingTractions consistent_coupling_tractions(const BendingSolution& sol, int n = 201);

}  // namespace cylbend
