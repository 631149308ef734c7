#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "cylbend/closed_form.hpp"

namespace cylbend {

class DegenerateParameters : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// M P'' = K P + f kappa x2 for P = (P11, P22, P33) (or S11, S22, S33) with
// v' eliminated through the vanishing normal stress. Free surfaces give
// M P'(+-h/2) = 0.
struct LinearOdeSystem {
    Model model = Model::Micromorphic;
    std::vector<std::string> unknowns;
    Eigen::Matrix3d M = Eigen::Matrix3d::Zero();
    Eigen::Matrix3d K = Eigen::Matrix3d::Zero();
    Eigen::Vector3d f = Eigen::Vector3d::Zero();

    int dimension() const { return 3; }
    // y = (P, P'), y' = A y + (0, M^-1 f kappa x2)
    Eigen::Matrix<double, 6, 6> companion() const;
    // rows acting on y at x2 = +-h/2: (0, M)
    Eigen::Matrix<double, 3, 6> boundary_rows() const;
};

LinearOdeSystem assemble_micromorphic(const BendingProblem& p);
LinearOdeSystem assemble_microstrain(const BendingProblem& p);
LinearOdeSystem assemble(const BendingProblem& p);

BendingSolution solve_semi_analytic(const LinearOdeSystem& sys, const BendingProblem& p);

// (mu_e, kappa_e, mu_c) scaled by t before solving the classical micromorphic system
BendingSolution penalized_second_gradient_limit(const BendingProblem& p, double t);

// any model: closed form where available, semi-analytic otherwise
BendingSolution solve(const BendingProblem& p);

}  // namespace cylbend
