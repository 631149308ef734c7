#include "cylbend/semi_analytic.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "cylbend/tensor.hpp"

namespace cylbend {

Eigen::Matrix<double, 6, 6> LinearOdeSystem::companion() const {
    Eigen::Matrix<double, 6, 6> A = Eigen::Matrix<double, 6, 6>::Zero();
    A.block<3, 3>(0, 3) = Eigen::Matrix3d::Identity();
    A.block<3, 3>(3, 0) = M.ldlt().solve(K);
    return A;
}

Eigen::Matrix<double, 3, 6> LinearOdeSystem::boundary_rows() const {
    Eigen::Matrix<double, 3, 6> B = Eigen::Matrix<double, 3, 6>::Zero();
    B.block<3, 3>(0, 3) = M;
    return B;
}

namespace {

LinearOdeSystem assemble_common(const BendingProblem& p, Model model) {
    if (p.model != model) throw UnsupportedVariant("assemble called for " + to_string(p.model));
    validate(p);
    const MaterialScales s = effective_scales(p);
    if (!(s.a3 > 0.0))
        throw IllPosedCurvature("the semi-analytic solver needs a3 > 0 (the trace mode has no gradient energy otherwise)");
    const IsotropicModuli& e = s.e;
    const IsotropicModuli& m = *s.micro;
    const double le = e.lambda_plane_stress(), me = e.mu, lm = m.lambda, mm = m.mu;
    LinearOdeSystem sys;
    sys.model = model;
    if (model == Model::MicroStrain)
        sys.unknowns = {"S11", "S22", "S33"};
    else
        sys.unknowns = {"P11", "P22", "P33"};
    const double d = 2.0 * (3.0 * s.a1 + s.a3), o = -(3.0 * s.a1 - 2.0 * s.a3);
    Eigen::Matrix3d C;
    C << d, o, o, o, d, o, o, o, d;
    sys.M = s.mu * s.Lc * s.Lc / 9.0 * C;
    const double diag = le + 2.0 * me + lm + 2.0 * mm;
    sys.K << diag, lm, le + lm, lm, lm + 2.0 * mm, lm, le + lm, lm, diag;
    sys.f << le + 2.0 * me, 0.0, le;
    return sys;
}

}  // namespace

LinearOdeSystem assemble_micromorphic(const BendingProblem& p) { return assemble_common(p, Model::Micromorphic); }
LinearOdeSystem assemble_microstrain(const BendingProblem& p) { return assemble_common(p, Model::MicroStrain); }

LinearOdeSystem assemble(const BendingProblem& p) {
    if (p.model == Model::Micromorphic) return assemble_micromorphic(p);
    if (p.model == Model::MicroStrain) return assemble_microstrain(p);
    throw UnsupportedVariant(to_string(p.model) + " is not handled by the semi-analytic solver");
}

BendingSolution solve_semi_analytic(const LinearOdeSystem& sys, const BendingProblem& p) {
    const MaterialScales s = effective_scales(p);
    const double h = p.h, H = 0.5 * h, k = p.kappa;
    BendingSolution sol;
    sol.problem = p;
    sol.problem.scales = s;
    sol.lc_limit = s.Lc < 1e-9 * h;

    // particular part P = -b x2
    const Eigen::Vector3d b = sys.K.ldlt().solve(sys.f) * k;
    std::vector<HypPoly> P(3, HypPoly(H));
    for (int i = 0; i < 3; ++i) P[i].add_poly(1, -b[i]);

    if (!sol.lc_limit) {
        // K phi = gamma M phi with M symmetric positive definite, so the
        // eigenvalues are real and the basis never degenerates
        Eigen::GeneralizedSelfAdjointEigenSolver<Eigen::Matrix3d> es(sys.K, sys.M);
        if (es.info() != Eigen::Success) throw DegenerateParameters("generalized eigenproblem failed");
        const Eigen::Vector3d gam = es.eigenvalues();
        const Eigen::Matrix3d Phi = es.eigenvectors();
        for (int j = 0; j < 3; ++j) {
            sol.set_coeff("gamma" + std::to_string(j + 1), gam[j]);
            if (!(gam[j] > 0.0)) throw DegenerateParameters("non-positive decay rate in the hyperbolic basis");
        }
        // boundary rows: Phi y = b, where y_j scales cosh(r_j x)/cosh(r_j H)
        Eigen::FullPivLU<Eigen::Matrix3d> lu(Phi);
        const double cond = Phi.norm() * Phi.inverse().norm();
        if (!lu.isInvertible() || cond > 1e12) {
            std::ostringstream os;
            os << "boundary system is rank deficient (condition number " << cond << ")";
            throw DegenerateParameters(os.str());
        }
        const Eigen::Vector3d y = lu.solve(b);
        for (int j = 0; j < 3; ++j) {
            const double ell = 1.0 / std::sqrt(gam[j]);
            sol.set_coeff("ell" + std::to_string(j + 1), ell);
            for (int i = 0; i < 3; ++i) P[i].add_term(Phi(i, j) * y[j] * ell, ell, true);
        }
    }
    for (int i = 0; i < 3; ++i) sol.set_field(sys.unknowns[i], P[i]);

    const IsotropicModuli& e = s.e;
    const IsotropicModuli& m = *s.micro;
    HypPoly kx(H);
    kx.add_poly(1, k);
    const HypPoly dv = P[1] + (e.lambda / (e.lambda + 2.0 * e.mu)) * (kx + P[0] + P[2]);
    sol.set_field("dv", dv);
    sol.set_field("v", dv.antiderivative());

    const bool micromorphic = sys.model == Model::Micromorphic;
    const double g = s.mu * s.Lc * s.Lc;
    double ell_min = h;
    for (const auto& t : P[0].terms()) ell_min = std::min(ell_min, t.ell);
    const Quadrature q = layered_gauss_legendre(64, h, ell_min);
    const double lh = e.lambda_plane_stress();
    double Mc = 0.0, W = 0.0;
    for (std::size_t n = 0; n < q.x.size(); ++n) {
        const double x = q.x[n];
        const double p11 = P[0](x), p22 = P[1](x), p33 = P[2](x);
        Mc += q.w[n] * (2.0 * e.mu * (k * x + p11) + lh * (k * x + p11 + p33)) * x;
        Tensor3 Du{{-k * x, 0.0, 0.0}, {0.0, dv(x), 0.0}, {0.0, 0.0, 0.0}};
        Tensor3 Pt{{p11, 0.0, 0.0}, {0.0, p22, 0.0}, {0.0, 0.0, p33}};
        MatrixGradient dP{};
        dP[1] = Tensor3{{P[0].deriv(x, 1), 0.0, 0.0}, {0.0, P[1].deriv(x, 1), 0.0}, {0.0, 0.0, P[2].deriv(x, 1)}};
        if (micromorphic) dP[0] = Tensor3{{0.0, -k, 0.0}, {k, 0.0, 0.0}, {0.0, 0.0, 0.0}};
        const Tensor3 el = micromorphic ? Du - Pt : sym(Du) - Pt;
        double w = e.mu * norm2(devsym(el)) + 0.5 * e.kappa() * trace(el) * trace(el) +
                   s.mu_c * norm2(skew(el)) * (micromorphic ? 1.0 : 0.0) + m.mu * norm2(devsym(Pt)) +
                   0.5 * m.kappa() * trace(Pt) * trace(Pt);
        for (const Tensor3& d : dP)
            w += 0.5 * g *
                 (s.a1 * norm2(micromorphic ? devsym(d) : dev(d)) + (micromorphic ? s.a2 * norm2(skew(d)) : 0.0) +
                  2.0 / 9.0 * s.a3 * trace(d) * trace(d));
        W += q.w[n] * w;
    }
    sol.Mc = Mc;
    // the constant skew gradient of the micromorphic ansatz carries the only
    // higher-order moment; the micro-strain field has none
    sol.Mm = micromorphic ? 2.0 * h * g * s.a2 * k : 0.0;
    sol.Wtot = W;
    sol.Deff = k != 0.0 ? (sol.Mc + sol.Mm) / k : std::nan("");
    return sol;
}

BendingSolution penalized_second_gradient_limit(const BendingProblem& p, double t) {
    if (!(t >= 1.0)) throw std::invalid_argument("penalty factor must be >= 1");
    if (p.model != Model::Micromorphic) throw UnsupportedVariant("penalization applies to the classical micromorphic model");
    BendingProblem q = p;
    const double ke = q.scales.e.kappa() * t;
    q.scales.e = IsotropicModuli::from_mu_kappa(q.scales.e.mu * t, ke);
    q.scales.mu_c *= t;
    BendingSolution sol = solve_semi_analytic(assemble_micromorphic(q), q);
    sol.set_coeff("t", t);
    return sol;
}

BendingSolution solve(const BendingProblem& p) {
    if (has_closed_form(p.model)) return solve_closed_form(p);
    return solve_semi_analytic(assemble(p), p);
}

}  // namespace cylbend
