#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>

#include "cylbend/tensor.hpp"

namespace cylbend {

class DegenerateMaterial : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class IllPosedCurvature : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct IsotropicModuli {
    double mu = 0.0;
    double lambda = 0.0;

    static IsotropicModuli from_mu_kappa(double mu, double kappa) { return {mu, kappa - 2.0 * mu / 3.0}; }

    double kappa() const { return (2.0 * mu + 3.0 * lambda) / 3.0; }
    double nu() const { return lambda / (2.0 * (lambda + mu)); }
    double young() const { return mu * (3.0 * lambda + 2.0 * mu) / (lambda + mu); }
    double lambda_plane_stress() const { return 2.0 * lambda * mu / (lambda + 2.0 * mu); }
    // (h^3/12) coefficient of the plane-strain plate rigidity, 4 mu (lambda+mu)/(lambda+2mu)
    double plate_modulus() const { return 4.0 * mu * (lambda + mu) / (lambda + 2.0 * mu); }

    // throws DegenerateMaterial unless mu > 0 and kappa > 0
    void require_positive(const std::string& what) const;
};

struct MaterialScales {
    IsotropicModuli e;
    // absent micro moduli stand for an infinitely stiff micro scale
    std::optional<IsotropicModuli> micro;
    double mu_c = 0.0;
    double mu = 1.0;
    double Lc = 0.0;
    double a1 = 1.0;
    double a2 = 1.0;
    double a3 = 1.0;

    const IsotropicModuli& micro_or_throw() const;
};

IsotropicModuli homogenize(const MaterialScales& s);

struct MindlinCoefficients {
    double mu_hat = 0.0;
    double lambda_hat = 0.0;
    double b1 = 0.0;
    double b2 = 0.0;
    double b3 = 0.0;
    double g1 = 0.0;
    double g2 = 0.0;
    // a_hat[i] for i = 1..15, index 0 unused
    std::array<double, 16> a_hat{};
};

MindlinCoefficients to_mindlin_reduced(const MaterialScales& s);
// Coefficients reproducing mu Lc^2/2 (a1 |dev sym Curl P|^2 + a2 |skew Curl P|^2 + a3/3 tr^2 Curl P).
MindlinCoefficients to_mindlin_relaxed(const MaterialScales& s);
// The commonly quoted table; a1_hat and a11_hat differ from the energy-consistent values.
MindlinCoefficients to_mindlin_relaxed_quoted(const MaterialScales& s);

struct SecondGradientCoefficients {
    // a_hat[i] for i = 1..5, index 0 unused
    std::array<double, 6> a_hat{};
};

// Isotropic curvature energy in Mindlin's invariants of chi_ijk = P_jk,i, e.g.
// a1_hat chi_iik chi_kjj + ... + a15_hat/2 chi_ijk chi_kji.
double mindlin_curvature_energy(const MindlinCoefficients& c, const Third& chi);

SecondGradientCoefficients to_mindlin_second_gradient(double mu, double Lc, double a1, double a2, double a3);

// a2_hat chi_ijj chi_ikk + a4_hat chi_ijk chi_ijk + a5_hat chi_ijk chi_kji with
// chi_ijk = u_k,ij (the a1_hat and a3_hat invariants carry zero weight here)
double mindlin_curvature_energy(const SecondGradientCoefficients& c, const Third& chi);

struct CosseratClassicCoefficients {
    double alpha = 0.0;
    double beta = 0.0;
    double gamma = 0.0;
};

CosseratClassicCoefficients cosserat_classic(double a1, double a2, double a3);

struct LakesResult {
    double ell_b = 0.0;
    double omega = 1.0;
};

LakesResult lakes_omega(const IsotropicModuli& macro, double gamma_tilde, double h);

}  // namespace cylbend
