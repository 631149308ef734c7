#include "cylbend/materials.hpp"

#include <cmath>

namespace cylbend {

void IsotropicModuli::require_positive(const std::string& what) const {
    if (!(mu > 0.0) || !(kappa() > 0.0)) throw DegenerateMaterial(what + ": shear and bulk moduli must be positive");
}

const IsotropicModuli& MaterialScales::micro_or_throw() const {
    if (!micro) throw DegenerateMaterial("micro moduli are required for this model");
    return *micro;
}

IsotropicModuli homogenize(const MaterialScales& s) {
    if (!s.micro) return s.e;
    const double mue = s.e.mu, mum = s.micro->mu;
    const double ke = s.e.kappa(), km = s.micro->kappa();
    if (mue + mum == 0.0 || ke + km == 0.0) throw DegenerateMaterial("homogenize: zero denominator");
    return IsotropicModuli::from_mu_kappa(mue * mum / (mue + mum), ke * km / (ke + km));
}

MindlinCoefficients to_mindlin_reduced(const MaterialScales& s) {
    const IsotropicModuli& m = s.micro_or_throw();
    const double g = s.mu * s.Lc * s.Lc;
    MindlinCoefficients c;
    c.mu_hat = m.mu;
    c.lambda_hat = m.lambda;
    c.b1 = s.e.lambda + m.lambda;
    c.b2 = s.e.mu + m.mu + s.mu_c;
    c.b3 = s.e.mu + m.mu - s.mu_c;
    c.g1 = -m.lambda;
    c.g2 = -2.0 * m.mu;
    c.a_hat[4] = g * (2.0 * s.a3 - s.a1) / 3.0;
    c.a_hat[10] = g * (s.a1 + s.a2) / 2.0;
    c.a_hat[13] = g * (s.a1 - s.a2) / 2.0;
    return c;
}

namespace {

MindlinCoefficients relaxed_moduli(const MaterialScales& s) {
    MindlinCoefficients c;
    if (s.micro) {
        const IsotropicModuli& m = *s.micro;
        c.mu_hat = m.mu;
        c.lambda_hat = m.lambda;
        c.b1 = s.e.lambda + m.lambda;
        c.b2 = s.e.mu + m.mu + s.mu_c;
        c.b3 = s.e.mu + m.mu - s.mu_c;
        c.g1 = -m.lambda;
        c.g2 = -2.0 * m.mu;
    }
    return c;
}

}  // namespace

MindlinCoefficients to_mindlin_relaxed(const MaterialScales& s) {
    MindlinCoefficients c = relaxed_moduli(s);
    const double g = s.mu * s.Lc * s.Lc;
    auto& a = c.a_hat;
    a[1] = g * (s.a1 - s.a2) / 2.0;
    a[3] = g * (s.a2 - s.a1) / 2.0;
    a[4] = a[3];
    a[10] = g * (2.0 * s.a1 + s.a3) / 3.0;
    a[15] = -a[10];
    a[11] = g * (s.a3 - s.a1) / 3.0;
    a[13] = g * (s.a1 - s.a3) / 3.0;
    a[14] = a[13];
    return c;
}

MindlinCoefficients to_mindlin_relaxed_quoted(const MaterialScales& s) {
    MindlinCoefficients c = relaxed_moduli(s);
    const double g = s.mu * s.Lc * s.Lc;
    auto& a = c.a_hat;
    a[1] = g * (2.0 * s.a1 - s.a2) / 4.0;
    a[3] = g * (s.a2 - s.a1) / 2.0;
    a[4] = a[3];
    a[10] = g * (2.0 * s.a1 + s.a3) / 3.0;
    a[15] = -a[10];
    a[11] = -2.0 * a[1] - a[3] + a[10] / 2.0;
    a[13] = 4.0 * a[1] + 2.0 * a[3] - a[10];
    a[14] = a[13];
    return c;
}

SecondGradientCoefficients to_mindlin_second_gradient(double mu, double Lc, double a1, double a2, double a3) {
    const double g = mu * Lc * Lc;
    SecondGradientCoefficients c;
    c.a_hat[2] = g * (2.0 * a3 - 3.0 * a1) / 18.0;
    c.a_hat[4] = g * (a1 + a2) / 4.0;
    c.a_hat[5] = g * (a1 - a2) / 4.0;
    return c;
}

double mindlin_curvature_energy(const MindlinCoefficients& c, const Third& x) {
    const auto& a = c.a_hat;
    double t1 = 0, t2 = 0, t3 = 0, t4 = 0, t5 = 0, t8 = 0, t10 = 0, t11 = 0, t13 = 0, t14 = 0, t15 = 0;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k) {
                t1 += x(i, i, k) * x(k, j, j);
                t2 += x(i, i, k) * x(j, k, j);
                t3 += x(i, i, k) * x(j, j, k);
                t4 += x(i, j, j) * x(i, k, k);
                t5 += x(i, j, j) * x(k, i, k);
                t8 += x(i, j, i) * x(k, j, k);
                t10 += x(i, j, k) * x(i, j, k);
                t11 += x(i, j, k) * x(j, k, i);
                t13 += x(i, j, k) * x(i, k, j);
                t14 += x(i, j, k) * x(j, i, k);
                t15 += x(i, j, k) * x(k, j, i);
            }
    return a[1] * t1 + a[2] * t2 + 0.5 * a[3] * t3 + 0.5 * a[4] * t4 + a[5] * t5 + 0.5 * a[8] * t8 +
           0.5 * a[10] * t10 + a[11] * t11 + 0.5 * a[13] * t13 + 0.5 * a[14] * t14 + 0.5 * a[15] * t15;
}

double mindlin_curvature_energy(const SecondGradientCoefficients& c, const Third& x) {
    double t2 = 0, t4 = 0, t5 = 0;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k) {
                t2 += x(i, j, j) * x(i, k, k);
                t4 += x(i, j, k) * x(i, j, k);
                t5 += x(i, j, k) * x(k, j, i);
            }
    return c.a_hat[2] * t2 + c.a_hat[4] * t4 + c.a_hat[5] * t5;
}

CosseratClassicCoefficients cosserat_classic(double a1, double a2, double a3) {
    return {(4.0 * a3 - a1) / 3.0, (a1 - a2) / 2.0, (a1 + a2) / 2.0};
}

LakesResult lakes_omega(const IsotropicModuli& macro, double gamma_tilde, double h) {
    if (!(h > 0.0)) throw std::invalid_argument("lakes_omega: h must be positive");
    macro.require_positive("lakes_omega");
    LakesResult r;
    r.ell_b = std::sqrt(gamma_tilde / (4.0 * macro.mu));
    r.omega = 1.0 + 24.0 * (r.ell_b / h) * (r.ell_b / h) * (1.0 - macro.nu());
    return r;
}

}  // namespace cylbend
