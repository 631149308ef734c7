#include "cylbend/closed_form.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "cylbend/tensor.hpp"

namespace cylbend {

bool BendingSolution::has_field(const std::string& name) const {
    return std::any_of(fields.begin(), fields.end(), [&](const auto& f) { return f.first == name; });
}

const HypPoly& BendingSolution::field(const std::string& name) const {
    for (const auto& f : fields)
        if (f.first == name) return f.second;
    throw std::invalid_argument("field '" + name + "' is not defined for model " + to_string(problem.model));
}

void BendingSolution::set_field(const std::string& name, HypPoly f) {
    for (auto& g : fields)
        if (g.first == name) {
            g.second = std::move(f);
            return;
        }
    fields.emplace_back(name, std::move(f));
}

bool BendingSolution::has_coeff(const std::string& name) const {
    return std::any_of(coeffs.begin(), coeffs.end(), [&](const auto& c) { return c.first == name; });
}

double BendingSolution::coeff(const std::string& name) const {
    for (const auto& c : coeffs)
        if (c.first == name) return c.second;
    throw std::invalid_argument("no coefficient '" + name + "'");
}

void BendingSolution::set_coeff(const std::string& name, double v) {
    for (auto& c : coeffs)
        if (c.first == name) {
            c.second = v;
            return;
        }
    coeffs.emplace_back(name, v);
}

std::vector<std::string> BendingSolution::field_names() const {
    std::vector<std::string> out;
    for (const auto& f : fields) out.push_back(f.first);
    return out;
}

std::vector<double> BendingSolution::grid(int n) const { return thickness_grid(problem.h, n); }

std::vector<double> BendingSolution::sample(const std::string& name, int n) const {
    return field(name).sample(grid(n));
}

namespace {

struct Geometry {
    double h, H, I, k, Lc, L;
    bool lim;
};

Geometry geometry(const BendingProblem& p, const MaterialScales& s) {
    Geometry g;
    g.h = p.h;
    g.H = 0.5 * p.h;
    g.I = p.h * p.h * p.h / 12.0;
    g.k = p.kappa;
    g.Lc = s.Lc;
    g.L = s.Lc / p.h;
    g.lim = s.Lc < 1e-9 * p.h;
    return g;
}

BendingSolution start(const BendingProblem& p, const MaterialScales& s, const Geometry& g) {
    BendingSolution sol;
    sol.problem = p;
    sol.problem.scales = s;
    sol.lc_limit = g.lim;
    return sol;
}

// v from v' with the rigid constants set to zero
void add_displacement(BendingSolution& sol, const HypPoly& dv) {
    sol.set_field("dv", dv);
    sol.set_field("v", dv.antiderivative());
}

void finish(BendingSolution& sol) {
    const double k = sol.problem.kappa;
    sol.Deff = k != 0.0 ? (sol.Mc + sol.Mm) / k : std::numeric_limits<double>::quiet_NaN();
}

// sech(f h / 2 Lc)
double sech(double f, const Geometry& g) { return stable_sech(f * g.H / g.Lc); }
// L^3 tanh(f / 2L) = f L^2 / 2 - f^3 G / 8; the L^2 parts cancel in the bounded moments
double G(double f, const Geometry& g) { return tanh_defect(f * g.H / g.Lc); }

void limit_moments(BendingSolution& sol, double D0) {
    const double k = sol.problem.kappa;
    sol.Mc = D0 * k;
    sol.Mm = 0.0;
    sol.Wtot = 0.5 * D0 * k * k;
}

BendingSolution cosserat_core(const BendingProblem& p) {
    const MaterialScales s = effective_scales(p);
    const Geometry g = geometry(p, s);
    const IsotropicModuli m = macro_moduli(p);
    BendingSolution sol = start(p, s, g);
    HypPoly dv(g.H);
    dv.add_poly(1, m.lambda / (m.lambda + 2.0 * m.mu) * g.k);
    add_displacement(sol, dv);
    const double D = g.I * m.plate_modulus();
    const double gt = s.mu * s.Lc * s.Lc * (s.a1 + s.a2) / 2.0;
    sol.Mc = D * g.k;
    sol.Mm = g.h * gt * g.k;
    sol.Wtot = 0.5 * (D + 12.0 * s.mu * g.L * g.L * (s.a1 + s.a2) / 2.0 * g.I) * g.k * g.k;
    sol.set_coeff("gamma_tilde", gt);
    const LakesResult lr = lakes_omega(m, gt, g.h);
    sol.set_coeff("ell_b", lr.ell_b);
    sol.set_coeff("Omega", lr.omega);
    sol.lc_limit = g.lim;
    finish(sol);
    return sol;
}

// Relaxed micromorphic profiles. The difference P11 - P33 decays with rate fd
// and the sum P11 + P33 with rate fs; b3, b4 are per unit curvature.
struct RelaxedModes {
    double b1, b2, b3, b4, fd, fs;
};

void relaxed_profiles(BendingSolution& sol, const MaterialScales& s, const Geometry& g, const RelaxedModes& r) {
    const IsotropicModuli& e = s.e;
    const IsotropicModuli& m = *s.micro;
    const double k = g.k;
    const double slope_d = (r.b4 - r.b3) / (r.b1 - r.b2) * k;
    const double slope_s = -(r.b3 + r.b4) / (r.b1 + r.b2) * k;
    const double amp_d = ((r.b3 - r.b4) / (r.b1 - r.b2) - 1.0) * k;
    const double amp_s = ((r.b3 + r.b4) / (r.b1 + r.b2) - 1.0) * k;
    HypPoly d(g.H), sm(g.H);
    d.add_poly(1, slope_d);
    sm.add_poly(1, slope_s);
    if (!g.lim) {
        const double ld = g.Lc / r.fd, ls = g.Lc / r.fs;
        d.add_term(amp_d * ld, ld, true);
        sm.add_term(amp_s * ls, ls, true);
    }
    const HypPoly P11 = 0.5 * (sm + d);
    const HypPoly P33 = 0.5 * (sm - d);
    const HypPoly P22 = (-m.lambda / (m.lambda + 2.0 * m.mu)) * sm;
    HypPoly kx(g.H);
    kx.add_poly(1, k);
    const HypPoly dv = (1.0 / (e.lambda + 2.0 * e.mu)) * (e.lambda * (kx + P11 + P22 + P33) + 2.0 * e.mu * P22);
    sol.set_field("P11", P11);
    sol.set_field("P22", P22);
    sol.set_field("P33", P33);
    add_displacement(sol, dv);
    sol.set_coeff("slope_diff", slope_d);
    sol.set_coeff("slope_sum", slope_s);
    sol.set_coeff("amp_diff", amp_d);
    sol.set_coeff("amp_sum", amp_s);
}

BendingSolution relaxed_zero_poisson_one_curv(const BendingProblem& p, const MaterialScales& s, const Geometry& g) {
    BendingSolution sol = start(p, s, g);
    const double me = s.e.mu, mm = s.micro->mu, mu = s.mu;
    const double b1 = 2.0 * (me + mm), b3 = 2.0 * me;
    const double f1 = std::sqrt(2.0 * (me + mm) / mu);
    relaxed_profiles(sol, s, g, {b1, 0.0, b3, 0.0, f1, f1});
    sol.set_coeff("f1", f1);
    const double Dh = 2.0 * me * mm / (me + mm);
    if (g.lim) {
        limit_moments(sol, g.I * Dh);
    } else {
        const double G1 = G(f1, g);
        const double c = mm * g.k / (2.0 * (me + mm)) * g.Lc / f1 * sech(f1, g);
        sol.set_coeff("c1", c);
        sol.set_coeff("c2", -c);
        sol.Mc = g.I * Dh * (1.0 - 3.0 * G1) * g.k;
        sol.Mm = g.I * 2.0 * mm * mu / (me + mm) * 1.5 * f1 * f1 * G1 * g.k;
        const double z = 12.0 / (f1 * f1) - 6.0 * mu / me;
        sol.Wtot = 0.5 * g.I * Dh * (1.0 - 0.25 * z * f1 * f1 * G1) * g.k * g.k;
    }
    finish(sol);
    return sol;
}

BendingSolution relaxed_any_poisson_one_curv(const BendingProblem& p, const MaterialScales& s, const Geometry& g) {
    BendingSolution sol = start(p, s, g);
    const IsotropicModuli& e = s.e;
    const IsotropicModuli& m = *s.micro;
    const double mu = s.mu;
    const double le = e.lambda, me = e.mu;
    const double b1 = e.plate_modulus() + m.plate_modulus();
    const double b2 = e.lambda_plane_stress() + m.lambda_plane_stress();
    const double b3 = 4.0 * me * (le + me) / (le + 2.0 * me);
    const double b4 = 2.0 * me * le / (le + 2.0 * me);
    const double b0 = 2.0 * (le * m.mu - me * m.lambda) / (m.lambda + 2.0 * m.mu);
    // f1 on the sum mode, f2 on the difference mode
    const double f1 = std::sqrt((b1 + b2) / mu);
    const double f2 = std::sqrt((b1 - b2) / mu);
    relaxed_profiles(sol, s, g, {b1, b2, b3, b4, f2, f1});
    for (auto [n, v] : {std::pair{"b0", b0}, {"b1", b1}, {"b2", b2}, {"b3", b3}, {"b4", b4}, {"f1", f1}, {"f2", f2}})
        sol.set_coeff(n, v);
    const double B = b1 * b1 - b2 * b2;
    const double p1 = 2.0 * me / (le + 2.0 * me) *
                      (le * (b1 * (2.0 * b1 - 2.0 * b3 - b4) - b2 * (2.0 * b2 - b3 - 2.0 * b4)) / B +
                       2.0 * me * (b1 * (b1 - b3) - b2 * (b2 - b4)) / B);
    const double p2 = -12.0 * me / (le + 2.0 * me) *
                      ((3.0 * le + 2.0 * me) * (b1 + b2 - b3 - b4) / ((b1 + b2) * (b1 + b2)) +
                       (le + 2.0 * me) * (b1 - b2 - b3 + b4) / ((b1 - b2) * (b1 - b2))) *
                      mu;
    const double p3 = 12.0 / (f1 * f1 * f1) * (1.0 - (b3 + b4) / (b1 + b2)) * 2.0 * me * (3.0 * le + 2.0 * me) /
                      (le + 2.0 * me);
    const double p4 = 12.0 / (f2 * f2 * f2) * (1.0 - (b3 - b4) / (b1 - b2)) * 2.0 * me;
    const double q1 = 12.0 * (b1 * (b1 - b3) + b2 * (b4 - b2)) / B * mu;
    const double q2 = 12.0 * (b1 + b2 - b3 - b4) / (f1 * f1 * f1);
    const double q3 = 12.0 * (b1 - b2 - b3 + b4) / (f2 * f2 * f2);
    for (auto [n, v] : {std::pair{"p1", p1}, {"p2", p2}, {"p3", p3}, {"p4", p4}, {"q1", q1}, {"q2", q2}, {"q3", q3}})
        sol.set_coeff(n, v);
    if (g.lim) {
        limit_moments(sol, g.I * p1);
    } else {
        const double g1 = f1 * f1 * f1 / 8.0 * G(f1, g), g2 = f2 * f2 * f2 / 8.0 * G(f2, g);
        const double s1 = sech(f1, g), s2 = sech(f2, g);
        const double as = (b3 + b4) / (b1 + b2) - 1.0, ad = (b3 - b4) / (b1 - b2) - 1.0;
        sol.set_coeff("c2", 0.5 * g.k * (as * s1 + ad * s2));
        sol.set_coeff("c4", 0.5 * g.k * (as * s1 - ad * s2));
        // p2 + (p3 f1 + p4 f2) / 2 and q1 - (q2 f1 + q3 f2) / 2 vanish identically
        sol.Mc = g.I * (p1 - p3 * g1 - p4 * g2) * g.k;
        sol.Mm = g.I * (q2 * g1 + q3 * g2) * g.k;
        sol.Wtot = 0.5 * g.I * (p1 - (p3 - q2) * g1 - (p4 - q3) * g2) * g.k * g.k;
    }
    finish(sol);
    return sol;
}

BendingSolution relaxed_zero_poisson_full_curv(const BendingProblem& p, const MaterialScales& s, const Geometry& g) {
    BendingSolution sol = start(p, s, g);
    const double me = s.e.mu, mm = s.micro->mu, mu = s.mu, a1 = s.a1, a2 = s.a2;
    const double f1 = std::sqrt(2.0 * (me + mm) / (a1 * mu));
    const double f2 = std::sqrt(2.0 * (me + mm) / (a2 * mu));
    relaxed_profiles(sol, s, g, {2.0 * (me + mm), 0.0, 2.0 * me, 0.0, f1, f2});
    sol.set_coeff("f1", f1);
    sol.set_coeff("f2", f2);
    const double Dh = 2.0 * me * mm / (me + mm);
    if (g.lim) {
        limit_moments(sol, g.I * Dh);
    } else {
        const double G1 = G(f1, g), G2 = G(f2, g);
        const double s1 = sech(f1, g), s2 = sech(f2, g);
        const double c = g.k * mm / (2.0 * (me + mm));
        sol.set_coeff("c2", -c * (s1 + s2));
        sol.set_coeff("c4", c * (s1 - s2));
        sol.Mc = g.I * Dh * (1.0 - 1.5 * (G1 + G2)) * g.k;
        sol.Mm = g.I * 2.0 * mm * 0.75 * mu / (me + mm) * (a1 * f1 * f1 * G1 + a2 * f2 * f2 * G2) * g.k;
        sol.Wtot = 0.5 * g.I * Dh * (1.0 + 1.5 * mm / me * (G1 + G2)) * g.k * g.k;
    }
    finish(sol);
    return sol;
}

BendingSolution relaxed_general(const BendingProblem& p, const MaterialScales& s, const Geometry& g) {
    BendingSolution sol = start(p, s, g);
    const IsotropicModuli& e = s.e;
    const IsotropicModuli& m = *s.micro;
    const double mu = s.mu, a1 = s.a1, a2 = s.a2, k = g.k;
    const double le = e.lambda, me = e.mu;
    const double b1 = e.plate_modulus() + m.plate_modulus();
    const double b2 = e.lambda_plane_stress() + m.lambda_plane_stress();
    const double B3 = 4.0 * me * (le + me) / (le + 2.0 * me);
    const double B4 = 2.0 * me * le / (le + 2.0 * me);
    const double f1 = std::sqrt((b1 - b2) / (a1 * mu));
    const double f2 = std::sqrt((b1 + b2) / (a2 * mu));
    relaxed_profiles(sol, s, g, {b1, b2, B3, B4, f1, f2});
    const double b3 = B3 * k, b4 = B4 * k;
    for (auto [n, v] : {std::pair{"b1", b1}, {"b2", b2}, {"b3", b3}, {"b4", b4}, {"f1", f1}, {"f2", f2}})
        sol.set_coeff(n, v);
    const double h = g.h, h3 = h * h * h;
    const double F1 = f1 * f1 * f1, F2 = f2 * f2 * f2;
    const double z0 = h3 * me / (6.0 * F1 * F2 * (b1 * b1 - b2 * b2) * (le + 2.0 * me));
    const double p1 = F1 * F2 * (-2.0 * b1 * b1 * k + b1 * (2.0 * b3 + b4) + b2 * (2.0 * b2 * k - b3 - 2.0 * b4));
    const double p2 = 6.0 * f1 * f2 *
                      (b1 * b1 * k * (3.0 * f1 * f1 + f2 * f2) - 3.0 * b1 * f1 * f1 * (b3 + b4) +
                       b1 * f2 * f2 * (b4 - b3) + b2 * b3 * (3.0 * f1 * f1 - f2 * f2) +
                       b2 * (3.0 * f1 * f1 + f2 * f2) * (b4 - b2 * k));
    const double p3 = 12.0 * F2 * (b1 + b2) * (k * (b1 - b2) - b3 + b4);
    const double p4 = 36.0 * F1 * (b1 - b2) * (k * (b1 + b2) - b3 - b4);
    const double q1 = F1 * F2 * (b1 * b1 * k - b1 * b3 + b2 * (b4 - b2 * k));
    const double q2 = 6.0 * f1 * f2 *
                      (b1 * b1 * k * (f1 * f1 + f2 * f2) - b1 * f1 * f1 * (b3 + b4) + b1 * f2 * f2 * (b4 - b3) +
                       b2 * b3 * (f1 * f1 - f2 * f2) + b2 * (f1 * f1 + f2 * f2) * (b4 - b2 * k));
    const double q3 = 12.0 * F2 * (b1 + b2) * (k * (b1 - b2) - b3 + b4);
    const double q4 = 12.0 * F1 * (b1 - b2) * (k * (b1 + b2) - b3 - b4);
    const double r1 = -a1 * (b1 + b2) * (k * (b1 - b2) - b3 + b4) - a2 * (b1 - b2) * (k * (b1 + b2) - b3 - b4);
    const double r2 = 2.0 * a1 * (b1 + b2) * (k * (b1 - b2) - b3 + b4) / f1;
    const double r3 = 2.0 * a2 * (b1 - b2) * (-k * (b1 + b2) + b3 + b4) / f2;
    for (auto [n, v] : {std::pair{"z0", z0}, {"p1", p1}, {"p2", p2}, {"p3", p3}, {"p4", p4}, {"q1", q1},
                        {"q2", q2}, {"q3", q3}, {"q4", q4}, {"r1", r1}, {"r2", r2}, {"r3", r3}})
        sol.set_coeff(n, v);
    if (g.lim) {
        limit_moments(sol, g.I * homogenize(s).plate_modulus());
    } else {
        const double g1 = F1 / 8.0 * G(f1, g), g2 = F2 / 8.0 * G(f2, g);
        sol.Mc = -z0 * (le * (p1 + p3 * g1 + p4 * g2) - 2.0 * me * (q1 - q3 * g1 - q4 * g2));
        sol.Mm = -h3 * mu / (2.0 * (b1 * b1 - b2 * b2)) * (r3 * g2 - r2 * g1);
        sol.Wtot = 0.5 * k * (sol.Mc + sol.Mm);
    }
    finish(sol);
    return sol;
}

}  // namespace

BendingSolution solve_cauchy(const BendingProblem& p) {
    if (p.model != Model::Cauchy) throw UnsupportedVariant("solve_cauchy called for " + to_string(p.model));
    validate(p);
    const MaterialScales s = effective_scales(p);
    const Geometry g = geometry(p, s);
    const IsotropicModuli m = macro_moduli(p);
    BendingSolution sol = start(p, s, g);
    HypPoly dv(g.H);
    dv.add_poly(1, m.lambda / (m.lambda + 2.0 * m.mu) * g.k);
    add_displacement(sol, dv);
    sol.lc_limit = false;
    limit_moments(sol, g.I * m.plate_modulus());
    finish(sol);
    return sol;
}

BendingSolution solve_relaxed(const BendingProblem& p) {
    if (p.model != Model::Relaxed) throw UnsupportedVariant("solve_relaxed called for " + to_string(p.model));
    validate(p);
    const MaterialScales s = effective_scales(p);
    const Geometry g = geometry(p, s);
    switch (p.variant) {
        case Variant::ZeroPoissonOneCurv: return relaxed_zero_poisson_one_curv(p, s, g);
        case Variant::AnyPoissonOneCurv: return relaxed_any_poisson_one_curv(p, s, g);
        case Variant::ZeroPoissonFullCurv: return relaxed_zero_poisson_full_curv(p, s, g);
        case Variant::General: return relaxed_general(p, s, g);
        default: throw UnsupportedVariant("unknown relaxed variant");
    }
}

BendingSolution solve_micro_stretch(const BendingProblem& p) {
    if (p.model != Model::MicroStretch)
        throw UnsupportedVariant("solve_micro_stretch called for " + to_string(p.model));
    validate(p);
    const MaterialScales s = effective_scales(p);
    const Geometry g = geometry(p, s);
    BendingSolution sol = start(p, s, g);
    const double ke = s.e.kappa(), km = s.micro->kappa();
    const IsotropicModuli mac = homogenize(s);
    const double mm = mac.mu, mu = s.mu, a1 = s.a1, a2 = s.a2;
    const double f1 = std::sqrt(4.5 * (km + 4.0 * ke * mm / (3.0 * ke + 4.0 * mm)) / (a2 * mu));
    // the same expression with mu_e in the numerator, as sometimes quoted
    const double f1q = std::sqrt(4.5 * (km + 4.0 * ke * s.e.mu / (3.0 * ke + 4.0 * mm)) / (a2 * mu));
    const double f2 = 2.0 * ke * mm / (4.0 * mm * (ke + km) + 3.0 * ke * km);
    const double f3 = (2.0 / 3.0 + ke / (2.0 * mm)) * f2;
    const double ell = g.lim ? 0.0 : g.Lc / f1;
    HypPoly om(g.H);
    om.add_poly(1, -f2 * g.k);
    if (!g.lim) om.add_term(g.k * (f2 - 0.5) * ell, ell, true);
    HypPoly kx(g.H);
    kx.add_poly(1, g.k);
    const HypPoly dv = (1.0 / (3.0 * ke + 4.0 * mm)) * (9.0 * ke * om + (3.0 * ke - 2.0 * mm) * kx);
    sol.set_field("omega", om);
    add_displacement(sol, dv);
    const double p1 = (2.0 * (6.0 - 9.0 * f2) * ke + 4.0 * mm) / (3.0 * ke + 4.0 * mm);
    const double p2 = 108.0 * (2.0 * f2 - 1.0) * ke / (f1 * f1 * f1 * (3.0 * ke + 4.0 * mm));
    const double q1 = 6.0 * mu * (a1 + a2 * (1.0 - 2.0 * f2)) / mm;
    const double q2 = 12.0 * a2 * mu * (2.0 * f2 - 1.0) / (f1 * mm);
    for (auto [n, v] : {std::pair{"f1", f1}, {"f1_quoted", f1q}, {"f2", f2}, {"f3", f3}, {"p1", p1}, {"p2", p2},
                        {"q1", q1}, {"q2", q2}, {"Mm_tilde", 0.0}})
        sol.set_coeff(n, v);
    if (g.lim) {
        limit_moments(sol, g.I * mac.plate_modulus());
    } else {
        const double L2 = g.L * g.L, g1 = f1 * f1 * f1 / 8.0 * G(f1, g);
        sol.set_coeff("c2", g.k * (f2 - 0.5) * ell / 2.0 * sech(f1, g));
        sol.Mc = g.I * mm * (p1 + 2.0 * p2 * g1) * g.k;
        sol.Mm = g.I * mm * ((q1 + 0.5 * q2 * f1) * L2 - q2 * g1) * g.k;
        sol.Wtot = 0.5 * g.I * mm * (p1 + (q1 + 0.5 * q2 * f1) * L2 + (2.0 * p2 - q2) * g1) * g.k * g.k;
    }
    sol.set_coeff("Mm_hat", sol.Mm);
    finish(sol);
    return sol;
}

BendingSolution solve_cosserat(const BendingProblem& p) {
    if (p.model != Model::Cosserat) throw UnsupportedVariant("solve_cosserat called for " + to_string(p.model));
    validate(p);
    return cosserat_core(p);
}

BendingSolution solve_couple_stress(const BendingProblem& p) {
    if (p.model != Model::CoupleStress)
        throw UnsupportedVariant("solve_couple_stress called for " + to_string(p.model));
    validate(p);
    return cosserat_core(p);
}

BendingSolution solve_micro_void(const BendingProblem& p) {
    if (p.model != Model::MicroVoid) throw UnsupportedVariant("solve_micro_void called for " + to_string(p.model));
    validate(p);
    const MaterialScales s = effective_scales(p);
    const Geometry g = geometry(p, s);
    BendingSolution sol = start(p, s, g);
    const double ke = s.e.kappa(), km = s.micro->kappa();
    const double mm = s.e.mu, mu = s.mu, a2 = s.a2;
    const double f1 = std::sqrt(4.5 * (4.0 * ke * mm / (3.0 * ke + 4.0 * mm) + km) / (a2 * mu));
    const double f2 = 2.0 * ke * mm / (4.0 * mm * (ke + km) + 3.0 * ke * km);
    const double f3 = (ke / (2.0 * mm) + 2.0 / 3.0) * f2;
    const double ell = g.lim ? 0.0 : g.Lc / f1;
    HypPoly om(g.H);
    om.add_poly(1, -f2 * g.k);
    if (!g.lim) om.add_term(f2 * g.k * ell, ell, true);
    HypPoly kx(g.H);
    kx.add_poly(1, g.k);
    const HypPoly dv = (1.0 / (3.0 * ke + 4.0 * mm)) * (9.0 * ke * om + (3.0 * ke - 2.0 * mm) * kx);
    sol.set_field("omega", om);
    add_displacement(sol, dv);
    for (auto [n, v] : {std::pair{"f1", f1}, {"f2", f2}, {"f3", f3}}) sol.set_coeff(n, v);
    if (g.lim) {
        limit_moments(sol, g.I * macro_moduli(p).plate_modulus());
    } else {
        sol.set_coeff("c2", f2 * g.k * ell / 2.0 * sech(f1, g));
        const double De = 4.0 * mm * (3.0 * ke + mm) / (3.0 * ke + 4.0 * mm);
        const double r = ke / (3.0 * ke + mm);
        const double br = 1.0 - 4.5 * f2 * r + 13.5 * r * f2 * G(f1, g);
        sol.Mc = g.I * De * br * g.k;
        sol.Mm = 0.0;
        sol.Wtot = 0.5 * g.I * De * br * g.k * g.k;
    }
    finish(sol);
    return sol;
}

BendingSolution solve_second_gradient(const BendingProblem& p) {
    if (p.model != Model::SecondGradient)
        throw UnsupportedVariant("solve_second_gradient called for " + to_string(p.model));
    validate(p);
    const MaterialScales s = effective_scales(p);
    const Geometry g = geometry(p, s);
    BendingSolution sol = start(p, s, g);
    const IsotropicModuli m = macro_moduli(p);
    const double lam = m.lambda, mm = m.mu, mu = s.mu, a1 = s.a1, a2 = s.a2, a3 = s.a3, k = g.k;
    const double f1 = std::sqrt((lam + 2.0 * mm) / (2.0 * mu * (3.0 * a1 + a3)));
    const double alpha = lam * k / (lam + 2.0 * mm);
    const double beta = -k * (3.0 * a1 - 2.0 * a3) / (2.0 * (3.0 * a1 + a3));
    const double ell = g.lim ? 0.0 : g.Lc / (3.0 * f1);
    HypPoly dv(g.H);
    dv.add_poly(1, alpha);
    if (!g.lim) dv.add_term(ell * (beta - alpha), ell, true);
    add_displacement(sol, dv);
    for (auto [n, v] : {std::pair{"f1", f1}, {"ell", ell}, {"alpha", alpha}, {"beta", beta}}) sol.set_coeff(n, v);
    const double D = g.I * m.plate_modulus();
    if (g.lim) {
        limit_moments(sol, D);
        finish(sol);
        return sol;
    }
    const double L2 = g.L * g.L;
    if (p.variant == Variant::Full) {
        // h - 2 ell tanh(H / ell) = 2 H^3 G / ell^2
        const double e = 2.0 * g.H * g.H * g.H * tanh_defect(g.H / ell);
        const double c = 2.0 * a2 + 2.0 / 3.0 * a1 + 2.0 / 9.0 * a3;
        sol.Mc = D * k - lam * (beta - alpha) * e;
        sol.Mm = mu * s.Lc * s.Lc *
                 ((3.0 * a1 - 2.0 * a3) / 9.0 * (beta * g.h - (beta - alpha) * e / (ell * ell)) + c * k * g.h);
        sol.Wtot = 0.5 * k * (sol.Mc + sol.Mm);
    } else {
        const double n = lam + 2.0 * mm;
        const double f = std::sqrt(n / mu);
        // the L^2 term 12 mu lam^2 / n^2 cancels against the tanh term
        const double c3 = 24.0 * mu * lam * lam / (n * n) / f;
        const double e = c3 * f * f * f / 8.0 * G(f, g);
        sol.Mc = g.I * (m.plate_modulus() + e) * k;
        sol.Mm = g.I * 36.0 * mu * L2 * k;
        sol.Wtot = 0.5 * g.I * (m.plate_modulus() + 36.0 * mu * L2 + e) * k * k;
    }
    finish(sol);
    return sol;
}

bool has_closed_form(Model m) { return m != Model::Micromorphic && m != Model::MicroStrain; }

BendingSolution solve_closed_form(const BendingProblem& p) {
    switch (p.model) {
        case Model::Cauchy: return solve_cauchy(p);
        case Model::Relaxed: return solve_relaxed(p);
        case Model::MicroStretch: return solve_micro_stretch(p);
        case Model::Cosserat: return solve_cosserat(p);
        case Model::CoupleStress: return solve_couple_stress(p);
        case Model::MicroVoid: return solve_micro_void(p);
        case Model::SecondGradient: return solve_second_gradient(p);
        default: throw UnsupportedVariant(to_string(p.model) + " has no closed form; use the semi-analytic solver");
    }
}

LimitStiffness limit_stiffnesses(const BendingProblem& p) {
    const MaterialScales s = effective_scales(p);
    const double I = p.h * p.h * p.h / 12.0;
    LimitStiffness r;
    r.D0 = I * macro_moduli(p).plate_modulus();
    const auto unbounded = [&] {
        r.unbounded = true;
        r.Dinf = std::numeric_limits<double>::infinity();
        r.label_inf = "unbounded";
    };
    switch (p.model) {
        case Model::Cauchy:
            r.Dinf = r.D0;
            r.label_inf = "D_macro";
            break;
        case Model::Relaxed:
            r.Dinf = I * s.micro_or_throw().plate_modulus();
            r.label_inf = "D_micro";
            break;
        case Model::MicroVoid:
        case Model::MicroStrain:
            r.Dinf = I * s.e.plate_modulus();
            r.label_inf = "D_e";
            break;
        default:
            unbounded();
    }
    return r;
}

double relaxed_micro_rigid_moment(const BendingProblem& p) {
    const MaterialScales s = effective_scales(p);
    return p.h * s.mu * s.Lc * s.Lc * (s.a1 + s.a2) / 2.0;
}

CouplingTractions consistent_coupling_tractions(const BendingSolution& sol, int n) {
    const BendingProblem& p = sol.problem;
    if (p.model != Model::Relaxed || p.variant != Variant::ZeroPoissonOneCurv)
        throw UnsupportedVariant("consistent coupling tractions need the relaxed zeroPoisson-oneCurv solution");
    const MaterialScales& s = p.scales;
    const double me = s.e.mu, mm = s.micro_or_throw().mu, k = p.kappa, H = 0.5 * p.h;
    CouplingTractions c;
    c.t1 = HypPoly(H);
    c.eta12 = HypPoly(H);
    const double D = 2.0 * me * mm / (me + mm);
    c.t1.add_poly(1, -D * k);
    if (!sol.lc_limit) {
        const double f1 = std::sqrt(2.0 * (me + mm) / s.mu);
        const double ell = s.Lc / f1;
        c.t1.add_term(D * k * ell, ell, true);
        const double e = mm / (me + mm) * s.mu * s.Lc * s.Lc * k;
        c.eta12.add_poly(0, e);
        c.eta12.add_term(-e, ell, false);
    }
    // on the lateral faces P and Du share the skew part; the normal components
    // P11 and (Du)11 differ but do not enter P x e1
    const Vector3 e1 = Vector3::e(0);
    const HypPoly& P11 = sol.field("P11");
    const HypPoly& P22 = sol.field("P22");
    const HypPoly& P33 = sol.field("P33");
    const HypPoly& dv = sol.field("dv");
    double res = 0.0;
    for (double x : thickness_grid(p.h, n)) {
        const Tensor3 P{{P11(x), 0.0, 0.0}, {0.0, P22(x), 0.0}, {0.0, 0.0, P33(x)}};
        const Tensor3 Du{{-k * x, 0.0, 0.0}, {0.0, dv(x), 0.0}, {0.0, 0.0, 0.0}};
        const Tensor3 d = cross_tensor_vector(P, e1) - cross_tensor_vector(Du, e1);
        res = std::max(res, max_abs(d));
    }
    c.coupling_residual = res;
    return c;
}

}  // namespace cylbend
