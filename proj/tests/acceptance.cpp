// Acceptance run: one line per criterion, exit status 1 when any line fails.
#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "cylbend/materials.hpp"
#include "cylbend/oracle.hpp"
#include "cylbend/params.hpp"
#include "cylbend/semi_analytic.hpp"
#include "direct_curvature.hpp"
#include "gen.hpp"

using namespace cylbend;
using cylbend::testing::Gen;

namespace {

std::string preset_dir = CYLBEND_PRESET_DIR;

double rel(double a, double b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

std::string fmt(const char* f, double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, f, v);
    return buf;
}

std::vector<std::pair<std::string, BendingProblem>> presets() {
    std::vector<std::pair<std::string, BendingProblem>> out;
    for (const Preset& p : load_preset_index(preset_dir)) out.emplace_back(p.name, preset_problem(p, preset_dir));
    return out;
}

BendingProblem preset(const std::string& name) {
    for (auto& [n, p] : presets())
        if (n == name) return p;
    throw std::runtime_error("missing preset " + name);
}

std::string tag(const BendingProblem& p) {
    return p.variant == Variant::None ? to_string(p.model) : to_string(p.model) + "/" + to_string(p.variant);
}

const Model all_models[] = {Model::Cauchy,       Model::Relaxed,   Model::MicroStretch,
                            Model::Cosserat,     Model::CoupleStress, Model::MicroVoid,
                            Model::Micromorphic, Model::MicroStrain,  Model::SecondGradient};

std::vector<Variant> variants_or_none(Model m) {
    std::vector<Variant> v = variants_of(m);
    if (v.empty()) v.push_back(Variant::None);
    return v;
}

struct Outcome {
    bool pass = true;
    std::string detail;
    void fail(const std::string& why) {
        pass = false;
        detail += (detail.empty() ? "" : "; ") + why;
    }
    void note(const std::string& s) { detail += (detail.empty() ? "" : "; ") + s; }
};

Outcome criterion1() {
    Outcome o;
    const BendingSolution s = solve(preset("cauchy_unit"));
    const double err = std::abs(s.Deff - 2.0 / 9.0);
    o.note("D=" + fmt("%.17g", s.Deff) + " |D-2/9|=" + fmt("%.3g", err));
    if (!(err <= 1e-14)) o.fail("tolerance 1e-14");
    return o;
}

Outcome criterion2() {
    Outcome o;
    BendingProblem p = preset("relaxed_zero_poisson_unit");
    p.scales.Lc = p.h;
    const BendingSolution s = solve(p);
    const double ms = moment_scale(p), es = energy_scale(p);
    const double v[3] = {s.Mc / ms, s.Mm / ms, s.Wtot / es};
    const double ref[3] = {0.284782, 1.430436, 1.715218};
    double e = 0.0;
    for (int i = 0; i < 3; ++i) e = std::max(e, std::abs(v[i] - ref[i]));
    o.note("(Mc,Mm,W)=(" + fmt("%.7f", v[0]) + "," + fmt("%.7f", v[1]) + "," + fmt("%.7f", v[2]) + ") max err " +
           fmt("%.2g", e));
    if (!(e <= 1e-6)) o.fail("normalized values off by more than 1e-6");
    p.scales.Lc = 1e-3 * p.h;
    const double lo = solve(p).Wtot / energy_scale(p);
    p.scales.Lc = 1e3 * p.h;
    const double hi = solve(p).Wtot / energy_scale(p);
    o.note("limits " + fmt("%.7f", lo) + " " + fmt("%.7f", hi));
    if (!(std::abs(lo - 1.0) <= 1e-4)) o.fail("Lc->0 limit");
    if (!(std::abs(hi - 2.0) <= 1e-4)) o.fail("Lc->inf limit");
    return o;
}

Outcome criterion3() {
    Outcome o;
    Gen g(20231);
    double worst_cf = 0.0, worst_sa = 0.0;
    int n = 0;
    for (Model m : all_models)
        for (Variant v : variants_or_none(m))
            for (int i = 0; i < 50; ++i) {
                const BendingProblem p = g.problem(m, v);
                const BendingSolution s = solve(p);
                const double e = rel(2.0 * s.Wtot / (p.kappa * p.kappa), (s.Mc + s.Mm) / p.kappa);
                const bool cf = has_closed_form(m);
                (cf ? worst_cf : worst_sa) = std::max(cf ? worst_cf : worst_sa, e);
                if (!(e <= (cf ? 1e-12 : 1e-9)))
                    o.fail(tag(p) + " draw " + std::to_string(i) + " rel " + fmt("%.3g", e));
                ++n;
            }
    o.note(std::to_string(n) + " draws, worst closed-form " + fmt("%.2g", worst_cf) + ", semi-analytic " +
           fmt("%.2g", worst_sa));
    return o;
}

Outcome criterion4() {
    Outcome o;
    VerifyOptions opt;
    opt.sweeps = false;
    double worst_stiff = 0.0, worst_order = 0.0;
    int runs = 0, exact = 0;
    for (auto& [name, p0] : presets()) {
        if (!has_closed_form(p0.model)) continue;
        for (double r : {0.01, 0.1, 1.0, 10.0}) {
            BendingProblem p = p0;
            p.scales.Lc = r * p.h;
            const VerificationReport rep = verify_model(p, opt);
            bool seen_stiff = false, seen_order = false;
            for (const CheckResult& c : rep.checks) {
                const auto ends = [&](const std::string& s) {
                    return c.name.size() >= s.size() && c.name.compare(c.name.size() - s.size(), s.size(), s) == 0;
                };
                if (ends(":stiffness")) {
                    seen_stiff = true;
                    worst_stiff = std::max(worst_stiff, c.residual);
                    if (!c.pass) o.fail(name + " Lc/h=" + fmt("%g", r) + " " + c.detail);
                } else if (ends(":richardson_order_stiffness")) {
                    seen_order = true;
                    if (c.detail.find("order=") == std::string::npos) ++exact;
                    worst_order = std::max(worst_order, c.residual);
                    if (!c.pass) o.fail(name + " Lc/h=" + fmt("%g", r) + " " + c.detail);
                } else if (ends(":discrete_solve") || ends(":analytic_solution")) {
                    o.fail(name + " " + c.detail);
                }
            }
            if (!seen_stiff || !seen_order) o.fail(name + " Lc/h=" + fmt("%g", r) + " checks missing");
            ++runs;
        }
    }
    o.note(std::to_string(runs) + " runs, worst stiffness rel " + fmt("%.2g", worst_stiff) + ", worst |order-2| " +
           fmt("%.3g", worst_order) + ", " + std::to_string(exact) + " runs exact on every grid");
    return o;
}

Outcome criterion5() {
    Outcome o;
    std::map<std::string, bool> done;
    double worst_ratio = 0.0, slope_lo = 10.0, slope_hi = -10.0;
    for (auto& [name, p0] : presets()) {
        const std::string t = tag(p0);
        if (p0.model == Model::Cauchy || done[t]) continue;
        done[t] = true;
        BendingProblem p = p0;
        p.scales.Lc = 1e3 * p.h;
        const double D3 = solve(p).Deff;
        p.scales.Lc = 1e4 * p.h;
        const double D4 = solve(p).Deff;
        const bool bounded =
            p.model == Model::Relaxed || p.model == Model::MicroVoid || p.model == Model::MicroStrain;
        if (bounded) {
            worst_ratio = std::max(worst_ratio, D4 / D3);
            if (!(D4 / D3 < 1.001)) o.fail(t + " ratio " + fmt("%.6g", D4 / D3));
        } else {
            const double s = std::log10(D4 / D3);
            slope_lo = std::min(slope_lo, s);
            slope_hi = std::max(slope_hi, s);
            if (!(std::abs(s - 2.0) <= 0.05)) o.fail(t + " slope " + fmt("%.6g", s));
        }
    }
    o.note(std::to_string(done.size()) + " model/variant pairs, worst plateau ratio " + fmt("%.8g", worst_ratio) +
           ", slopes in [" + fmt("%.6g", slope_lo) + ", " + fmt("%.6g", slope_hi) + "]");
    return o;
}

Outcome criterion6() {
    Outcome o;
    Gen g(606);
    int mism = 0;
    for (int i = 0; i < 50; ++i)
        for (Variant v : variants_of(Model::CoupleStress)) {
            const BendingProblem c = g.problem(Model::CoupleStress, v);
            BendingProblem k = c;
            k.model = Model::Cosserat;
            k.variant = Variant::None;
            k.scales = effective_scales(c);
            const BendingSolution a = solve(c), b = solve(k);
            bool same = a.Mc == b.Mc && a.Mm == b.Mm && a.Wtot == b.Wtot && a.Deff == b.Deff;
            for (const auto& f : a.field_names()) same = same && a.sample(f) == b.sample(f);
            if (!same) ++mism;
        }
    if (mism) o.fail(std::to_string(mism) + " couple stress draws differ from Cosserat");
    o.note("Cosserat vs couple stress: " + std::to_string(mism) + " differences in 150 draws");

    BendingProblem r = preset("relaxed_general_unit");
    r.scales.micro = IsotropicModuli{1e6, 1e6};
    r.scales.Lc = 0.1 * r.h;
    const double e1 = rel(solve(r).Mm, relaxed_micro_rigid_moment(r) * r.kappa);
    r.scales.Lc = r.h;
    const double e2 = rel(solve(r).Mm, relaxed_micro_rigid_moment(r) * r.kappa);
    o.note("mu_micro=1e6 Mm rel err " + fmt("%.3g", e1) + " at Lc/h=0.1 (" + fmt("%.3g", e2) + " at Lc/h=1)");
    if (!(e1 <= 1e-3)) o.fail("micro-rigid moment");

    const double om = solve(preset("cosserat_unit")).coeff("Omega");
    o.note("Omega=" + fmt("%.17g", om));
    if (!(std::abs(om - 7.75) <= 1e-12)) o.fail("Lakes worked example");
    double worst = 0.0;
    for (int i = 0; i < 50; ++i) {
        const BendingProblem p = g.problem(Model::Cosserat, Variant::None);
        const BendingSolution s = solve(p);
        const IsotropicModuli mac = macro_moduli(p);
        const double Dmac = p.h * p.h * p.h / 12.0 * mac.plate_modulus();
        worst = std::max(worst, rel(s.coeff("Omega"), s.Deff / Dmac));
    }
    o.note("Omega vs D/Dmacro worst " + fmt("%.2g", worst));
    if (!(worst <= 1e-12)) o.fail("Omega identity");
    return o;
}

Outcome criterion7() {
    Outcome o;
    Gen g(707);
    double w[3] = {0.0, 0.0, 0.0};
    for (int n = 0; n < 200; ++n) {
        MaterialScales s = g.scales();
        s.Lc = g.log_uniform(0.1, 10.0);
        const double gm = s.mu * s.Lc * s.Lc;
        const MatrixGradient d = g.gradient();
        const Third chi = chi_from_gradient(d);
        w[0] = std::max(w[0], rel(mindlin_curvature_energy(to_mindlin_relaxed(s), chi),
                                  cylbend::testing::relaxed_curvature_direct(d, gm, s.a1, s.a2, s.a3)));
        w[1] = std::max(w[1], rel(mindlin_curvature_energy(to_mindlin_reduced(s), chi),
                                  cylbend::testing::reduced_curvature_direct(d, gm, s.a1, s.a2, s.a3)));
        MatrixGradient d2{};
        Third chi2;
        cylbend::testing::random_second_gradient(g, d2, chi2);
        w[2] = std::max(w[2], rel(mindlin_curvature_energy(to_mindlin_second_gradient(s.mu, s.Lc, s.a1, s.a2, s.a3), chi2),
                                  cylbend::testing::second_gradient_curvature_direct(d2, gm, s.a1, s.a2, s.a3)));
    }
    o.note("worst rel relaxed " + fmt("%.2g", w[0]) + ", reduced " + fmt("%.2g", w[1]) + ", second gradient " +
           fmt("%.2g", w[2]));
    for (double x : w)
        if (!(x <= 1e-12)) o.fail("mapping above 1e-12");
    return o;
}

Outcome criterion8() {
    Outcome o;
    const BendingSolution s = solve(preset("micro_stretch_equal_weights"));
    const double f1 = s.coeff("f1"), f2 = s.coeff("f2");
    o.note("f2=" + fmt("%.12g", f2) + " f1=" + fmt("%.12g", f1) + " (alternative expression " +
           fmt("%.12g", s.coeff("f1_quoted")) + ")");
    if (!(std::abs(f2 - 1.0 / 15.0) <= 1e-6)) o.fail("f2");
    if (!(std::abs(f1 - 5.03067) <= 1e-6)) o.fail("f1 differs from 5.03067 by " + fmt("%.3g", f1 - 5.03067));
    const LimitStiffness lim = limit_stiffnesses(preset("micro_void_unit"));
    o.note("micro-void limits " + fmt("%.9f", lim.D0) + " " + fmt("%.9f", lim.Dinf));
    if (!(std::abs(lim.D0 - 0.179487) <= 1e-6)) o.fail("micro-void lower limit");
    if (!(std::abs(lim.Dinf - 0.222222) <= 1e-6)) o.fail("micro-void upper limit");
    return o;
}

Outcome criterion9() {
    Outcome o;
    double we = 0.0, wb = 0.0;
    int n = 0;
    for (auto& [name, p] : presets()) {
        const BendingSolution s = solve(p);
        const ResidualPair r = solution_residuals(s, 201);
        we = std::max(we, r.equilibrium);
        wb = std::max(wb, r.boundary);
        if (!(r.equilibrium <= 1e-9)) o.fail(name + " equilibrium " + fmt("%.3g", r.equilibrium));
        if (!(r.boundary <= 1e-10)) o.fail(name + " boundary " + fmt("%.3g", r.boundary));
        const ResidualPair m = solution_residuals(mutate_solution(s, 1e-3), 201);
        if (!(m.equilibrium > 1e-9 || m.boundary > 1e-10)) o.fail(name + " mutation not detected");
        ++n;
    }
    o.note(std::to_string(n) + " presets, worst equilibrium " + fmt("%.2g", we) + ", boundary " + fmt("%.2g", wb) +
           ", all mutations detected");
    return o;
}

Outcome criterion10() {
    Outcome o;
    const BendingProblem p = preset("penalization_zero_poisson");
    BendingProblem sg = p;
    sg.model = Model::SecondGradient;
    sg.variant = Variant::Full;
    sg.scales.e = *p.scales.micro;
    sg.scales.micro.reset();
    const double Dsg = solve(sg).Deff;
    double prev = -INFINITY, last = 0.0;
    for (double t : {1.0, 10.0, 100.0, 1e3, 1e4}) {
        last = penalized_second_gradient_limit(p, t).Deff;
        if (!(last >= prev)) o.fail("not monotone at t=" + fmt("%g", t));
        prev = last;
    }
    const double e = last / Dsg - 1.0;
    o.note("D(t=1e4)=" + fmt("%.10g", last) + " D_sg=" + fmt("%.10g", Dsg) + " rel " + fmt("%.3g", e));
    if (!(std::abs(e) <= 0.01)) o.fail("not within 1%");
    return o;
}

}  // namespace

int main(int argc, char** argv) {
    if (argc > 1) preset_dir = argv[1];
    const std::vector<std::function<Outcome()>> crit = {criterion1, criterion2, criterion3, criterion4, criterion5,
                                                        criterion6, criterion7, criterion8, criterion9, criterion10};
    int failed = 0;
    for (std::size_t i = 0; i < crit.size(); ++i) {
        Outcome o;
        try {
            o = crit[i]();
        } catch (const std::exception& ex) {
            o.fail(std::string("exception: ") + ex.what());
        }
        std::printf("criterion %zu: %s  %s\n", i + 1, o.pass ? "PASS" : "FAIL", o.detail.c_str());
        std::fflush(stdout);
        if (!o.pass) ++failed;
    }
    return failed ? 1 : 0;
}
