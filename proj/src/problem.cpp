#include "cylbend/problem.hpp"

#include <algorithm>
#include <cmath>

namespace cylbend {

namespace {

struct Named {
    const char* name;
    int value;
};

constexpr Named kModels[] = {
    {"cauchy", int(Model::Cauchy)},
    {"relaxed", int(Model::Relaxed)},
    {"micro-stretch", int(Model::MicroStretch)},
    {"cosserat", int(Model::Cosserat)},
    {"couple-stress", int(Model::CoupleStress)},
    {"micro-void", int(Model::MicroVoid)},
    {"micromorphic", int(Model::Micromorphic)},
    {"micro-strain", int(Model::MicroStrain)},
    {"second-gradient", int(Model::SecondGradient)},
};

constexpr Named kVariants[] = {
    {"none", int(Variant::None)},
    {"zeroPoisson-oneCurv", int(Variant::ZeroPoissonOneCurv)},
    {"anyPoisson-oneCurv", int(Variant::AnyPoissonOneCurv)},
    {"zeroPoisson-fullCurv", int(Variant::ZeroPoissonFullCurv)},
    {"general", int(Variant::General)},
    {"indeterminate", int(Variant::Indeterminate)},
    {"modified", int(Variant::Modified)},
    {"pseudo-consistent", int(Variant::PseudoConsistent)},
    {"oneCurv-zeroPoisson", int(Variant::OneCurvZeroPoisson)},
    {"oneCurv", int(Variant::OneCurv)},
    {"full", int(Variant::Full)},
};

void require_pos(double x, const char* what) {
    if (!(x > 0.0) || !std::isfinite(x)) throw DegenerateMaterial(std::string(what) + " must be positive");
}

}  // namespace

std::string to_string(Model m) {
    for (const auto& n : kModels)
        if (n.value == int(m)) return n.name;
    return "?";
}

std::string to_string(Variant v) {
    for (const auto& n : kVariants)
        if (n.value == int(v)) return n.name;
    return "?";
}

Model parse_model(const std::string& s) {
    for (const auto& n : kModels)
        if (s == n.name) return Model(n.value);
    throw std::invalid_argument("unknown model '" + s + "'");
}

Variant parse_variant(const std::string& s) {
    for (const auto& n : kVariants)
        if (s == n.name) return Variant(n.value);
    throw std::invalid_argument("unknown variant '" + s + "'");
}

std::vector<Variant> variants_of(Model m) {
    switch (m) {
        case Model::Relaxed:
            return {Variant::ZeroPoissonOneCurv, Variant::AnyPoissonOneCurv, Variant::ZeroPoissonFullCurv,
                    Variant::General};
        case Model::CoupleStress:
            return {Variant::Indeterminate, Variant::Modified, Variant::PseudoConsistent};
        case Model::SecondGradient:
            return {Variant::OneCurvZeroPoisson, Variant::OneCurv, Variant::Full};
        default:
            return {Variant::None};
    }
}

Variant default_variant(Model m) {
    switch (m) {
        case Model::Relaxed: return Variant::General;
        case Model::CoupleStress: return Variant::Indeterminate;
        case Model::SecondGradient: return Variant::Full;
        default: return Variant::None;
    }
}

bool variant_belongs(Model m, Variant v) {
    const auto vs = variants_of(m);
    return std::find(vs.begin(), vs.end(), v) != vs.end();
}

MaterialScales effective_scales(const BendingProblem& p) {
    if (!variant_belongs(p.model, p.variant))
        throw UnsupportedVariant("variant " + to_string(p.variant) + " does not apply to model " + to_string(p.model));
    MaterialScales s = p.scales;
    auto zero_poisson = [&] {
        s.e.lambda = 0.0;
        if (s.micro) s.micro->lambda = 0.0;
    };
    switch (p.variant) {
        case Variant::ZeroPoissonOneCurv:
            zero_poisson();
            s.a1 = s.a2 = s.a3 = 1.0;
            break;
        case Variant::AnyPoissonOneCurv:
            s.a1 = s.a2 = s.a3 = 1.0;
            break;
        case Variant::ZeroPoissonFullCurv:
            zero_poisson();
            break;
        case Variant::Modified:
            s.a2 = 0.0;
            break;
        case Variant::PseudoConsistent:
            s.a1 = 0.0;
            break;
        case Variant::OneCurvZeroPoisson:
            zero_poisson();
            s.a1 = s.a2 = 1.0;
            s.a3 = 1.5;
            break;
        case Variant::OneCurv:
            s.a1 = s.a2 = 1.0;
            s.a3 = 1.5;
            break;
        default:
            break;
    }
    return s;
}

IsotropicModuli macro_moduli(const BendingProblem& p) {
    const MaterialScales s = effective_scales(p);
    switch (p.model) {
        case Model::MicroVoid: {
            const IsotropicModuli m = s.micro_or_throw();
            const double ke = s.e.kappa(), km = m.kappa();
            return IsotropicModuli::from_mu_kappa(s.e.mu, ke * km / (ke + km));
        }
        default:
            return homogenize(s);
    }
}

void validate(const BendingProblem& p) {
    require_pos(p.h, "thickness h");
    if (!std::isfinite(p.kappa)) throw std::invalid_argument("curvature must be finite");
    const MaterialScales s = effective_scales(p);
    if (!(s.Lc >= 0.0) || !std::isfinite(s.Lc)) throw DegenerateMaterial("Lc must be non-negative");
    if (!(s.mu >= 0.0)) throw DegenerateMaterial("curvature modulus mu must be non-negative");
    if (!(s.mu_c >= 0.0)) throw DegenerateMaterial("mu_c must be non-negative");
    if (s.a1 < 0.0 || s.a2 < 0.0) throw IllPosedCurvature("curvature weights must be non-negative");
    switch (p.model) {
        case Model::Cauchy:
        case Model::Cosserat:
        case Model::CoupleStress:
        case Model::SecondGradient: {
            if (s.micro) s.micro->require_positive("micro moduli");
            s.e.require_positive("meso moduli");
            homogenize(s).require_positive("macro moduli");
            if (p.model == Model::SecondGradient && !(3.0 * s.a1 + s.a3 > 0.0))
                throw IllPosedCurvature("second gradient requires 3 a1 + a3 > 0");
            break;
        }
        case Model::Relaxed: {
            s.e.require_positive("meso moduli");
            s.micro_or_throw().require_positive("micro moduli");
            const bool full = p.variant == Variant::ZeroPoissonFullCurv || p.variant == Variant::General;
            if (full && !(s.a1 > 0.0 && s.a2 > 0.0))
                throw IllPosedCurvature("full-curvature relaxed variants need a1 > 0 and a2 > 0");
            break;
        }
        case Model::MicroStretch:
        case Model::MicroVoid: {
            require_pos(s.e.kappa(), "kappa_e");
            require_pos(s.e.mu, "mu_e");
            require_pos(s.micro_or_throw().kappa(), "kappa_micro");
            if (p.model == Model::MicroStretch) require_pos(homogenize(s).mu, "mu_macro");
            if (!(s.a2 > 0.0)) throw IllPosedCurvature("a2 must be positive for this model");
            break;
        }
        case Model::Micromorphic:
        case Model::MicroStrain: {
            s.e.require_positive("meso moduli");
            s.micro_or_throw().require_positive("micro moduli");
            if (!(s.a1 > 0.0)) throw IllPosedCurvature("a1 must be positive");
            if (p.model == Model::Micromorphic && !(s.a2 > 0.0)) throw IllPosedCurvature("a2 must be positive");
            if (!(3.0 * s.a1 + s.a3 > 0.0)) throw IllPosedCurvature("3 a1 + a3 must be positive");
            break;
        }
    }
}

}  // namespace cylbend
