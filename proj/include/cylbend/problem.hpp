#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cylbend/materials.hpp"

namespace cylbend {

enum class Model {
    Cauchy,
    Relaxed,
    MicroStretch,
    Cosserat,
    CoupleStress,
    MicroVoid,
    Micromorphic,
    MicroStrain,
    SecondGradient,
};

enum class Variant {
    None,
    // relaxed micromorphic
    ZeroPoissonOneCurv,
    AnyPoissonOneCurv,
    ZeroPoissonFullCurv,
    General,
    // couple stress
    Indeterminate,
    Modified,
    PseudoConsistent,
    // second gradient
    OneCurvZeroPoisson,
    OneCurv,
    Full,
};

class UnsupportedVariant : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct BendingProblem {
    Model model = Model::Cauchy;
    Variant variant = Variant::None;
    MaterialScales scales;
    double h = 1.0;
    double kappa = 1.0;
};

std::string to_string(Model m);
std::string to_string(Variant v);
Model parse_model(const std::string& s);
Variant parse_variant(const std::string& s);

// default variant for a model (General, Indeterminate, Full, or None)
Variant default_variant(Model m);
std::vector<Variant> variants_of(Model m);
bool variant_belongs(Model m, Variant v);

// Scales with the variant restrictions applied: zero Poisson sets
// lambda_e = lambda_micro = 0, one curvature sets a1 = a2 = a3 = 1 (relaxed)
// or a1 = a2 = 1, a3 = 3/2 (second gradient), modified couple stress sets
// a2 = 0 and pseudo-consistent sets a1 = 0.
MaterialScales effective_scales(const BendingProblem& p);

// Macro moduli used by each model. Cauchy, Cosserat, couple stress and second
// gradient use homogenize(); micro-stretch uses the homogenized shear
// modulus; micro-void treats the micro scale as rigid in shear (mu_macro =
// mu_e).
IsotropicModuli macro_moduli(const BendingProblem& p);

// Moduli validation shared by the solvers; throws DegenerateMaterial.
void validate(const BendingProblem& p);

inline double bending_modulus(const IsotropicModuli& m) { return m.plate_modulus(); }

}  // namespace cylbend
