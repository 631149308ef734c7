#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "cylbend/problem.hpp"

namespace cylbend {

class ParameterError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Flat JSON object with keys mu_e, lambda_e, mu_micro, lambda_micro, mu_c,
// mu, Lc, a1, a2, a3, h. Unknown keys are rejected. Without mu_micro and
// lambda_micro the micro scale is taken as rigid.
struct ParameterSet {
    MaterialScales scales;
    double h = 1.0;
};

ParameterSet parse_params(const std::string& json_text);
ParameterSet load_params(const std::string& path);

struct Preset {
    std::string name;
    std::string file;
    Model model = Model::Cauchy;
    Variant variant = Variant::None;
};

// index.json in the preset directory: [{"name", "file", "model", "variant"}]
std::vector<Preset> load_preset_index(const std::string& dir);
BendingProblem preset_problem(const Preset& p, const std::string& dir);

}  // namespace cylbend
