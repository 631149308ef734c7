#include "cylbend/params.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <set>
#include <sstream>

namespace cylbend {

namespace {

using nlohmann::json;

double number(const json& j, const std::string& key) {
    const json& v = j.at(key);
    if (!v.is_number()) throw ParameterError("parameter " + key + " must be a number");
    const double d = v.get<double>();
    if (!std::isfinite(d)) throw ParameterError("parameter " + key + " must be finite");
    return d;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParameterError("cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

}  // namespace

ParameterSet parse_params(const std::string& json_text) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw ParameterError(std::string("malformed parameter file: ") + e.what());
    }
    if (!j.is_object()) throw ParameterError("parameter file must hold a JSON object");
    static const std::set<std::string> known{"mu_e", "lambda_e", "mu_micro", "lambda_micro", "mu_c", "mu",
                                             "Lc",   "a1",       "a2",       "a3",           "h"};
    for (const auto& item : j.items())
        if (!known.count(item.key())) throw ParameterError("unknown parameter key: " + item.key());
    if (!j.contains("mu_e")) throw ParameterError("parameter mu_e is required");
    if (j.contains("mu_micro") != j.contains("lambda_micro"))
        throw ParameterError("mu_micro and lambda_micro must be given together");

    ParameterSet ps;
    MaterialScales& s = ps.scales;
    s.e.mu = number(j, "mu_e");
    s.e.lambda = j.contains("lambda_e") ? number(j, "lambda_e") : 0.0;
    if (j.contains("mu_micro")) s.micro = IsotropicModuli{number(j, "mu_micro"), number(j, "lambda_micro")};
    auto opt = [&](const char* key, double& dst) {
        if (j.contains(key)) dst = number(j, key);
    };
    opt("mu_c", s.mu_c);
    opt("mu", s.mu);
    opt("a1", s.a1);
    opt("a2", s.a2);
    opt("a3", s.a3);
    opt("h", ps.h);
    s.Lc = ps.h;
    opt("Lc", s.Lc);
    if (!(ps.h > 0.0)) throw ParameterError("h must be positive");
    if (s.Lc < 0.0) throw ParameterError("Lc must be non-negative");
    if (s.mu_c < 0.0) throw ParameterError("mu_c must be non-negative");
    if (s.mu < 0.0) throw ParameterError("mu must be non-negative");
    if (s.a1 < 0.0 || s.a2 < 0.0 || s.a3 < 0.0) throw ParameterError("curvature weights must be non-negative");
    return ps;
}

ParameterSet load_params(const std::string& path) { return parse_params(slurp(path)); }

std::vector<Preset> load_preset_index(const std::string& dir) {
    const std::string path = (std::filesystem::path(dir) / "index.json").string();
    json j;
    try {
        j = json::parse(slurp(path));
    } catch (const json::parse_error& e) {
        throw ParameterError("malformed preset index: " + std::string(e.what()));
    }
    if (!j.is_array()) throw ParameterError("preset index must be a JSON array");
    std::vector<Preset> out;
    for (const auto& e : j) {
        Preset p;
        p.name = e.at("name").get<std::string>();
        p.file = e.at("file").get<std::string>();
        p.model = parse_model(e.at("model").get<std::string>());
        p.variant = e.contains("variant") ? parse_variant(e.at("variant").get<std::string>()) : default_variant(p.model);
        if (!variant_belongs(p.model, p.variant))
            throw ParameterError("preset " + p.name + ": variant does not belong to the model");
        out.push_back(p);
    }
    return out;
}

BendingProblem preset_problem(const Preset& p, const std::string& dir) {
    const ParameterSet ps = load_params((std::filesystem::path(dir) / p.file).string());
    BendingProblem bp;
    bp.model = p.model;
    bp.variant = p.variant;
    bp.scales = ps.scales;
    bp.h = ps.h;
    validate(bp);
    return bp;
}

}  // namespace cylbend
