#include <CLI11.hpp>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <locale>
#include <sstream>

#include "cylbend/materials.hpp"
#include "cylbend/oracle.hpp"
#include "cylbend/params.hpp"
#include "cylbend/semi_analytic.hpp"

#ifndef CYLBEND_PRESET_DIR
#define CYLBEND_PRESET_DIR "presets"
#endif

using namespace cylbend;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string num(double v, const char* fmt = "%.17g") {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[40];
    std::snprintf(buf, sizeof buf, fmt, v);
    return buf;
}

// rows of numbers or strings, written as CSV or JSON lines
class Table {
public:
    explicit Table(std::vector<std::string> cols) : cols_(std::move(cols)) {}
    void row(std::vector<nlohmann::json> r) { rows_.push_back(std::move(r)); }

    void write(std::ostream& os, const std::string& format) const {
        if (format == "json") {
            for (const auto& r : rows_) {
                nlohmann::ordered_json j;
                for (std::size_t i = 0; i < cols_.size(); ++i) j[cols_[i]] = r[i];
                os << j.dump() << "\n";
            }
            return;
        }
        for (std::size_t i = 0; i < cols_.size(); ++i) os << (i ? "," : "") << cols_[i];
        os << "\n";
        for (const auto& r : rows_) {
            for (std::size_t i = 0; i < r.size(); ++i) {
                if (i) os << ",";
                if (r[i].is_number())
                    os << num(r[i].get<double>());
                else if (r[i].is_null())
                    os << "nan";
                else
                    os << r[i].get<std::string>();
            }
            os << "\n";
        }
    }

private:
    std::vector<std::string> cols_;
    std::vector<std::vector<nlohmann::json>> rows_;
};

nlohmann::json jnum(double v) { return std::isfinite(v) ? nlohmann::json(v) : nlohmann::json(nullptr); }

struct Common {
    std::string model;
    std::string variant;
    std::string params;
    std::string out;
    std::string format = "csv";
};

void add_common(CLI::App* sub, Common& c, bool need_model) {
    auto* m = sub->add_option("--model", c.model, "model name");
    if (need_model) m->required();
    sub->add_option("--variant", c.variant, "model variant");
    sub->add_option("--params", c.params, "parameter file (JSON)");
    sub->add_option("--out", c.out, "output path (default stdout)");
    sub->add_option("--format", c.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
}

BendingProblem make_problem(const Common& c) {
    BendingProblem p;
    try {
        p.model = parse_model(c.model);
        p.variant = c.variant.empty() ? default_variant(p.model) : parse_variant(c.variant);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    if (!variant_belongs(p.model, p.variant))
        throw UsageError("variant " + c.variant + " does not belong to model " + c.model);
    if (c.params.empty()) throw UsageError("--params is required");
    const ParameterSet ps = load_params(c.params);
    p.scales = ps.scales;
    p.h = ps.h;
    validate(p);
    return p;
}

std::vector<double> parse_range(const std::string& spec) {
    std::vector<std::string> parts;
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ':')) parts.push_back(item);
    if (parts.size() != 3) throw UsageError("--lc-range expects lo:hi:n");
    double lo, hi;
    int n;
    try {
        lo = std::stod(parts[0]);
        hi = std::stod(parts[1]);
        n = std::stoi(parts[2]);
    } catch (const std::exception&) {
        throw UsageError("--lc-range expects lo:hi:n");
    }
    if (!(lo > 0.0) || !(hi > lo) || n < 2) throw UsageError("--lc-range needs 0 < lo < hi and n >= 2");
    std::vector<double> v(n);
    // rounded to 15 digits so decades land on 0.1, 10, ...
    for (int i = 0; i < n; ++i) v[i] = std::stod(num(lo * std::pow(hi / lo, double(i) / (n - 1)), "%.15g"));
    return v;
}

BendingProblem with_lc(BendingProblem p, double lc_over_h) {
    p.scales.Lc = lc_over_h * p.h;
    return p;
}

void emit(const Common& c, const Table& t) {
    if (c.out.empty()) {
        t.write(std::cout, c.format);
        return;
    }
    std::ofstream os(c.out);
    if (!os) throw UsageError("cannot write " + c.out);
    os.imbue(std::locale::classic());
    t.write(os, c.format);
}

void cmd_stiffness(const Common& c, const std::string& range) {
    const BendingProblem p = make_problem(c);
    Table t({"Lc_over_h", "Mc_norm", "Mm_norm", "Wtot_norm", "Deff"});
    for (double r : parse_range(range)) {
        const BendingProblem q = with_lc(p, r);
        const BendingSolution s = solve(q);
        const double ms = moment_scale(q), es = energy_scale(q);
        t.row({r, s.Mc / ms, s.Mm / ms, s.Wtot / es, s.Deff / (q.h * q.h * q.h / 12.0)});
    }
    emit(c, t);
}

void cmd_profile(const Common& c, const std::vector<double>& lcs, int grid, std::vector<std::string> fields,
                 bool limits) {
    const BendingProblem p = make_problem(c);
    if (grid < 2) throw UsageError("--grid must be at least 2");
    const BendingSolution ref = solve(with_lc(p, 1.0));
    if (fields.empty()) fields = ref.field_names();
    for (const auto& f : fields)
        if (!ref.has_field(f)) throw UsageError("field " + f + " is not defined for " + c.model);
    std::vector<std::pair<std::string, BendingSolution>> sols;
    for (double r : lcs) sols.emplace_back(num(r, "%.6g"), solve(with_lc(p, r)));
    if (limits) {
        sols.emplace_back("0", solve(with_lc(p, 0.0)));
        sols.emplace_back("inf", solve(with_lc(p, 1e6)));
    }
    std::vector<std::string> cols{"x2_over_h"};
    for (const auto& f : fields)
        for (const auto& s : sols) cols.push_back(f + "@Lc/h=" + s.first);
    Table t(cols);
    const std::vector<double> xs = thickness_grid(p.h, grid);
    std::vector<std::vector<double>> data;
    for (const auto& f : fields)
        for (const auto& s : sols) data.push_back(s.second.sample(f, grid));
    for (int i = 0; i < grid; ++i) {
        std::vector<nlohmann::json> r{xs[i] / p.h};
        for (const auto& d : data) r.push_back(jnum(d[i]));
        t.row(r);
    }
    emit(c, t);
}

void cmd_limits(const Common& c) {
    Common cc = c;
    const Model m = make_problem(Common{c.model, {}, c.params, {}, {}}).model;
    std::vector<Variant> vs;
    if (c.variant.empty()) {
        vs = variants_of(m);
        if (vs.empty()) vs.push_back(Variant::None);
    } else {
        vs.push_back(make_problem(c).variant);
    }
    Table t({"model", "variant", "D0_norm", "Dinf_norm", "Lc_to_0", "Lc_to_inf"});
    for (Variant v : vs) {
        cc.variant = to_string(v);
        const BendingProblem p = make_problem(cc);
        const LimitStiffness l = limit_stiffnesses(p);
        const double I = p.h * p.h * p.h / 12.0;
        t.row({to_string(m), to_string(v), l.D0 / I, l.unbounded ? nlohmann::json(nullptr) : jnum(l.Dinf / I),
               "D_macro", l.label_inf});
    }
    emit(c, t);
}

void cmd_convert(const Common& c) {
    const std::string model = c.model.empty() ? "relaxed" : c.model;
    const std::string variant = c.variant.empty() ? "quoted" : c.variant;
    if (c.params.empty()) throw UsageError("--params is required");
    const MaterialScales s = load_params(c.params).scales;
    Table t({"coefficient", "value"});
    auto mindlin = [&](const MindlinCoefficients& mc) {
        t.row({"mu_hat", mc.mu_hat});
        t.row({"lambda_hat", mc.lambda_hat});
        t.row({"b1", mc.b1});
        t.row({"b2", mc.b2});
        t.row({"b3", mc.b3});
        t.row({"g1", mc.g1});
        t.row({"g2", mc.g2});
        for (int i = 1; i <= 15; ++i) t.row({"a" + std::to_string(i) + "_hat", mc.a_hat[i]});
    };
    if (model == "relaxed") {
        if (variant == "quoted")
            mindlin(to_mindlin_relaxed_quoted(s));
        else if (variant == "consistent")
            mindlin(to_mindlin_relaxed(s));
        else
            throw UsageError("convert --variant must be quoted or consistent");
    } else if (model == "micromorphic") {
        mindlin(to_mindlin_reduced(s));
    } else if (model == "second-gradient") {
        const SecondGradientCoefficients sg = to_mindlin_second_gradient(s.mu, s.Lc, s.a1, s.a2, s.a3);
        for (int i = 1; i <= 5; ++i) t.row({"a" + std::to_string(i) + "_hat", sg.a_hat[i]});
    } else if (model == "cosserat") {
        const CosseratClassicCoefficients cc = cosserat_classic(s.a1, s.a2, s.a3);
        t.row({"alpha", cc.alpha});
        t.row({"beta", cc.beta});
        t.row({"gamma", cc.gamma});
    } else {
        throw UsageError("convert supports relaxed, micromorphic, second-gradient and cosserat");
    }
    emit(c, t);
}

void cmd_lakes(const Common& c, double gamma_tilde) {
    if (c.params.empty()) throw UsageError("--params is required");
    const ParameterSet ps = load_params(c.params);
    BendingProblem p;
    p.model = c.model.empty() ? Model::Cosserat : parse_model(c.model);
    if (p.model != Model::Cosserat && p.model != Model::CoupleStress)
        throw UsageError("lakes applies to cosserat and couple-stress");
    p.variant = c.variant.empty() ? default_variant(p.model) : parse_variant(c.variant);
    p.scales = ps.scales;
    p.h = ps.h;
    validate(p);
    const MaterialScales s = effective_scales(p);
    const double gt = std::isnan(gamma_tilde) ? s.mu * s.Lc * s.Lc * (s.a1 + s.a2) / 2.0 : gamma_tilde;
    const LakesResult r = lakes_omega(macro_moduli(p), gt, p.h);
    Table t({"gamma_tilde", "ell_b", "Omega"});
    t.row({gt, r.ell_b, r.omega});
    emit(c, t);
}

int cmd_verify(const Common& c, bool all, const std::string& dir, const std::vector<double>& lcs, bool sweeps) {
    std::vector<std::pair<std::string, BendingProblem>> problems;
    if (all) {
        for (const Preset& pr : load_preset_index(dir)) problems.emplace_back(pr.name, preset_problem(pr, dir));
    } else {
        problems.emplace_back(c.params, make_problem(c));
    }
    std::ofstream file;
    std::ostream* os = &std::cout;
    if (!c.out.empty()) {
        file.open(c.out);
        if (!file) throw UsageError("cannot write " + c.out);
        os = &file;
    }
    VerifyOptions opt;
    bool ok = true;
    for (const auto& [name, p] : problems)
        for (double r : lcs) {
            opt.sweeps = sweeps && r == lcs.front();
            const VerificationReport rep = verify_model(with_lc(p, r), opt);
            *os << rep.json_lines() << std::flush;
            ok = ok && rep.all_pass();
        }
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    std::cout.imbue(std::locale::classic());
    CLI::App app{"cylindrical bending of generalized continua"};
    app.require_subcommand(1);

    Common c;
    std::string range = "1e-2:1e2:121";
    auto* st = app.add_subcommand("stiffness", "moments, energy and stiffness over an Lc/h sweep");
    add_common(st, c, true);
    st->add_option("--lc-range", range, "lo:hi:n logarithmic Lc/h sweep");

    std::vector<double> plcs{0.1, 1.0, 10.0};
    int grid = 201;
    std::vector<std::string> fields;
    bool no_limits = false;
    auto* pr = app.add_subcommand("profile", "through-thickness profiles");
    add_common(pr, c, true);
    pr->add_option("--lc", plcs, "Lc/h values");
    pr->add_option("--grid", grid, "number of uniform samples");
    pr->add_option("--fields", fields, "fields to print (default all)");
    pr->add_flag("--no-limits", no_limits, "omit the Lc -> 0 and Lc -> infinity curves");

    auto* li = app.add_subcommand("limits", "limit stiffnesses for Lc -> 0 and Lc -> infinity");
    add_common(li, c, true);

    auto* co = app.add_subcommand("convert", "curvature coefficients in Mindlin form");
    add_common(co, c, false);

    double gamma_tilde = NAN;
    auto* la = app.add_subcommand("lakes", "bending length and rigidity ratio");
    add_common(la, c, false);
    la->add_option("--gamma-tilde", gamma_tilde, "override the bending modulus gamma~");

    bool all = false, no_sweeps = false;
    std::string dir = CYLBEND_PRESET_DIR;
    std::vector<double> vlcs{0.01, 0.1, 1.0, 10.0};
    auto* ve = app.add_subcommand("verify", "cross-check against the finite element oracle");
    add_common(ve, c, false);
    ve->add_flag("--all", all, "verify every bundled preset");
    ve->add_option("--presets", dir, "preset directory");
    ve->add_option("--lc", vlcs, "Lc/h values");
    ve->add_flag("--no-sweeps", no_sweeps, "skip limit and sweep checks");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (st->parsed()) cmd_stiffness(c, range);
        if (pr->parsed()) cmd_profile(c, plcs, grid, fields, !no_limits);
        if (li->parsed()) cmd_limits(c);
        if (co->parsed()) cmd_convert(c);
        if (la->parsed()) cmd_lakes(c, gamma_tilde);
        if (ve->parsed()) {
            if (!all && c.model.empty()) throw UsageError("verify needs --model or --all");
            return cmd_verify(c, all, dir, vlcs, !no_sweeps);
        }
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const ParameterError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const DegenerateMaterial& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const IllPosedCurvature& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
