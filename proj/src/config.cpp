#include "bresse/config.hpp"

#include <cmath>
#include <fstream>
#include <set>

#include "bresse/errors.hpp"
#include "bresse/system.hpp"

namespace bresse {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& msg) { throw ValidationError(msg); }

const json& member(const json& j, const std::string& key,
                   const std::string& ctx) {
    if (!j.contains(key)) fail("missing key \"" + ctx + key + "\"");
    return j.at(key);
}

void check_keys(const json& j, const std::set<std::string>& allowed,
                const std::string& ctx) {
    if (!j.is_object()) fail("\"" + ctx + "\" must be a JSON object");
    for (const auto& [key, _] : j.items())
        if (!allowed.count(key))
            fail("unknown key \"" + ctx + key + "\"");
}

double number(const json& j, const std::string& key, const std::string& ctx) {
    const json& v = member(j, key, ctx);
    if (!v.is_number()) fail("\"" + ctx + key + "\" must be a number");
    return v.get<double>();
}

int integer(const json& j, const std::string& key, const std::string& ctx) {
    const json& v = member(j, key, ctx);
    if (!v.is_number_integer()) fail("\"" + ctx + key + "\" must be an integer");
    return v.get<int>();
}

std::string text(const json& j, const std::string& key, const std::string& ctx) {
    const json& v = member(j, key, ctx);
    if (!v.is_string()) fail("\"" + ctx + key + "\" must be a string");
    return v.get<std::string>();
}

PronyKernel parse_kernel(const json& j, const std::string& ctx) {
    if (!j.is_array() || j.empty())
        fail("\"" + ctx + "\" must be a nonempty array of {a,b} modes");
    PronyKernel kernel;
    for (const auto& m : j) {
        check_keys(m, {"a", "b"}, ctx + ".");
        kernel.modes.push_back({number(m, "a", ctx + "."),
                                number(m, "b", ctx + ".")});
    }
    return kernel;
}

ThermalLaw parse_law(const json& j) {
    const std::string ctx = "model.law.";
    const std::string kind_name = text(j, "kind", ctx);
    const auto maybe_kind = law_from_name(kind_name);
    if (!maybe_kind) fail("unknown \"model.law.kind\": " + kind_name);
    ThermalLawKind kind = *maybe_kind;
    std::set<std::string> allowed = {"kind", "normalization"};
    ThermalLaw law;
    law.kind = kind;
    switch (kind) {
        case ThermalLawKind::Fourier:
            break;
        case ThermalLawKind::Cattaneo:
        case ThermalLawKind::LordShulman:
            allowed.insert("tau");
            law.tau = number(j, "tau", ctx);
            break;
        case ThermalLawKind::GurtinPipkin:
            allowed.insert("kernel");
            law.kernel = parse_kernel(member(j, "kernel", ctx), "model.law.kernel");
            break;
        case ThermalLawKind::ColemanGurtin:
            allowed.insert("blend");
            allowed.insert("kernel");
            law.varpi = number(j, "blend", ctx);
            law.kernel = parse_kernel(member(j, "kernel", ctx), "model.law.kernel");
            break;
        case ThermalLawKind::GreenNaghdiIII:
            allowed.insert("beta");
            allowed.insert("varpi");
            law.beta = number(j, "beta", ctx);
            law.varpi = number(j, "varpi", ctx);
            break;
        case ThermalLawKind::TzouDPL:
            allowed.insert("tau_q");
            allowed.insert("tau_theta");
            law.tau_q = number(j, "tau_q", ctx);
            law.tau_theta = number(j, "tau_theta", ctx);
            break;
        case ThermalLawKind::TypeIIIMemory:
            allowed.insert("beta");
            allowed.insert("varpi");
            allowed.insert("kernel");
            law.beta = number(j, "beta", ctx);
            law.varpi = number(j, "varpi", ctx);
            law.kernel = parse_kernel(member(j, "kernel", ctx), "model.law.kernel");
            break;
    }
    check_keys(j, allowed, ctx);
    if (j.contains("normalization"))
        law.normalization = number(j, "normalization", ctx);
    law.validate();
    return law;
}

PhysicalParams parse_physical(const json& j) {
    const std::string ctx = "model.physical.";
    check_keys(j,
               {"rho", "I1", "I2", "I3", "E", "kprimeG", "alpha", "delta11",
                "delta13", "c_nu", "Theta0", "R", "L"},
               ctx);
    PhysicalParams p;
    p.rho = number(j, "rho", ctx);
    p.I1 = number(j, "I1", ctx);
    p.I2 = number(j, "I2", ctx);
    p.I3 = number(j, "I3", ctx);
    p.E = number(j, "E", ctx);
    p.kprimeG = number(j, "kprimeG", ctx);
    p.alpha = number(j, "alpha", ctx);
    p.delta11 = number(j, "delta11", ctx);
    p.delta13 = number(j, "delta13", ctx);
    p.c_nu = number(j, "c_nu", ctx);
    p.Theta0 = number(j, "Theta0", ctx);
    p.R = number(j, "R", ctx);
    p.L = number(j, "L", ctx);
    p.validate();
    return p;
}

Coefficients parse_reduced(const json& j) {
    const std::string ctx = "model.reduced.";
    check_keys(j,
               {"rho1", "rho2", "k", "k0", "b", "ell", "m", "gamma", "varrho"},
               ctx);
    Coefficients c;
    c.rho1 = number(j, "rho1", ctx);
    c.rho2 = number(j, "rho2", ctx);
    c.k = number(j, "k", ctx);
    c.k0 = number(j, "k0", ctx);
    c.b = number(j, "b", ctx);
    c.ell = number(j, "ell", ctx);
    auto triple = [&](const std::string& key) {
        const json& v = member(j, key, ctx);
        if (!v.is_array() || v.size() != 3)
            fail("\"" + ctx + key + "\" must be an array of 3 numbers");
        std::array<double, 3> out{};
        for (int i = 0; i < 3; ++i) {
            if (!v[i].is_number())
                fail("\"" + ctx + key + "\" must be an array of 3 numbers");
            out[i] = v[i].get<double>();
        }
        return out;
    };
    c.m = triple("m");
    c.gamma = triple("gamma");
    c.varrho = triple("varrho");
    c.validate();
    return c;
}

json kernel_json(const PronyKernel& kernel) {
    json arr = json::array();
    for (const auto& m : kernel.modes) arr.push_back({{"a", m.a}, {"b", m.b}});
    return arr;
}

json law_json(const ThermalLaw& law) {
    json j;
    j["kind"] = law.name();
    switch (law.kind) {
        case ThermalLawKind::Fourier:
            break;
        case ThermalLawKind::Cattaneo:
        case ThermalLawKind::LordShulman:
            j["tau"] = law.tau;
            break;
        case ThermalLawKind::GurtinPipkin:
            j["kernel"] = kernel_json(law.kernel);
            break;
        case ThermalLawKind::ColemanGurtin:
            j["blend"] = law.varpi;
            j["kernel"] = kernel_json(law.kernel);
            break;
        case ThermalLawKind::GreenNaghdiIII:
            j["beta"] = law.beta;
            j["varpi"] = law.varpi;
            break;
        case ThermalLawKind::TzouDPL:
            j["tau_q"] = law.tau_q;
            j["tau_theta"] = law.tau_theta;
            break;
        case ThermalLawKind::TypeIIIMemory:
            j["beta"] = law.beta;
            j["varpi"] = law.varpi;
            j["kernel"] = kernel_json(law.kernel);
            break;
    }
    if (law.normalization) j["normalization"] = *law.normalization;
    return j;
}

} // namespace

RunConfig parse_config(const json& j) {
    check_keys(j, {"model", "grid", "integrator", "initial", "output"}, "");
    RunConfig cfg;

    const json& jm = member(j, "model", "");
    check_keys(jm, {"coupling", "law", "bc", "physical", "reduced", "L"},
               "model.");
    const std::string coupling_str = text(jm, "coupling", "model.");
    const auto maybe_coupling = coupling_from_name(coupling_str);
    if (!maybe_coupling) fail("unknown \"model.coupling\": " + coupling_str);
    cfg.model.coupling = *maybe_coupling;
    if (jm.contains("law")) {
        cfg.model.law = parse_law(jm.at("law"));
    } else if (cfg.model.coupling != CouplingPattern::Elastic) {
        fail("missing key \"model.law\" (required unless coupling is Elastic)");
    } else {
        cfg.model.law = ThermalLaw::fourier();
    }
    const std::string bc = jm.contains("bc") ? text(jm, "bc", "model.")
                                             : std::string("FullDirichlet");
    if (bc == "FullDirichlet")
        cfg.model.bc = BoundaryCondition::FullDirichlet;
    else if (bc == "MixedDN")
        cfg.model.bc = BoundaryCondition::MixedDN;
    else
        fail("\"model.bc\" must be \"FullDirichlet\" or \"MixedDN\"");

    const bool has_physical = jm.contains("physical");
    const bool has_reduced = jm.contains("reduced");
    if (has_physical == has_reduced)
        fail("\"model\" must contain exactly one of \"physical\" or \"reduced\"");
    if (has_physical) {
        if (jm.contains("L"))
            fail("\"model.L\" conflicts with \"model.physical.L\"");
        cfg.physical_input = true;
        cfg.physical = parse_physical(jm.at("physical"));
        cfg.model.coeffs = derive_coefficients(cfg.physical);
        cfg.model.L = cfg.physical.L;
    } else {
        cfg.model.coeffs = parse_reduced(jm.at("reduced"));
        cfg.model.L = number(jm, "L", "model.");
        if (!(cfg.model.L > 0) || !std::isfinite(cfg.model.L))
            fail("\"model.L\" must be positive and finite");
    }
    cfg.model.validate();

    const json& jg = member(j, "grid", "");
    check_keys(jg, {"N"}, "grid.");
    cfg.N = integer(jg, "N", "grid.");
    if (cfg.N < 2) fail("\"grid.N\" must be at least 2");

    const json& ji = member(j, "integrator", "");
    check_keys(ji, {"scheme", "dt", "T", "stride", "solve_tol"}, "integrator.");
    if (ji.contains("scheme")) {
        const std::string s = text(ji, "scheme", "integrator.");
        if (s == "implicit-midpoint")
            cfg.integrator.scheme = Scheme::ImplicitMidpoint;
        else if (s == "backward-euler")
            cfg.integrator.scheme = Scheme::BackwardEuler;
        else
            fail("\"integrator.scheme\" must be \"implicit-midpoint\" or "
                 "\"backward-euler\"");
    }
    cfg.integrator.dt = number(ji, "dt", "integrator.");
    cfg.integrator.T = number(ji, "T", "integrator.");
    if (ji.contains("stride"))
        cfg.integrator.stride = integer(ji, "stride", "integrator.");
    if (ji.contains("solve_tol"))
        cfg.integrator.solve_tol = number(ji, "solve_tol", "integrator.");
    cfg.integrator.validate();

    const json& jinit = member(j, "initial", "");
    if (!jinit.is_array()) fail("\"initial\" must be an array of modes");
    for (const auto& m : jinit) {
        check_keys(m, {"field", "mode", "amplitude"}, "initial[].");
        InitialMode im;
        im.field = text(m, "field", "initial[].");
        im.mode = integer(m, "mode", "initial[].");
        im.amplitude = number(m, "amplitude", "initial[].");
        if (im.mode < 1) fail("\"initial[].mode\" must be at least 1");
        cfg.initial.push_back(im);
    }

    if (j.contains("output")) {
        const json& jo = j.at("output");
        check_keys(jo, {"dir", "trajectory", "matrix"}, "output.");
        if (jo.contains("dir")) cfg.output_dir = text(jo, "dir", "output.");
        if (jo.contains("trajectory")) {
            if (!jo.at("trajectory").is_boolean())
                fail("\"output.trajectory\" must be a boolean");
            cfg.write_trajectory = jo.at("trajectory").get<bool>();
        }
        if (jo.contains("matrix")) {
            if (!jo.at("matrix").is_boolean())
                fail("\"output.matrix\" must be a boolean");
            cfg.write_matrix = jo.at("matrix").get<bool>();
        }
    }
    if (cfg.output_dir.empty()) cfg.output_dir = "out";
    return cfg;
}

RunConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open config file: " + path);
    json j;
    try {
        j = json::parse(in);
    } catch (const json::parse_error& e) {
        throw ValidationError(std::string("malformed JSON: ") + e.what());
    }
    return parse_config(j);
}

json to_json(const RunConfig& cfg) {
    json j;
    json jm;
    jm["coupling"] = coupling_name(cfg.model.coupling);
    if (cfg.model.coupling != CouplingPattern::Elastic)
        jm["law"] = law_json(cfg.model.law);
    jm["bc"] = bc_name(cfg.model.bc);
    if (cfg.physical_input) {
        const auto& p = cfg.physical;
        jm["physical"] = {{"rho", p.rho},         {"I1", p.I1},
                          {"I2", p.I2},           {"I3", p.I3},
                          {"E", p.E},             {"kprimeG", p.kprimeG},
                          {"alpha", p.alpha},     {"delta11", p.delta11},
                          {"delta13", p.delta13}, {"c_nu", p.c_nu},
                          {"Theta0", p.Theta0},   {"R", p.R},
                          {"L", p.L}};
    } else {
        const auto& c = cfg.model.coeffs;
        jm["reduced"] = {{"rho1", c.rho1}, {"rho2", c.rho2},
                         {"k", c.k},       {"k0", c.k0},
                         {"b", c.b},       {"ell", c.ell},
                         {"m", c.m},       {"gamma", c.gamma},
                         {"varrho", c.varrho}};
        jm["L"] = cfg.model.L;
    }
    j["model"] = jm;
    j["grid"] = {{"N", cfg.N}};
    j["integrator"] = {{"scheme", scheme_name(cfg.integrator.scheme)},
                       {"dt", cfg.integrator.dt},
                       {"T", cfg.integrator.T},
                       {"stride", cfg.integrator.stride},
                       {"solve_tol", cfg.integrator.solve_tol}};
    j["initial"] = json::array();
    for (const auto& m : cfg.initial)
        j["initial"].push_back({{"field", m.field},
                                {"mode", m.mode},
                                {"amplitude", m.amplitude}});
    j["output"] = {{"dir", cfg.output_dir},
                   {"trajectory", cfg.write_trajectory},
                   {"matrix", cfg.write_matrix}};
    return j;
}

bool config_equal(const RunConfig& a, const RunConfig& b) {
    return to_json(a) == to_json(b);
}

Eigen::VectorXd initial_state(const SemiDiscreteSystem& sys,
                              const std::vector<InitialMode>& modes) {
    Eigen::VectorXd u = Eigen::VectorXd::Zero(sys.dim);
    const double L = sys.grid.L;
    for (const auto& m : modes) {
        const int s = sys.slot_index(m.field);
        if (s < 0)
            throw ValidationError("initial mode targets unknown field \"" +
                                  m.field + "\" for this model");
        const int off = sys.slots[s].offset;
        for (int jn = 0; jn < sys.grid.N; ++jn)
            u[off + jn] +=
                m.amplitude * std::sin(m.mode * M_PI * sys.grid.x[jn] / L);
    }
    // The Tzou DPL state r = q_t + kappa*theta_x must start consistent
    // with q(0) = q_t(0) = 0 whenever theta(0) is nonzero.
    if (sys.spec.law.kind == ThermalLawKind::TzouDPL &&
        sys.spec.coupling != CouplingPattern::Elastic) {
        const double tq = sys.spec.law.tau_q;
        const auto active = active_channels(sys.spec.coupling);
        for (int i = 0; i < 3; ++i) {
            if (!active[i]) continue;
            const std::string si = std::to_string(i + 1);
            const double gamma = sys.spec.coeffs.gamma[i];
            const double w = sys.spec.law.effective_normalization(gamma);
            const double kappa =
                2.0 * w * sys.spec.law.tau_theta / (tq * tq);
            const auto theta = sys.field(u, "theta" + si);
            const int roff = sys.slot("r" + si).offset;
            const int n = sys.grid.N;
            const double h = sys.grid.h;
            for (int jn = 0; jn < n; ++jn) {
                const double tp = jn + 1 < n ? theta[jn + 1] : 0.0;
                const double tm = jn - 1 >= 0 ? theta[jn - 1] : 0.0;
                u[roff + jn] = kappa * (tp - tm) / (2 * h);
            }
        }
    }
    return u;
}

} // namespace bresse
