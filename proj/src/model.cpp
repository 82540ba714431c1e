#include "bresse/model.hpp"

#include <cmath>
#include <sstream>

#include "bresse/errors.hpp"

namespace bresse {

const char* bc_name(BoundaryCondition bc) {
    switch (bc) {
        case BoundaryCondition::FullDirichlet: return "FullDirichlet";
        case BoundaryCondition::MixedDN: return "MixedDN";
    }
    return "?";
}

bool Term::operator==(const Term& other) const {
    if (field != other.field || dt != other.dt || dx != other.dx ||
        conv_channel != other.conv_channel || symbol != other.symbol)
        return false;
    const double scale = std::max({1.0, std::abs(value), std::abs(other.value)});
    return std::abs(value - other.value) <= 1e-12 * scale;
}

void ModelSpec::validate(std::vector<std::string>* warnings) const {
    coeffs.validate();
    if (!(L > 0)) throw ValidationError("L must be positive");
    if (coupling == CouplingPattern::Elastic) {
        if (law.kind != ThermalLawKind::Fourier && warnings != nullptr)
            warnings->push_back("Elastic coupling ignores the thermal law");
    } else {
        law.validate();
    }
}

std::string ModelSpec::name() const {
    if (coupling == CouplingPattern::Elastic) return "(Elastic)";
    return std::string("(") + coupling_name(coupling) + ", " + law.name() + ")";
}

const Equation* ModelDescription::find_equation(const std::string& label) const {
    for (const auto& eq : equations)
        if (eq.label == label) return &eq;
    return nullptr;
}

Forces compute_forces(const Coefficients& c, const StrainState& s,
                      const ChannelTemps& t) {
    Forces f;
    f.elastic.Q = c.k * (s.phi_x + s.psi + c.ell * s.w);
    f.elastic.M = c.b * s.psi_x;
    f.elastic.N = c.k0 * (s.w_x - c.ell * s.phi);
    f.thermoelastic.Q = f.elastic.Q - c.m[0] * t.theta1;
    f.thermoelastic.M = f.elastic.M - c.m[2] * t.theta3;
    f.thermoelastic.N = f.elastic.N - c.m[1] * t.theta2;
    return f;
}

namespace {

std::string idx(const std::string& base, int channel) {
    return base + std::to_string(channel);
}

// Appends `value * d^dt_t d^dx_x field` unless the value vanishes.
void add_term(Equation& eq, double value, std::string symbol, std::string field,
              int dt, int dx, int conv_channel = 0) {
    if (value == 0.0) return;
    eq.terms.push_back(Term{value, std::move(symbol), std::move(field), dt, dx,
                            conv_channel});
}

// Mechanical equations shared by every system; coupling terms appear only
// for active channels with nonzero m_i.  theta_name[i] carries the
// description-level name of channel i's temperature: "theta{i}" for
// first-order laws, p-form laws express it as the time derivative of
// "p{i}" (theta_dt = 1).
struct ThetaRef {
    std::string field;
    int dt = 0; // extra time-derivative order representing theta itself
};

void mechanical_equations(ModelDescription& out, const Coefficients& c,
                          const std::array<bool, 3>& active,
                          const std::array<ThetaRef, 3>& theta) {
    const double ell = c.ell;

    Equation phi{"phi", {}};
    add_term(phi, c.rho1, "rho1", "phi", 2, 0);
    add_term(phi, -c.k, "-k", "phi", 0, 2);
    add_term(phi, -c.k, "-k", "psi", 0, 1);
    add_term(phi, -c.k * ell, "-k*ell", "w", 0, 1);
    add_term(phi, -ell * c.k0, "-ell*k0", "w", 0, 1);
    add_term(phi, ell * ell * c.k0, "ell^2*k0", "phi", 0, 0);
    if (active[0])
        add_term(phi, c.m[0], "m1", theta[0].field, theta[0].dt, 1);
    if (active[1])
        add_term(phi, ell * c.m[1], "ell*m2", theta[1].field, theta[1].dt, 0);
    out.equations.push_back(std::move(phi));

    Equation psi{"psi", {}};
    add_term(psi, c.rho2, "rho2", "psi", 2, 0);
    add_term(psi, -c.b, "-b", "psi", 0, 2);
    add_term(psi, c.k, "k", "phi", 0, 1);
    add_term(psi, c.k, "k", "psi", 0, 0);
    add_term(psi, c.k * ell, "k*ell", "w", 0, 0);
    if (active[2])
        add_term(psi, c.m[2], "m3", theta[2].field, theta[2].dt, 1);
    if (active[0])
        add_term(psi, -c.m[0], "-m1", theta[0].field, theta[0].dt, 0);
    out.equations.push_back(std::move(psi));

    Equation w{"w", {}};
    add_term(w, c.rho1, "rho1", "w", 2, 0);
    add_term(w, -c.k0, "-k0", "w", 0, 2);
    add_term(w, ell * c.k0, "ell*k0", "phi", 0, 1);
    add_term(w, ell * c.k, "ell*k", "phi", 0, 1);
    add_term(w, ell * c.k, "ell*k", "psi", 0, 0);
    add_term(w, ell * ell * c.k, "ell^2*k", "w", 0, 0);
    if (active[1])
        add_term(w, c.m[1], "m2", theta[1].field, theta[1].dt, 1);
    if (active[0])
        add_term(w, -ell * c.m[0], "-ell*m1", theta[0].field, theta[0].dt, 0);
    out.equations.push_back(std::move(w));
}

// Coupling terms m_i * dG_i/dt of channel i's heat balance, where
// G_1 = phi_x + psi + ell*w, G_2 = w_x - ell*phi, G_3 = psi_x.
void add_strain_rate(Equation& eq, const Coefficients& c, int channel) {
    const double m = c.m[channel - 1];
    if (m == 0.0) return;
    const std::string ms = idx("m", channel);
    switch (channel) {
        case 1:
            add_term(eq, m, ms, "phi", 1, 1);
            add_term(eq, m, ms, "psi", 1, 0);
            add_term(eq, m * c.ell, ms + "*ell", "w", 1, 0);
            break;
        case 2:
            add_term(eq, m, ms, "w", 1, 1);
            add_term(eq, -m * c.ell, "-" + ms + "*ell", "phi", 1, 0);
            break;
        case 3:
            add_term(eq, m, ms, "psi", 1, 1);
            break;
    }
}

} // namespace

ModelDescription assemble_model(const ModelSpec& spec,
                                std::vector<std::string>* warnings) {
    spec.validate(warnings);

    ModelDescription out;
    out.spec = spec;
    out.fields = {
        {"phi", "displacement", 2, 0},
        {"psi", "rotation", 2, 0},
        {"w", "longitudinal", 2, 0},
    };

    const auto active = active_channels(spec.coupling);
    const auto& c = spec.coeffs;
    const auto& law = spec.law;
    const bool p_form = law.kind == ThermalLawKind::GreenNaghdiIII ||
                        law.kind == ThermalLawKind::TypeIIIMemory;

    std::array<ThetaRef, 3> theta;
    for (int i = 1; i <= 3; ++i)
        theta[i - 1] = p_form ? ThetaRef{idx("p", i), 1} : ThetaRef{idx("theta", i), 0};

    mechanical_equations(out, c, active, theta);

    if (spec.coupling == CouplingPattern::Elastic) return out;

    for (int i = 1; i <= 3; ++i) {
        if (!active[i - 1]) continue;
        const double varrho = c.varrho[i - 1];
        const double gamma = c.gamma[i - 1];
        const double w = law.effective_normalization(gamma);
        const std::string th = idx("theta", i);
        const std::string q = idx("q", i);
        const std::string p = idx("p", i);
        const std::string vs = idx("varrho", i);
        const std::string gs = idx("gamma", i);
        out.channel_classification[i - 1] = law.channel_classification();

        switch (law.kind) {
            case ThermalLawKind::Fourier: {
                out.fields.push_back({th, "temperature", 1, i});
                Equation eq{th, {}};
                add_term(eq, varrho, vs, th, 1, 0);
                add_term(eq, -gamma * w, w == 1.0 ? "-" + gs : "-" + gs + "*" + idx("varpi", i),
                         th, 0, 2);
                add_strain_rate(eq, c, i);
                out.equations.push_back(std::move(eq));
                break;
            }
            case ThermalLawKind::Cattaneo:
            case ThermalLawKind::LordShulman: {
                out.fields.push_back({th, "temperature", 1, i});
                out.fields.push_back({q, "heat flux", 1, i});
                Equation eq{th, {}};
                add_term(eq, varrho, vs, th, 1, 0);
                add_term(eq, gamma, gs, q, 0, 1);
                add_strain_rate(eq, c, i);
                out.equations.push_back(std::move(eq));
                Equation fq{q, {}};
                add_term(fq, law.tau, "tau", q, 1, 0);
                add_term(fq, 1.0, "1", q, 0, 0);
                const bool is_gamma = !law.normalization &&
                                      law.kind == ThermalLawKind::Cattaneo;
                add_term(fq, w, is_gamma ? gs : (w == 1.0 ? "varpi" : idx("varpi", i)),
                         th, 0, 1);
                out.equations.push_back(std::move(fq));
                break;
            }
            case ThermalLawKind::GurtinPipkin: {
                out.fields.push_back({th, "temperature", 1, i});
                Equation eq{th, {}};
                add_term(eq, varrho, vs, th, 1, 0);
                add_term(eq, -gamma * w, w == 1.0 ? "-" + gs : "-" + gs + "*" + idx("varpi", i),
                         th, 0, 2, i);
                add_strain_rate(eq, c, i);
                out.equations.push_back(std::move(eq));
                break;
            }
            case ThermalLawKind::ColemanGurtin: {
                out.fields.push_back({th, "temperature", 1, i});
                Equation eq{th, {}};
                add_term(eq, varrho, vs, th, 1, 0);
                add_term(eq, -gamma * w * (1.0 - law.varpi), "-" + gs + "*(1-varpi)",
                         th, 0, 2);
                add_term(eq, -gamma * w * law.varpi, "-" + gs + "*varpi", th, 0, 2, i);
                add_strain_rate(eq, c, i);
                out.equations.push_back(std::move(eq));
                break;
            }
            case ThermalLawKind::GreenNaghdiIII: {
                out.fields.push_back({p, "thermal displacement", 2, i});
                Equation eq{p, {}};
                add_term(eq, varrho, vs, p, 2, 0);
                add_term(eq, -law.beta * gamma, "-beta*" + gs, p, 0, 2);
                add_term(eq, -law.varpi * gamma, "-varpi*" + gs, p, 1, 2);
                add_strain_rate(eq, c, i);
                out.equations.push_back(std::move(eq));
                break;
            }
            case ThermalLawKind::TzouDPL: {
                out.fields.push_back({th, "temperature", 1, i});
                out.fields.push_back({q, "heat flux", 2, i});
                Equation eq{th, {}};
                add_term(eq, varrho, vs, th, 1, 0);
                add_term(eq, gamma, gs, q, 0, 1);
                add_strain_rate(eq, c, i);
                out.equations.push_back(std::move(eq));
                Equation fq{q, {}};
                add_term(fq, 1.0, "1", q, 0, 0);
                add_term(fq, law.tau_q, "tau_q", q, 1, 0);
                add_term(fq, 0.5 * law.tau_q * law.tau_q, "tau_q^2/2", q, 2, 0);
                const std::string ws = w == 1.0 ? "" : idx("varpi", i) + "*";
                add_term(fq, w, ws.empty() ? "1" : idx("varpi", i), th, 0, 1);
                add_term(fq, w * law.tau_theta, ws + "tau_theta", th, 1, 1);
                out.equations.push_back(std::move(fq));
                break;
            }
            case ThermalLawKind::TypeIIIMemory: {
                out.fields.push_back({p, "thermal displacement", 2, i});
                const double mu_eff = law.beta + law.varpi * law.kernel.total_mass();
                Equation eq{p, {}};
                add_term(eq, varrho, vs, p, 2, 0);
                add_term(eq, -mu_eff * gamma, "-mu*" + gs, p, 0, 2);
                add_term(eq, law.varpi * gamma, "varpi*" + gs, p, 0, 2, i);
                add_strain_rate(eq, c, i);
                out.equations.push_back(std::move(eq));
                break;
            }
        }
    }
    return out;
}

ModelDescription expand_memory(const ModelDescription& desc) {
    if (desc.spec.coupling != CouplingPattern::Elastic && desc.spec.law.uses_kernel())
        desc.spec.law.kernel.validate();

    ModelDescription out = desc;
    out.equations.clear();
    out.memory_expanded = true;

    struct AuxDef { int channel; int mode; std::string tracked; };
    std::vector<AuxDef> aux;

    const auto& modes = desc.spec.law.kernel.modes;
    for (const auto& eq : desc.equations) {
        Equation expanded{eq.label, {}};
        for (const auto& term : eq.terms) {
            if (term.conv_channel == 0) {
                expanded.terms.push_back(term);
                continue;
            }
            const int i = term.conv_channel;
            for (size_t j = 0; j < modes.size(); ++j) {
                const double cj = modes[j].a / modes[j].b;
                const std::string z =
                    "z" + std::to_string(i) + "_" + std::to_string(j + 1);
                expanded.terms.push_back(
                    Term{term.value * cj,
                         term.symbol + "*c" + std::to_string(j + 1), z, term.dt,
                         term.dx, 0});
                bool seen = false;
                for (const auto& d : aux)
                    if (d.channel == i && d.mode == static_cast<int>(j)) seen = true;
                if (!seen) aux.push_back({i, static_cast<int>(j), term.field});
            }
        }
        out.equations.push_back(std::move(expanded));
    }

    for (const auto& d : aux) {
        const std::string z =
            "z" + std::to_string(d.channel) + "_" + std::to_string(d.mode + 1);
        const double bj = modes[d.mode].b;
        const std::string bs =
            "b" + std::to_string(d.channel) + "_" + std::to_string(d.mode + 1);
        out.fields.push_back({z, "memory auxiliary", 1, d.channel});
        Equation eq{z, {}};
        add_term(eq, 1.0, "1", z, 1, 0);
        add_term(eq, -bj, "-" + bs, d.tracked, 0, 0);
        add_term(eq, bj, bs, z, 0, 0);
        out.equations.push_back(std::move(eq));
    }
    return out;
}

std::string render_text(const ModelDescription& desc) {
    std::ostringstream os;
    for (const auto& eq : desc.equations) {
        bool first = true;
        for (const auto& t : eq.terms) {
            std::string sym = t.symbol;
            bool negative = false;
            if (!sym.empty() && sym[0] == '-') {
                negative = true;
                sym = sym.substr(1);
            }
            os << (first ? (negative ? "-" : "") : (negative ? " - " : " + "));
            first = false;
            std::string deriv;
            if (t.dt > 0 || t.dx > 0)
                deriv = "_" + std::string(t.dt, 't') + std::string(t.dx, 'x');
            std::string var = t.field + deriv;
            if (t.conv_channel > 0)
                var = "conv{g" + std::to_string(t.conv_channel) + "}[" + var + "]";
            if (sym == "1")
                os << var;
            else
                os << sym << "*" << var;
        }
        os << " = 0\n";
    }
    return os.str();
}

} // namespace bresse
