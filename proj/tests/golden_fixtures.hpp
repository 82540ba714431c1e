#pragma once

// Hand-transcribed golden systems: every displayed member of the eight
// model families, written out as explicit term lists.  The values and
// symbols are entered directly from the continuous equations (flux laws
// in flux form, thermal-displacement laws in p-form, memory laws with
// convolution markers), NOT generated by the code under test, so a term
// mismatch in assemble_model shows up as a fixture failure.

#include <string>
#include <vector>

#include "bresse/defaults.hpp"
#include "bresse/model.hpp"

namespace fixtures {

struct GoldenSystem {
    std::string name;
    bresse::ModelSpec spec;
    std::vector<bresse::Equation> equations;
};

// Distinct values for every coefficient so that swapped or misplaced
// factors cannot cancel.
inline bresse::Coefficients golden_coefficients() {
    bresse::Coefficients c;
    c.rho1 = 1.1;
    c.rho2 = 1.2;
    c.k = 1.3;
    c.k0 = 1.4;
    c.b = 1.5;
    c.ell = 0.6;
    c.m = {0.7, 0.8, 0.9};
    c.varrho = {1.9, 2.0, 2.1};
    c.gamma = {1.6, 1.7, 1.8};
    return c;
}

inline bresse::PronyKernel golden_kernel() {
    return bresse::PronyKernel{{{1.0, 2.0}, {0.5, 3.0}}};
}

namespace detail {

using bresse::Coefficients;
using bresse::CouplingPattern;
using bresse::Equation;
using bresse::Term;

inline std::string num(const std::string& base, int i) {
    return base + std::to_string(i);
}

// How a channel temperature shows up in the mechanical equations:
// theta{i} itself for first-order laws, p{i}_t for p-form laws.
struct ThetaName {
    std::string field;
    int dt = 0;
};

inline ThetaName theta_of(int i, bool p_form) {
    if (p_form) return {num("p", i), 1};
    return {num("theta", i), 0};
}

// rho1 phi_tt - k (phi_x + psi + ell w)_x - ell k0 (w_x - ell phi)
//   [+ m1 theta1_x] [+ ell m2 theta2] = 0
inline Equation mech_phi(const Coefficients& c, bool ch1, bool ch2, bool p_form) {
    Equation eq{"phi", {}};
    eq.terms.push_back({c.rho1, "rho1", "phi", 2, 0, 0});
    eq.terms.push_back({-c.k, "-k", "phi", 0, 2, 0});
    eq.terms.push_back({-c.k, "-k", "psi", 0, 1, 0});
    eq.terms.push_back({-c.k * c.ell, "-k*ell", "w", 0, 1, 0});
    eq.terms.push_back({-c.ell * c.k0, "-ell*k0", "w", 0, 1, 0});
    eq.terms.push_back({c.ell * c.ell * c.k0, "ell^2*k0", "phi", 0, 0, 0});
    if (ch1) {
        const auto t = theta_of(1, p_form);
        eq.terms.push_back({c.m[0], "m1", t.field, t.dt, 1, 0});
    }
    if (ch2) {
        const auto t = theta_of(2, p_form);
        eq.terms.push_back({c.ell * c.m[1], "ell*m2", t.field, t.dt, 0, 0});
    }
    return eq;
}

// rho2 psi_tt - b psi_xx + k (phi_x + psi + ell w)
//   [+ m3 theta3_x] [- m1 theta1] = 0
inline Equation mech_psi(const Coefficients& c, bool ch1, bool ch3, bool p_form) {
    Equation eq{"psi", {}};
    eq.terms.push_back({c.rho2, "rho2", "psi", 2, 0, 0});
    eq.terms.push_back({-c.b, "-b", "psi", 0, 2, 0});
    eq.terms.push_back({c.k, "k", "phi", 0, 1, 0});
    eq.terms.push_back({c.k, "k", "psi", 0, 0, 0});
    eq.terms.push_back({c.k * c.ell, "k*ell", "w", 0, 0, 0});
    if (ch3) {
        const auto t = theta_of(3, p_form);
        eq.terms.push_back({c.m[2], "m3", t.field, t.dt, 1, 0});
    }
    if (ch1) {
        const auto t = theta_of(1, p_form);
        eq.terms.push_back({-c.m[0], "-m1", t.field, t.dt, 0, 0});
    }
    return eq;
}

// rho1 w_tt - k0 (w_x - ell phi)_x + ell k (phi_x + psi + ell w)
//   [+ m2 theta2_x] [- ell m1 theta1] = 0
inline Equation mech_w(const Coefficients& c, bool ch1, bool ch2, bool p_form) {
    Equation eq{"w", {}};
    eq.terms.push_back({c.rho1, "rho1", "w", 2, 0, 0});
    eq.terms.push_back({-c.k0, "-k0", "w", 0, 2, 0});
    eq.terms.push_back({c.ell * c.k0, "ell*k0", "phi", 0, 1, 0});
    eq.terms.push_back({c.ell * c.k, "ell*k", "phi", 0, 1, 0});
    eq.terms.push_back({c.ell * c.k, "ell*k", "psi", 0, 0, 0});
    eq.terms.push_back({c.ell * c.ell * c.k, "ell^2*k", "w", 0, 0, 0});
    if (ch2) {
        const auto t = theta_of(2, p_form);
        eq.terms.push_back({c.m[1], "m2", t.field, t.dt, 1, 0});
    }
    if (ch1) {
        const auto t = theta_of(1, p_form);
        eq.terms.push_back({-c.ell * c.m[0], "-ell*m1", t.field, t.dt, 0, 0});
    }
    return eq;
}

// m_i dG_i/dt with G_1 = phi_x + psi + ell w, G_2 = w_x - ell phi,
// G_3 = psi_x.
inline void strain_rate(Equation& eq, const Coefficients& c, int ch) {
    const double m = c.m[ch - 1];
    const std::string ms = num("m", ch);
    switch (ch) {
        case 1:
            eq.terms.push_back({m, ms, "phi", 1, 1, 0});
            eq.terms.push_back({m, ms, "psi", 1, 0, 0});
            eq.terms.push_back({m * c.ell, ms + "*ell", "w", 1, 0, 0});
            break;
        case 2:
            eq.terms.push_back({m, ms, "w", 1, 1, 0});
            eq.terms.push_back({-m * c.ell, "-" + ms + "*ell", "phi", 1, 0, 0});
            break;
        case 3:
            eq.terms.push_back({m, ms, "psi", 1, 1, 0});
            break;
    }
}

// varrho_i theta_t - gamma_i theta_xx + m_i dG_i/dt = 0  (varpi_i = 1)
inline std::vector<Equation> fourier_heat(const Coefficients& c, int i) {
    const std::string th = num("theta", i);
    Equation eq{th, {}};
    eq.terms.push_back({c.varrho[i - 1], num("varrho", i), th, 1, 0, 0});
    eq.terms.push_back({-c.gamma[i - 1], "-" + num("gamma", i), th, 0, 2, 0});
    strain_rate(eq, c, i);
    return {eq};
}

// varrho_i theta_t + gamma_i q_x + m_i dG_i/dt = 0
// tau q_t + q + gamma_i theta_x = 0                       (varpi_i = gamma_i)
inline std::vector<Equation> cattaneo_heat(const Coefficients& c, int i,
                                           double tau) {
    const std::string th = num("theta", i);
    const std::string q = num("q", i);
    Equation heat{th, {}};
    heat.terms.push_back({c.varrho[i - 1], num("varrho", i), th, 1, 0, 0});
    heat.terms.push_back({c.gamma[i - 1], num("gamma", i), q, 0, 1, 0});
    strain_rate(heat, c, i);
    Equation flux{q, {}};
    flux.terms.push_back({tau, "tau", q, 1, 0, 0});
    flux.terms.push_back({1.0, "1", q, 0, 0, 0});
    flux.terms.push_back({c.gamma[i - 1], num("gamma", i), th, 0, 1, 0});
    return {heat, flux};
}

// Same balance as Cattaneo but with varpi_i = 1; applying (1 + tau d/dt)
// to this pair reproduces the displayed second-order system with its
// m_i (1 + tau d/dt) coupling operator.
inline std::vector<Equation> lord_shulman_heat(const Coefficients& c, int i,
                                               double tau) {
    const std::string th = num("theta", i);
    const std::string q = num("q", i);
    Equation heat{th, {}};
    heat.terms.push_back({c.varrho[i - 1], num("varrho", i), th, 1, 0, 0});
    heat.terms.push_back({c.gamma[i - 1], num("gamma", i), q, 0, 1, 0});
    strain_rate(heat, c, i);
    Equation flux{q, {}};
    flux.terms.push_back({tau, "tau", q, 1, 0, 0});
    flux.terms.push_back({1.0, "1", q, 0, 0, 0});
    flux.terms.push_back({1.0, "varpi", th, 0, 1, 0});
    return {heat, flux};
}

// varrho_i theta_t - gamma_i conv{g_i}[theta_xx] + m_i dG_i/dt = 0
inline std::vector<Equation> gurtin_pipkin_heat(const Coefficients& c, int i) {
    const std::string th = num("theta", i);
    Equation eq{th, {}};
    eq.terms.push_back({c.varrho[i - 1], num("varrho", i), th, 1, 0, 0});
    eq.terms.push_back({-c.gamma[i - 1], "-" + num("gamma", i), th, 0, 2, i});
    strain_rate(eq, c, i);
    return {eq};
}

// varrho_i theta_t - gamma_i (1-varpi) theta_xx
//   - gamma_i varpi conv{g_i}[theta_xx] + m_i dG_i/dt = 0
inline std::vector<Equation> coleman_gurtin_heat(const Coefficients& c, int i,
                                                 double varpi) {
    const std::string th = num("theta", i);
    Equation eq{th, {}};
    eq.terms.push_back({c.varrho[i - 1], num("varrho", i), th, 1, 0, 0});
    eq.terms.push_back({-c.gamma[i - 1] * (1.0 - varpi),
                        "-" + num("gamma", i) + "*(1-varpi)", th, 0, 2, 0});
    eq.terms.push_back({-c.gamma[i - 1] * varpi,
                        "-" + num("gamma", i) + "*varpi", th, 0, 2, i});
    strain_rate(eq, c, i);
    return {eq};
}

// varrho_i p_tt - beta gamma_i p_xx - varpi gamma_i p_txx
//   + m_i dG_i/dt = 0
inline std::vector<Equation> green_naghdi_heat(const Coefficients& c, int i,
                                               double beta, double varpi) {
    const std::string p = num("p", i);
    Equation eq{p, {}};
    eq.terms.push_back({c.varrho[i - 1], num("varrho", i), p, 2, 0, 0});
    eq.terms.push_back({-beta * c.gamma[i - 1], "-beta*" + num("gamma", i),
                        p, 0, 2, 0});
    eq.terms.push_back({-varpi * c.gamma[i - 1], "-varpi*" + num("gamma", i),
                        p, 1, 2, 0});
    strain_rate(eq, c, i);
    return {eq};
}

// varrho_i theta_t + gamma_i q_x + m_i dG_i/dt = 0
// q + tau_q q_t + (tau_q^2/2) q_tt + theta_x + tau_theta theta_tx = 0
// (varpi = 1)
inline std::vector<Equation> tzou_heat(const Coefficients& c, int i,
                                       double tau_q, double tau_theta) {
    const std::string th = num("theta", i);
    const std::string q = num("q", i);
    Equation heat{th, {}};
    heat.terms.push_back({c.varrho[i - 1], num("varrho", i), th, 1, 0, 0});
    heat.terms.push_back({c.gamma[i - 1], num("gamma", i), q, 0, 1, 0});
    strain_rate(heat, c, i);
    Equation flux{q, {}};
    flux.terms.push_back({1.0, "1", q, 0, 0, 0});
    flux.terms.push_back({tau_q, "tau_q", q, 1, 0, 0});
    flux.terms.push_back({0.5 * tau_q * tau_q, "tau_q^2/2", q, 2, 0, 0});
    flux.terms.push_back({1.0, "1", th, 0, 1, 0});
    flux.terms.push_back({tau_theta, "tau_theta", th, 1, 1, 0});
    return {heat, flux};
}

// varrho_i p_tt - mu gamma_i p_xx + varpi gamma_i conv{g_i}[p_xx]
//   + m_i dG_i/dt = 0 with mu = beta + varpi * integral of the kernel
// (integrated-by-parts form of the memory-relaxation law).
inline std::vector<Equation> type3_memory_heat(const Coefficients& c, int i,
                                               double beta, double varpi,
                                               double kernel_mass) {
    const std::string p = num("p", i);
    const double mu = beta + varpi * kernel_mass;
    Equation eq{p, {}};
    eq.terms.push_back({c.varrho[i - 1], num("varrho", i), p, 2, 0, 0});
    eq.terms.push_back({-mu * c.gamma[i - 1], "-mu*" + num("gamma", i),
                        p, 0, 2, 0});
    eq.terms.push_back({varpi * c.gamma[i - 1], "varpi*" + num("gamma", i),
                        p, 0, 2, i});
    strain_rate(eq, c, i);
    return {eq};
}

} // namespace detail

// All seven coupling patterns of the BF, BC, BGP, BGN, BT, and BMR
// families, plus the full-coupling BCG and BLS systems the paper writes
// out (the partial couplings of those two families are displayed only by
// reference): 6*7 + 2 = 44 golden systems.
inline std::vector<GoldenSystem> golden_systems() {
    using namespace detail;
    using bresse::CouplingPattern;
    using bresse::ModelSpec;
    using bresse::ThermalLaw;

    const auto c = golden_coefficients();
    const auto kernel = golden_kernel();
    const double kernel_mass = kernel.total_mass();

    struct Family {
        std::string tag;
        ThermalLaw law;
        bool p_form;
        bool full_only;
    };
    const std::vector<Family> families = {
        {"BF", ThermalLaw::fourier(), false, false},
        {"BC", ThermalLaw::cattaneo(0.3), false, false},
        {"BGP", ThermalLaw::gurtin_pipkin(kernel), false, false},
        {"BCG", ThermalLaw::coleman_gurtin(0.5, kernel), false, true},
        {"BGN", ThermalLaw::green_naghdi(0.8, 0.6), true, false},
        {"BT", ThermalLaw::tzou(0.4, 0.3), false, false},
        {"BLS", ThermalLaw::lord_shulman(0.25), false, true},
        {"BMR", ThermalLaw::type3_memory(0.8, 0.6, kernel), true, false},
    };

    const std::vector<std::pair<std::string, CouplingPattern>> couplings = {
        {"full", CouplingPattern::Full},
        {"bending-axial", CouplingPattern::DoubleBendingAxial},
        {"shear-axial", CouplingPattern::DoubleShearAxial},
        {"shear-bending", CouplingPattern::DoubleShearBending},
        {"shear", CouplingPattern::SingleShear},
        {"bending", CouplingPattern::SingleBending},
        {"axial", CouplingPattern::SingleAxial},
    };

    std::vector<GoldenSystem> out;
    for (const auto& fam : families) {
        for (const auto& [cname, coupling] : couplings) {
            if (fam.full_only && coupling != CouplingPattern::Full) continue;

            GoldenSystem g;
            g.name = fam.tag + " " + cname;
            g.spec.coeffs = c;
            g.spec.coupling = coupling;
            g.spec.law = fam.law;

            const auto act = bresse::active_channels(coupling);
            g.equations.push_back(mech_phi(c, act[0], act[1], fam.p_form));
            g.equations.push_back(mech_psi(c, act[0], act[2], fam.p_form));
            g.equations.push_back(mech_w(c, act[0], act[1], fam.p_form));
            for (int i = 1; i <= 3; ++i) {
                if (!act[i - 1]) continue;
                std::vector<Equation> heat;
                switch (fam.law.kind) {
                    case bresse::ThermalLawKind::Fourier:
                        heat = fourier_heat(c, i);
                        break;
                    case bresse::ThermalLawKind::Cattaneo:
                        heat = cattaneo_heat(c, i, fam.law.tau);
                        break;
                    case bresse::ThermalLawKind::GurtinPipkin:
                        heat = gurtin_pipkin_heat(c, i);
                        break;
                    case bresse::ThermalLawKind::ColemanGurtin:
                        heat = coleman_gurtin_heat(c, i, fam.law.varpi);
                        break;
                    case bresse::ThermalLawKind::GreenNaghdiIII:
                        heat = green_naghdi_heat(c, i, fam.law.beta,
                                                 fam.law.varpi);
                        break;
                    case bresse::ThermalLawKind::TzouDPL:
                        heat = tzou_heat(c, i, fam.law.tau_q,
                                         fam.law.tau_theta);
                        break;
                    case bresse::ThermalLawKind::LordShulman:
                        heat = lord_shulman_heat(c, i, fam.law.tau);
                        break;
                    case bresse::ThermalLawKind::TypeIIIMemory:
                        heat = type3_memory_heat(c, i, fam.law.beta,
                                                 fam.law.varpi, kernel_mass);
                        break;
                }
                for (auto& eq : heat) g.equations.push_back(std::move(eq));
            }
            out.push_back(std::move(g));
        }
    }
    return out;
}

} // namespace fixtures
