#pragma once

#include <array>
#include <string>
#include <vector>

#include "bresse/coupling.hpp"
#include "bresse/params.hpp"
#include "bresse/thermal_law.hpp"

namespace bresse {

enum class BoundaryCondition {
    FullDirichlet, // all fields zero at both ends
    MixedDN,       // Dirichlet on phi and thermal fields, Neumann on psi and w
};

const char* bc_name(BoundaryCondition bc);

// Declarative model choice: coefficients + coupling pattern + heat-flux law.
struct ModelSpec {
    Coefficients coeffs;
    CouplingPattern coupling = CouplingPattern::Elastic;
    ThermalLaw law;
    BoundaryCondition bc = BoundaryCondition::FullDirichlet;
    double L = 1.0; // beam length

    void validate(std::vector<std::string>* warnings = nullptr) const;
    std::string name() const; // e.g. "(Full, Fourier)" or "(Elastic)"
};

// One additive term of a continuous equation:
//   value * d^dt/dt^dt d^dx/dx^dx field,
// or, when conv_channel > 0, the convolution
//   value * Integral g_i(s) * (d^dt_t d^dx_x field)(t - s) ds
// against that channel's Prony kernel.
struct Term {
    double value = 0;
    std::string symbol; // signed coefficient product, e.g. "-ell*k0"
    std::string field;  // unknown name: phi, psi, w, theta1, q1, p1, z1_2, ...
    int dt = 0;
    int dx = 0;
    int conv_channel = 0;

    bool operator==(const Term& other) const;
};

// Sum of terms equal to zero.
struct Equation {
    std::string label; // name of the leading unknown
    std::vector<Term> terms;
};

struct FieldInfo {
    std::string name;
    std::string role; // displacement, rotation, longitudinal, temperature,
                      // heat flux, thermal displacement, memory auxiliary
    int time_order = 1;
    int channel = 0; // 0 for mechanical fields
};

// Resolved continuous system for a ModelSpec.
struct ModelDescription {
    ModelSpec spec;
    std::vector<FieldInfo> fields;
    std::vector<Equation> equations;
    // classification of each active channel ("" when inactive)
    std::array<std::string, 3> channel_classification{};
    bool memory_expanded = false;

    const Equation* find_equation(const std::string& label) const;
};

// Emits the exact continuous system for (coupling, law).  Flux-type laws
// keep q^i as unknowns; Green-Naghdi III and TypeIIIMemory use the
// thermal-displacement (p^i) form; Gurtin-Pipkin / Coleman-Gurtin /
// TypeIIIMemory equations carry convolution markers until expand_memory.
// Coupling terms whose coefficient m_i is exactly zero are omitted, so a
// fully decoupled model lists the elastic mechanical equations verbatim.
ModelDescription assemble_model(const ModelSpec& spec,
                                std::vector<std::string>* warnings = nullptr);

// Replaces every convolution marker with its Prony auxiliary-variable
// expansion: Integral g(s) v(t-s) ds -> sum_j (a_j/b_j) z_j with
// dz_j/dt = b_j (v - z_j), z_j(t) = b_j Integral exp(-b_j s) v(t-s) ds.
// Auxiliary fields are appended with zero-history initial data.
ModelDescription expand_memory(const ModelDescription& desc);

// Constitutive force triples.
struct StrainState {
    double phi_x = 0, psi = 0, w = 0, w_x = 0, psi_x = 0, phi = 0;
};
struct ChannelTemps {
    double theta1 = 0, theta2 = 0, theta3 = 0;
};
struct ForceTriple {
    double Q = 0; // shear
    double M = 0; // bending
    double N = 0; // axial
};
struct Forces {
    ForceTriple thermoelastic;
    ForceTriple elastic;
};

Forces compute_forces(const Coefficients& c, const StrainState& s,
                      const ChannelTemps& t);

// Plain-text rendering of the equation list (one equation per line).
std::string render_text(const ModelDescription& desc);

} // namespace bresse
