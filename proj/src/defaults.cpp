#include "bresse/defaults.hpp"

#include "bresse/errors.hpp"

namespace bresse {

Coefficients default_coefficients() {
    Coefficients c;
    c.rho1 = 1.0;
    c.rho2 = 1.3;
    c.k = 1.7;
    c.k0 = 1.3;
    c.b = 1.1;
    c.ell = 0.8;
    // The bending channel couples only through psi_x, which makes it the
    // least observable at high frequencies; its coupling is strengthened
    // and its conductivity lowered so the slowest-damped grid modes stay
    // clearly inside the left half-plane at desk scale.
    c.m = {1.2, 1.2, 2.0};
    c.gamma = {0.4, 0.3, 0.1};
    c.varrho = {1.1, 0.9, 1.0};
    c.validate();
    return c;
}

ThermalLaw default_law(ThermalLawKind kind) {
    const PronyKernel kernel{{{4.0, 4.0}, {6.0, 12.0}}};
    ThermalLaw law;
    switch (kind) {
        case ThermalLawKind::Fourier:
            law = ThermalLaw::fourier();
            break;
        case ThermalLawKind::Cattaneo:
            law = ThermalLaw::cattaneo(0.05);
            break;
        case ThermalLawKind::LordShulman:
            law = ThermalLaw::lord_shulman(0.04);
            break;
        case ThermalLawKind::GurtinPipkin:
            law = ThermalLaw::gurtin_pipkin(kernel);
            break;
        case ThermalLawKind::ColemanGurtin:
            law = ThermalLaw::coleman_gurtin(0.5, kernel);
            break;
        case ThermalLawKind::GreenNaghdiIII:
            law = ThermalLaw::green_naghdi(0.8, 0.6);
            break;
        case ThermalLawKind::TzouDPL:
            law = ThermalLaw::tzou(0.05, 0.05);
            break;
        case ThermalLawKind::TypeIIIMemory:
            law = ThermalLaw::type3_memory(0.8, 0.6, kernel);
            break;
    }
    law.validate();
    return law;
}

ModelSpec default_spec(CouplingPattern coupling, ThermalLawKind kind,
                       BoundaryCondition bc) {
    if (coupling == CouplingPattern::Elastic && kind != ThermalLawKind::Fourier)
        throw ValidationError(
            "the elastic baseline carries no thermal law; use "
            "default_elastic_spec");
    ModelSpec spec;
    spec.coeffs = default_coefficients();
    spec.coupling = coupling;
    spec.law = default_law(kind);
    spec.bc = bc;
    spec.L = 1.0;
    return spec;
}

ModelSpec default_elastic_spec(BoundaryCondition bc) {
    ModelSpec spec;
    spec.coeffs = default_coefficients();
    spec.coupling = CouplingPattern::Elastic;
    spec.law = ThermalLaw::fourier();
    spec.bc = bc;
    spec.L = 1.0;
    return spec;
}

} // namespace bresse
