#include "bresse/thermal_law.hpp"

#include <cmath>

#include "bresse/errors.hpp"

namespace bresse {

double PronyKernel::value(double s) const {
    double g = 0;
    for (const auto& m : modes) g += m.a * std::exp(-m.b * s);
    return g;
}

double PronyKernel::total_mass() const {
    double mass = 0;
    for (const auto& m : modes) mass += m.a / m.b;
    return mass;
}

void PronyKernel::validate() const {
    if (modes.empty())
        throw ValidationError("kernel must have at least one Prony mode");
    for (const auto& m : modes) {
        if (!(m.a > 0) || !std::isfinite(m.a))
            throw ValidationError("kernel mode weight a must be positive");
        if (!(m.b > 0) || !std::isfinite(m.b))
            throw ValidationError("kernel mode rate b must be positive");
    }
}

void ThermalLaw::validate() const {
    switch (kind) {
        case ThermalLawKind::Fourier:
            break;
        case ThermalLawKind::Cattaneo:
            if (!(tau > 0)) throw ValidationError("tau must be positive for Cattaneo");
            break;
        case ThermalLawKind::LordShulman:
            if (!(tau > 0)) throw ValidationError("tau must be positive for LordShulman");
            break;
        case ThermalLawKind::GurtinPipkin:
            kernel.validate();
            break;
        case ThermalLawKind::ColemanGurtin:
            if (!(varpi > 0) || !(varpi < 1))
                throw ValidationError("varpi must lie in (0,1) for ColemanGurtin");
            kernel.validate();
            break;
        case ThermalLawKind::GreenNaghdiIII:
            if (!(beta >= 0)) throw ValidationError("beta must be nonnegative for GreenNaghdiIII");
            if (!(varpi >= 0)) throw ValidationError("varpi must be nonnegative for GreenNaghdiIII");
            if (beta == 0 && varpi == 0)
                throw ValidationError("beta and varpi must not both vanish for GreenNaghdiIII");
            break;
        case ThermalLawKind::TzouDPL:
            if (!(tau_q > 0)) throw ValidationError("tau_q must be positive for TzouDPL");
            if (!(tau_theta >= 0)) throw ValidationError("tau_theta must be nonnegative for TzouDPL");
            break;
        case ThermalLawKind::TypeIIIMemory:
            if (!(beta > 0)) throw ValidationError("beta must be positive for TypeIIIMemory");
            if (!(varpi > 0)) throw ValidationError("varpi must be positive for TypeIIIMemory");
            kernel.validate();
            break;
    }
    if (normalization && !(*normalization > 0))
        throw ValidationError("normalization override must be positive");
}

double ThermalLaw::effective_normalization(double gamma_i) const {
    if (normalization) return *normalization;
    return kind == ThermalLawKind::Cattaneo ? gamma_i : 1.0;
}

bool ThermalLaw::uses_kernel() const {
    return kind == ThermalLawKind::GurtinPipkin ||
           kind == ThermalLawKind::ColemanGurtin ||
           kind == ThermalLawKind::TypeIIIMemory;
}

const char* law_name(ThermalLawKind kind) {
    switch (kind) {
        case ThermalLawKind::Fourier: return "Fourier";
        case ThermalLawKind::Cattaneo: return "Cattaneo";
        case ThermalLawKind::GurtinPipkin: return "GurtinPipkin";
        case ThermalLawKind::ColemanGurtin: return "ColemanGurtin";
        case ThermalLawKind::GreenNaghdiIII: return "GreenNaghdiIII";
        case ThermalLawKind::TzouDPL: return "TzouDPL";
        case ThermalLawKind::LordShulman: return "LordShulman";
        case ThermalLawKind::TypeIIIMemory: return "TypeIIIMemory";
    }
    return "?";
}

const char* ThermalLaw::name() const { return law_name(kind); }

const char* ThermalLaw::channel_classification() const {
    switch (kind) {
        case ThermalLawKind::Fourier: return "parabolic";
        case ThermalLawKind::ColemanGurtin: return "mixed";
        default: return "hyperbolic";
    }
}

std::optional<ThermalLawKind> law_from_name(std::string_view name) {
    for (auto kind : kAllLawKinds)
        if (name == law_name(kind)) return kind;
    return std::nullopt;
}

ThermalLaw ThermalLaw::fourier() { return ThermalLaw{}; }

ThermalLaw ThermalLaw::cattaneo(double tau) {
    ThermalLaw l;
    l.kind = ThermalLawKind::Cattaneo;
    l.tau = tau;
    return l;
}

ThermalLaw ThermalLaw::gurtin_pipkin(PronyKernel kernel) {
    ThermalLaw l;
    l.kind = ThermalLawKind::GurtinPipkin;
    l.kernel = std::move(kernel);
    return l;
}

ThermalLaw ThermalLaw::coleman_gurtin(double blend, PronyKernel kernel) {
    ThermalLaw l;
    l.kind = ThermalLawKind::ColemanGurtin;
    l.varpi = blend;
    l.kernel = std::move(kernel);
    return l;
}

ThermalLaw ThermalLaw::green_naghdi(double beta, double varpi) {
    ThermalLaw l;
    l.kind = ThermalLawKind::GreenNaghdiIII;
    l.beta = beta;
    l.varpi = varpi;
    return l;
}

ThermalLaw ThermalLaw::tzou(double tau_q, double tau_theta) {
    ThermalLaw l;
    l.kind = ThermalLawKind::TzouDPL;
    l.tau_q = tau_q;
    l.tau_theta = tau_theta;
    return l;
}

ThermalLaw ThermalLaw::lord_shulman(double tau) {
    ThermalLaw l;
    l.kind = ThermalLawKind::LordShulman;
    l.tau = tau;
    return l;
}

ThermalLaw ThermalLaw::type3_memory(double beta, double varpi, PronyKernel kernel) {
    ThermalLaw l;
    l.kind = ThermalLawKind::TypeIIIMemory;
    l.beta = beta;
    l.varpi = varpi;
    l.kernel = std::move(kernel);
    return l;
}

} // namespace bresse
