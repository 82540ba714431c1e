#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace bresse {

// One exponential mode of a Prony kernel: a * exp(-b s).
struct PronyMode {
    double a = 0;
    double b = 0;
};

// Kernel g(s) = sum_j a_j exp(-b_j s); positive and nonincreasing by
// construction.  total_mass() is the integral of g over [0, inf).
struct PronyKernel {
    std::vector<PronyMode> modes;

    double value(double s) const;
    double total_mass() const;
    void validate() const;
};

enum class ThermalLawKind {
    Fourier,
    Cattaneo,
    GurtinPipkin,
    ColemanGurtin,
    GreenNaghdiIII,
    TzouDPL,
    LordShulman,
    TypeIIIMemory,
};

// Heat-flux constitutive law with its parameters.  Only the members
// relevant to `kind` are meaningful; validate() checks exactly those.
struct ThermalLaw {
    ThermalLawKind kind = ThermalLawKind::Fourier;

    double tau = 0;       // Cattaneo / LordShulman relaxation time (> 0)
    double tau_q = 0;     // TzouDPL heat-flux phase lag (> 0)
    double tau_theta = 0; // TzouDPL temperature-gradient phase lag (>= 0)
    double beta = 0;      // GreenNaghdiIII / TypeIIIMemory conductivity
    double varpi = 0;     // GreenNaghdiIII / TypeIIIMemory damping weight;
                          // ColemanGurtin blend in (0, 1)
    PronyKernel kernel;   // GurtinPipkin / ColemanGurtin / TypeIIIMemory

    // Overrides the default conductivity normalization (the scalar
    // multiplying the spatial temperature gradient in flux-type laws).
    // Defaults: gamma_i for Cattaneo, 1 otherwise.
    std::optional<double> normalization;

    void validate() const;
    double effective_normalization(double gamma_i) const;
    bool uses_kernel() const;

    const char* name() const;
    // "parabolic" | "hyperbolic" | "mixed" for a channel under this law.
    const char* channel_classification() const;

    static ThermalLaw fourier();
    static ThermalLaw cattaneo(double tau);
    static ThermalLaw gurtin_pipkin(PronyKernel kernel);
    static ThermalLaw coleman_gurtin(double blend, PronyKernel kernel);
    static ThermalLaw green_naghdi(double beta, double varpi);
    static ThermalLaw tzou(double tau_q, double tau_theta);
    static ThermalLaw lord_shulman(double tau);
    static ThermalLaw type3_memory(double beta, double varpi, PronyKernel kernel);
};

const char* law_name(ThermalLawKind kind);
std::optional<ThermalLawKind> law_from_name(std::string_view name);

inline constexpr ThermalLawKind kAllLawKinds[] = {
    ThermalLawKind::Fourier,        ThermalLawKind::Cattaneo,
    ThermalLawKind::GurtinPipkin,   ThermalLawKind::ColemanGurtin,
    ThermalLawKind::GreenNaghdiIII, ThermalLawKind::TzouDPL,
    ThermalLawKind::LordShulman,    ThermalLawKind::TypeIIIMemory,
};

} // namespace bresse
