#pragma once

#include <array>
#include <string>
#include <vector>

namespace bresse {

// Raw physical constants of the curved thermoelastic beam.
struct PhysicalParams {
    double rho = 0;      // mass density per reference volume
    double I1 = 0;       // cross-section area moment
    double I2 = 0;       // inertial moment (axial)
    double I3 = 0;       // inertial moment (bending)
    double E = 0;        // Young modulus
    double kprimeG = 0;  // shear correction coefficient times shear modulus
    double alpha = 0;    // thermal expansion coefficient
    double delta11 = 0;  // proportionality constant
    double delta13 = 0;  // proportionality constant
    double c_nu = 0;     // heat capacity
    double Theta0 = 0;   // reference temperature
    double R = 0;        // radius of curvature (ell = 1/R)
    double L = 0;        // beam length

    void validate() const; // throws ValidationError naming the field
};

// Reduced coefficient set shared by every beam system.
// Channels are indexed 0..2 for the shear (1), axial (2), bending (3)
// thermal couplings.
struct Coefficients {
    double rho1 = 0, rho2 = 0;        // effective densities
    double k = 0, k0 = 0, b = 0;      // shear, axial, bending stiffness
    double ell = 0;                   // curvature 1/R
    std::array<double, 3> m{};        // coupling coefficients m1..m3 (>= 0)
    std::array<double, 3> varrho{};   // thermal capacities per channel
    std::array<double, 3> gamma{};    // thermal conductivities per channel

    void validate() const;
};

// Reduction table from physical constants to the coefficient set.
// The relation I1 = I2*ell is checked only advisorily (a warning is
// appended when it fails) because the table rows do not depend on it.
Coefficients derive_coefficients(const PhysicalParams& p,
                                 std::vector<std::string>* warnings = nullptr);

struct StabilityNumbers {
    double chi1 = 0; // k/rho1 - b/rho2
    double chi2 = 0; // k - k0
};

StabilityNumbers stability_number(const Coefficients& c);

} // namespace bresse
