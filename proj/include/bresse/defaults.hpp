#pragma once

#include "bresse/model.hpp"

namespace bresse {

// Pinned desk-scale defaults used by the catalog listing and the verify
// suites.  Chosen generic (away from the equal-wave-speed resonance).
Coefficients default_coefficients();

// Pinned law parameters per family (short relaxation times, two-mode
// Prony kernel, beta = 0.8, varpi = 0.6, blend = 0.5, ...).
ThermalLaw default_law(ThermalLawKind kind);

// (coupling, law, default coefficients) spec at length L = 1.
ModelSpec default_spec(CouplingPattern coupling, ThermalLawKind kind,
                       BoundaryCondition bc = BoundaryCondition::FullDirichlet);
ModelSpec default_elastic_spec(BoundaryCondition bc = BoundaryCondition::FullDirichlet);

} // namespace bresse
