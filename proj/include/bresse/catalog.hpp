#pragma once

#include <string>
#include <vector>

#include "bresse/model.hpp"

namespace bresse {

struct CatalogEntry {
    std::string name;                 // "(Full, Fourier)" or "(Elastic)"
    CouplingPattern coupling;
    bool elastic = false;
    ThermalLawKind law = ThermalLawKind::Fourier;
    std::vector<std::string> fields;  // unknown-field names
    std::string classification;       // per-channel classification summary
};

// The 8 law families x 7 coupling patterns + the elastic baseline
// (57 entries), instantiated at the pinned default parameters.
std::vector<CatalogEntry> full_catalog();

std::string catalog_text();

} // namespace bresse
