#include "bresse/catalog.hpp"

#include <sstream>

#include "bresse/defaults.hpp"

namespace bresse {

namespace {

CatalogEntry make_entry(const ModelSpec& spec) {
    const ModelDescription desc = assemble_model(spec);
    CatalogEntry e;
    e.coupling = spec.coupling;
    e.elastic = spec.coupling == CouplingPattern::Elastic;
    e.law = spec.law.kind;
    e.name = e.elastic ? "(Elastic)"
                       : "(" + std::string(coupling_name(spec.coupling)) +
                             ", " + spec.law.name() + ")";
    for (const auto& f : desc.fields) e.fields.push_back(f.name);
    std::ostringstream cls;
    bool first = true;
    for (int i = 0; i < 3; ++i) {
        if (desc.channel_classification[i].empty()) continue;
        if (!first) cls << ", ";
        cls << "channel " << (i + 1) << ": " << desc.channel_classification[i];
        first = false;
    }
    e.classification = first ? "conservative" : cls.str();
    return e;
}

} // namespace

std::vector<CatalogEntry> full_catalog() {
    std::vector<CatalogEntry> entries;
    entries.push_back(make_entry(default_elastic_spec()));
    for (CouplingPattern coupling : kThermalCouplings)
        for (ThermalLawKind kind : kAllLawKinds)
            entries.push_back(make_entry(default_spec(coupling, kind)));
    return entries;
}

std::string catalog_text() {
    const auto entries = full_catalog();
    std::ostringstream out;
    out << entries.size() << " catalog entries\n";
    int idx = 1;
    for (const auto& e : entries) {
        out << idx++ << ". " << e.name << "\n   fields:";
        for (const auto& f : e.fields) out << " " << f;
        out << "\n   classification: " << e.classification << "\n";
    }
    return out.str();
}

} // namespace bresse
