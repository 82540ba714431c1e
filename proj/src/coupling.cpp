#include "bresse/coupling.hpp"

namespace bresse {

std::array<bool, 3> active_channels(CouplingPattern p) {
    switch (p) {
        case CouplingPattern::Full: return {true, true, true};
        case CouplingPattern::DoubleBendingAxial: return {false, true, true};
        case CouplingPattern::DoubleShearAxial: return {true, true, false};
        case CouplingPattern::DoubleShearBending: return {true, false, true};
        case CouplingPattern::SingleShear: return {true, false, false};
        case CouplingPattern::SingleBending: return {false, false, true};
        case CouplingPattern::SingleAxial: return {false, true, false};
        case CouplingPattern::Elastic: return {false, false, false};
    }
    return {false, false, false};
}

const char* coupling_name(CouplingPattern p) {
    switch (p) {
        case CouplingPattern::Full: return "Full";
        case CouplingPattern::DoubleBendingAxial: return "DoubleBendingAxial";
        case CouplingPattern::DoubleShearAxial: return "DoubleShearAxial";
        case CouplingPattern::DoubleShearBending: return "DoubleShearBending";
        case CouplingPattern::SingleShear: return "SingleShear";
        case CouplingPattern::SingleBending: return "SingleBending";
        case CouplingPattern::SingleAxial: return "SingleAxial";
        case CouplingPattern::Elastic: return "Elastic";
    }
    return "?";
}

std::optional<CouplingPattern> coupling_from_name(std::string_view name) {
    for (auto p : kAllCouplings)
        if (name == coupling_name(p)) return p;
    return std::nullopt;
}

} // namespace bresse
