#pragma once

#include <array>
#include <optional>
#include <string_view>

namespace bresse {

// Which thermal channels are coupled to the mechanical system.
// Channel 1 couples to the shear strain, channel 2 to the axial strain,
// channel 3 to the bending strain.
enum class CouplingPattern {
    Full,               // theta1, theta2, theta3
    DoubleBendingAxial, // theta2, theta3
    DoubleShearAxial,   // theta1, theta2
    DoubleShearBending, // theta1, theta3
    SingleShear,        // theta1
    SingleBending,      // theta3
    SingleAxial,        // theta2
    Elastic,            // no thermal channel
};

// active[i] corresponds to channel i+1.
std::array<bool, 3> active_channels(CouplingPattern p);

const char* coupling_name(CouplingPattern p);
std::optional<CouplingPattern> coupling_from_name(std::string_view name);

inline constexpr CouplingPattern kAllCouplings[] = {
    CouplingPattern::Full,
    CouplingPattern::DoubleBendingAxial,
    CouplingPattern::DoubleShearAxial,
    CouplingPattern::DoubleShearBending,
    CouplingPattern::SingleShear,
    CouplingPattern::SingleBending,
    CouplingPattern::SingleAxial,
    CouplingPattern::Elastic,
};

// The seven genuinely thermoelastic patterns (everything but Elastic).
inline constexpr CouplingPattern kThermalCouplings[] = {
    CouplingPattern::Full,
    CouplingPattern::DoubleBendingAxial,
    CouplingPattern::DoubleShearAxial,
    CouplingPattern::DoubleShearBending,
    CouplingPattern::SingleShear,
    CouplingPattern::SingleBending,
    CouplingPattern::SingleAxial,
};

} // namespace bresse
