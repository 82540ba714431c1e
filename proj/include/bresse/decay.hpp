#pragma once

#include <string>
#include <vector>

namespace bresse {

// Decay-type classification of an energy series by least squares on the
// trailing half of the samples: log E vs t (exponential, E ~ C e^{-rate t})
// against log E vs log t (polynomial, E ~ C t^{-rate}).  The better-R^2
// model wins; "none" when the best R^2 is below the threshold.
struct DecayFit {
    std::string type = "none"; // "exponential" | "polynomial" | "none"
    double rate = 0;
    double r2_exponential = 0;
    double r2_polynomial = 0;
};

DecayFit fit_decay(const std::vector<double>& times,
                   const std::vector<double>& energies,
                   double r2_threshold = 0.9);

} // namespace bresse
