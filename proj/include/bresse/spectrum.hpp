#pragma once

#include <Eigen/Dense>
#include <complex>
#include <vector>

#include "bresse/params.hpp"
#include "bresse/system.hpp"

namespace bresse {

struct SpectrumReport {
    std::vector<std::complex<double>> eigenvalues; // sorted by Re desc, Im desc
    double abscissa = 0;          // max real part
    bool conjugate_paired = false; // spectrum closed under conjugation (1e-9)
    StabilityNumbers stability;
};

// Dense nonsymmetric eigensolve of A (real Schur based, backward stable).
SpectrumReport spectrum(const Eigen::MatrixXd& A, const Coefficients& c);

// Convenience wrapper: assembles the dense matrix first.
SpectrumReport spectrum(const SemiDiscreteSystem& sys);

} // namespace bresse
