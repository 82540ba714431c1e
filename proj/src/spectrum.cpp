#include "bresse/spectrum.hpp"

#include <algorithm>
#include <cmath>

#include "bresse/errors.hpp"

namespace bresse {

SpectrumReport spectrum(const Eigen::MatrixXd& A, const Coefficients& c) {
    if (A.rows() != A.cols() || A.rows() == 0)
        throw ValidationError("spectrum requires a nonempty square matrix");
    Eigen::EigenSolver<Eigen::MatrixXd> solver(A, /*computeEigenvectors=*/false);
    if (solver.info() != Eigen::Success)
        throw NumericError("eigenvalue iteration failed to converge");

    SpectrumReport rep;
    rep.eigenvalues.assign(solver.eigenvalues().data(),
                           solver.eigenvalues().data() + A.rows());
    std::sort(rep.eigenvalues.begin(), rep.eigenvalues.end(),
              [](const std::complex<double>& a, const std::complex<double>& b) {
                  if (a.real() != b.real()) return a.real() > b.real();
                  return a.imag() > b.imag();
              });
    rep.abscissa = rep.eigenvalues.empty() ? 0 : rep.eigenvalues.front().real();

    // Conjugate closure: every eigenvalue must have a partner matching its
    // conjugate to 1e-9 (absolute, the matrix is real so this is exact up
    // to round-off).
    rep.conjugate_paired = true;
    for (const auto& lambda : rep.eigenvalues) {
        const std::complex<double> target = std::conj(lambda);
        double best = std::numeric_limits<double>::infinity();
        for (const auto& mu : rep.eigenvalues)
            best = std::min(best, std::abs(mu - target));
        if (best > 1e-9) {
            rep.conjugate_paired = false;
            break;
        }
    }
    rep.stability = stability_number(c);
    return rep;
}

SpectrumReport spectrum(const SemiDiscreteSystem& sys) {
    return spectrum(assemble_matrix(sys), sys.spec.coeffs);
}

} // namespace bresse
