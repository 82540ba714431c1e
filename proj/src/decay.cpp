#include "bresse/decay.hpp"

#include <cmath>

#include "bresse/errors.hpp"

namespace bresse {

namespace {

struct LineFit {
    double slope = 0;
    double r2 = 0;
    bool ok = false;
};

LineFit fit_line(const std::vector<double>& x, const std::vector<double>& y) {
    LineFit f;
    const size_t n = x.size();
    if (n < 3) return f;
    double sx = 0, sy = 0;
    for (size_t i = 0; i < n; ++i) {
        sx += x[i];
        sy += y[i];
    }
    const double mx = sx / n, my = sy / n;
    double sxx = 0, sxy = 0, syy = 0;
    for (size_t i = 0; i < n; ++i) {
        const double dx = x[i] - mx, dy = y[i] - my;
        sxx += dx * dx;
        sxy += dx * dy;
        syy += dy * dy;
    }
    if (sxx <= 0) return f;
    f.slope = sxy / sxx;
    f.r2 = syy > 0 ? (sxy * sxy) / (sxx * syy) : 1.0;
    f.ok = true;
    return f;
}

} // namespace

DecayFit fit_decay(const std::vector<double>& times,
                   const std::vector<double>& energies, double r2_threshold) {
    if (times.size() != energies.size())
        throw ValidationError("decay fit: times and energies differ in length");
    if (times.size() < 32)
        throw ValidationError("decay fit: need at least 32 samples");
    for (double e : energies)
        if (!(e > 0))
            throw ValidationError(
                "decay fit: energy series must be strictly positive");
    DecayFit fit;
    // Use the trailing half so transients do not pollute the asymptotics.
    const size_t start = times.size() / 2;
    std::vector<double> t, logt, loge;
    for (size_t i = start; i < times.size(); ++i) {
        if (!(times[i] > 0)) continue;
        t.push_back(times[i]);
        logt.push_back(std::log(times[i]));
        loge.push_back(std::log(energies[i]));
    }
    const LineFit expo = fit_line(t, loge);
    const LineFit poly = fit_line(logt, loge);
    fit.r2_exponential = expo.ok ? expo.r2 : 0;
    fit.r2_polynomial = poly.ok ? poly.r2 : 0;
    if (expo.ok && expo.r2 >= r2_threshold && expo.r2 >= fit.r2_polynomial) {
        fit.type = "exponential";
        fit.rate = -expo.slope;
    } else if (poly.ok && poly.r2 >= r2_threshold) {
        fit.type = "polynomial";
        fit.rate = -poly.slope;
    }
    return fit;
}

} // namespace bresse
