#include "bresse/params.hpp"

#include <cmath>

#include "bresse/errors.hpp"

namespace bresse {

namespace {

void require_positive(double v, const char* field) {
    if (!(v > 0.0) || !std::isfinite(v))
        throw ValidationError(std::string(field) + " must be a positive finite number");
}

void require_nonnegative(double v, const char* field) {
    if (!(v >= 0.0) || !std::isfinite(v))
        throw ValidationError(std::string(field) + " must be a nonnegative finite number");
}

} // namespace

void PhysicalParams::validate() const {
    require_positive(rho, "rho");
    require_positive(I1, "I1");
    require_positive(I2, "I2");
    require_positive(I3, "I3");
    require_positive(E, "E");
    require_positive(kprimeG, "kprimeG");
    require_positive(alpha, "alpha");
    require_positive(delta11, "delta11");
    require_positive(delta13, "delta13");
    require_positive(c_nu, "c_nu");
    require_positive(Theta0, "Theta0");
    require_positive(R, "R");
    require_positive(L, "L");
}

void Coefficients::validate() const {
    require_positive(rho1, "rho1");
    require_positive(rho2, "rho2");
    require_positive(k, "k");
    require_positive(k0, "k0");
    require_positive(b, "b");
    require_positive(ell, "ell");
    static const char* m_names[] = {"m1", "m2", "m3"};
    static const char* varrho_names[] = {"varrho1", "varrho2", "varrho3"};
    static const char* gamma_names[] = {"gamma1", "gamma2", "gamma3"};
    for (int i = 0; i < 3; ++i) {
        require_nonnegative(m[i], m_names[i]);
        require_positive(varrho[i], varrho_names[i]);
        require_positive(gamma[i], gamma_names[i]);
    }
}

Coefficients derive_coefficients(const PhysicalParams& p,
                                 std::vector<std::string>* warnings) {
    p.validate();
    Coefficients c;
    c.rho1 = p.rho * p.I1;
    c.rho2 = p.rho * p.I3;
    c.k = p.kprimeG * p.I1;
    c.k0 = p.E * p.I1;
    c.b = p.E * p.I3;
    c.ell = 1.0 / p.R;
    c.m[0] = 2.0 * p.alpha * p.kprimeG * p.I1 * p.delta13;
    c.m[1] = p.alpha * p.E * p.I2 * p.delta11;
    c.m[2] = p.alpha * p.E * p.I3 * p.delta11;
    c.gamma[0] = (2.0 / p.Theta0) * c.m[0];
    c.gamma[1] = (p.R / p.Theta0) * c.m[1];
    c.gamma[2] = (1.0 / p.Theta0) * c.m[2];
    for (int i = 0; i < 3; ++i) c.varrho[i] = p.c_nu * p.rho * c.gamma[i];
    if (warnings != nullptr) {
        const double rel = std::abs(p.I1 - p.I2 * c.ell) / p.I1;
        if (rel > 1e-12)
            warnings->push_back("I1 differs from I2/R (relative gap " +
                                std::to_string(rel) +
                                "); the reduction table is applied as written");
    }
    c.validate();
    return c;
}

StabilityNumbers stability_number(const Coefficients& c) {
    return {c.k / c.rho1 - c.b / c.rho2, c.k - c.k0};
}

} // namespace bresse
