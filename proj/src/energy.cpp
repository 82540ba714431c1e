#include "bresse/energy.hpp"

#include <cmath>

#include "bresse/errors.hpp"

namespace bresse {

namespace {

// Node accessor with the ghost rule used by the discretization: Dirichlet
// ghosts are zero, Neumann ghosts mirror the nearest interior node.
double at(std::span<const double> v, int node, bool neumann) {
    const int n = static_cast<int>(v.size());
    if (node >= 0 && node < n) return v[node];
    if (!neumann) return 0.0;
    return node < 0 ? v[0] : v[n - 1];
}

double l2_sq(std::span<const double> v, double h) {
    double acc = 0;
    for (double x : v) acc += x * x;
    return h * acc;
}

double inner(std::span<const double> a, std::span<const double> b, double h) {
    double acc = 0;
    for (size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
    return h * acc;
}

// Staggered gradient norm: h * sum over half points of ((v_m - v_{m-1})/h)^2.
double stagger_grad_sq(std::span<const double> v, double h, bool neumann) {
    const int n = static_cast<int>(v.size());
    double acc = 0;
    for (int m = 0; m <= n; ++m) {
        const double d = (at(v, m, neumann) - at(v, m - 1, neumann)) / h;
        acc += d * d;
    }
    return h * acc;
}

double stagger_grad_sq_diff(std::span<const double> a, std::span<const double> b,
                            double h, bool neumann) {
    const int n = static_cast<int>(a.size());
    double acc = 0;
    for (int m = 0; m <= n; ++m) {
        const double d = ((at(a, m, neumann) - at(b, m, neumann)) -
                          (at(a, m - 1, neumann) - at(b, m - 1, neumann))) /
                         h;
        acc += d * d;
    }
    return h * acc;
}

} // namespace

EnergyModel::EnergyModel(const SemiDiscreteSystem& sys) : sys_(&sys) {
    const auto& law = sys.spec.law;
    if (law.kind != ThermalLawKind::TzouDPL) return;
    if (sys.spec.coupling == CouplingPattern::Elastic) return;
    const double tq = law.tau_q;
    const double s = law.tau_theta / tq;
    const double disc = 2 * s * s + 2 * s - 1;
    if (!(disc > 0))
        throw ValidationError(
            "dual-phase-lag energy requires tau_theta/tau_q > (sqrt(3)-1)/2; "
            "no positive quadratic energy exists below that ratio");
    const double sigma = 1.0 - 2.0 * s;
    const auto active = active_channels(sys.spec.coupling);
    for (int i = 0; i < 3; ++i) {
        if (!active[i]) continue;
        const double gamma = sys.spec.coeffs.gamma[i];
        const double w = law.effective_normalization(gamma);
        const double b = gamma * tq * tq * tq * s / (4 * w * disc);
        dpl_b_[i] = b;
        dpl_c_[i] = -2 * b * sigma / law.tau_theta;
        dpl_a_[i] = 2 * b / (tq * tq) - 2 * b * sigma / (law.tau_theta * tq);
        dpl_dq_[i] = -4 * b * sigma / (law.tau_theta * tq * tq);
        dpl_dr_[i] = 2 * b / law.tau_theta;
    }
}

EnergyBreakdown EnergyModel::energy(const Eigen::VectorXd& u) const {
    const auto& sys = *sys_;
    const auto& c = sys.spec.coeffs;
    const double h = sys.grid.h;
    const int n = sys.grid.N;
    const double ell = c.ell;
    const bool mixed = sys.bc == BoundaryCondition::MixedDN;

    EnergyBreakdown e;
    const auto phi = sys.field(u, "phi");
    const auto phi_t = sys.field(u, "phi_t");
    const auto psi = sys.field(u, "psi");
    const auto psi_t = sys.field(u, "psi_t");
    const auto w = sys.field(u, "w");
    const auto w_t = sys.field(u, "w_t");

    e.kinetic = 0.5 * (c.rho1 * l2_sq(phi_t, h) + c.rho2 * l2_sq(psi_t, h) +
                       c.rho1 * l2_sq(w_t, h));
    double sS = 0, sA = 0, sB = 0;
    for (int m = 0; m <= n; ++m) {
        const double phiL = at(phi, m - 1, false), phiR = at(phi, m, false);
        const double psiL = at(psi, m - 1, mixed), psiR = at(psi, m, mixed);
        const double wL = at(w, m - 1, mixed), wR = at(w, m, mixed);
        const double S =
            (phiR - phiL) / h + 0.5 * (psiR + psiL) + 0.5 * ell * (wR + wL);
        const double A = (wR - wL) / h - 0.5 * ell * (phiR + phiL);
        const double B = (psiR - psiL) / h;
        sS += S * S;
        sA += A * A;
        sB += B * B;
    }
    e.shear = 0.5 * c.k * h * sS;
    e.axial = 0.5 * c.k0 * h * sA;
    e.bending = 0.5 * c.b * h * sB;
    e.mech = e.kinetic + e.shear + e.axial + e.bending;
    e.total = e.mech;

    if (sys.spec.coupling == CouplingPattern::Elastic) return e;
    const auto& law = sys.spec.law;
    const auto active = active_channels(sys.spec.coupling);
    for (int i = 0; i < 3; ++i) {
        if (!active[i]) continue;
        const std::string si = std::to_string(i + 1);
        const double varrho = c.varrho[i];
        const double gamma = c.gamma[i];
        const double wn = law.effective_normalization(gamma);
        const auto theta = sys.field(u, "theta" + si);
        e.therm[i] = 0.5 * varrho * l2_sq(theta, h);
        switch (law.kind) {
            case ThermalLawKind::Fourier:
                break;
            case ThermalLawKind::Cattaneo:
            case ThermalLawKind::LordShulman: {
                const auto q = sys.field(u, "q" + si);
                e.flux[i] = 0.5 * gamma * law.tau / wn * l2_sq(q, h);
                break;
            }
            case ThermalLawKind::GurtinPipkin: {
                for (size_t j = 0; j < law.kernel.modes.size(); ++j) {
                    const auto& mode = law.kernel.modes[j];
                    const auto z = sys.field(
                        u, "z" + si + "_" + std::to_string(j + 1));
                    e.mem += 0.5 * gamma * wn * (mode.a / mode.b) / mode.b *
                             stagger_grad_sq(z, h, false);
                }
                break;
            }
            case ThermalLawKind::ColemanGurtin: {
                for (size_t j = 0; j < law.kernel.modes.size(); ++j) {
                    const auto& mode = law.kernel.modes[j];
                    const auto z = sys.field(
                        u, "z" + si + "_" + std::to_string(j + 1));
                    e.mem += 0.5 * gamma * wn * law.varpi * (mode.a / mode.b) /
                             mode.b * stagger_grad_sq(z, h, false);
                }
                break;
            }
            case ThermalLawKind::GreenNaghdiIII: {
                const auto p = sys.field(u, "p" + si);
                e.flux[i] =
                    0.5 * law.beta * gamma * stagger_grad_sq(p, h, false);
                break;
            }
            case ThermalLawKind::TypeIIIMemory: {
                const auto p = sys.field(u, "p" + si);
                e.flux[i] =
                    0.5 * law.beta * gamma * stagger_grad_sq(p, h, false);
                for (size_t j = 0; j < law.kernel.modes.size(); ++j) {
                    const auto& mode = law.kernel.modes[j];
                    const auto z = sys.field(
                        u, "z" + si + "_" + std::to_string(j + 1));
                    e.mem += 0.5 * law.varpi * gamma * (mode.a / mode.b) *
                             stagger_grad_sq_diff(p, z, h, false);
                }
                break;
            }
            case ThermalLawKind::TzouDPL: {
                const auto q = sys.field(u, "q" + si);
                const auto r = sys.field(u, "r" + si);
                e.flux[i] = dpl_a_[i] * l2_sq(q, h) + dpl_b_[i] * l2_sq(r, h) +
                            dpl_c_[i] * inner(q, r, h);
                break;
            }
        }
        e.total += e.therm[i] + e.flux[i];
    }
    e.total += e.mem;
    return e;
}

double EnergyModel::total_energy(const Eigen::VectorXd& u) const {
    return energy(u).total;
}

double EnergyModel::dissipation(const Eigen::VectorXd& u) const {
    const auto& sys = *sys_;
    if (sys.spec.coupling == CouplingPattern::Elastic) return 0.0;
    const auto& c = sys.spec.coeffs;
    const auto& law = sys.spec.law;
    const double h = sys.grid.h;
    const auto active = active_channels(sys.spec.coupling);
    double D = 0;
    for (int i = 0; i < 3; ++i) {
        if (!active[i]) continue;
        const std::string si = std::to_string(i + 1);
        const double gamma = c.gamma[i];
        const double wn = law.effective_normalization(gamma);
        switch (law.kind) {
            case ThermalLawKind::Fourier:
                D += gamma * wn *
                     stagger_grad_sq(sys.field(u, "theta" + si), h, false);
                break;
            case ThermalLawKind::Cattaneo:
            case ThermalLawKind::LordShulman:
                D += gamma / wn * l2_sq(sys.field(u, "q" + si), h);
                break;
            case ThermalLawKind::GurtinPipkin:
                for (size_t j = 0; j < law.kernel.modes.size(); ++j) {
                    const auto& mode = law.kernel.modes[j];
                    D += gamma * wn * (mode.a / mode.b) *
                         stagger_grad_sq(
                             sys.field(u, "z" + si + "_" + std::to_string(j + 1)),
                             h, false);
                }
                break;
            case ThermalLawKind::ColemanGurtin: {
                D += gamma * wn * (1.0 - law.varpi) *
                     stagger_grad_sq(sys.field(u, "theta" + si), h, false);
                for (size_t j = 0; j < law.kernel.modes.size(); ++j) {
                    const auto& mode = law.kernel.modes[j];
                    D += gamma * wn * law.varpi * (mode.a / mode.b) *
                         stagger_grad_sq(
                             sys.field(u, "z" + si + "_" + std::to_string(j + 1)),
                             h, false);
                }
                break;
            }
            case ThermalLawKind::GreenNaghdiIII:
                D += law.varpi * gamma *
                     stagger_grad_sq(sys.field(u, "theta" + si), h, false);
                break;
            case ThermalLawKind::TypeIIIMemory: {
                const auto p = sys.field(u, "p" + si);
                for (size_t j = 0; j < law.kernel.modes.size(); ++j) {
                    const auto& mode = law.kernel.modes[j];
                    D += law.varpi * gamma * (mode.a / mode.b) * mode.b *
                         stagger_grad_sq_diff(
                             p,
                             sys.field(u, "z" + si + "_" + std::to_string(j + 1)),
                             h, false);
                }
                break;
            }
            case ThermalLawKind::TzouDPL:
                D += dpl_dq_[i] * l2_sq(sys.field(u, "q" + si), h) +
                     dpl_dr_[i] * l2_sq(sys.field(u, "r" + si), h);
                break;
        }
    }
    return D;
}

Eigen::MatrixXd EnergyModel::gram_matrix() const {
    const int d = sys_->dim;
    Eigen::VectorXd diag(d);
    Eigen::VectorXd ei = Eigen::VectorXd::Zero(d);
    for (int i = 0; i < d; ++i) {
        ei(i) = 1;
        diag(i) = total_energy(ei);
        ei(i) = 0;
    }
    Eigen::MatrixXd M = Eigen::MatrixXd::Zero(d, d);
    Eigen::VectorXd eij = Eigen::VectorXd::Zero(d);
    for (int i = 0; i < d; ++i) {
        M(i, i) = 2 * diag(i);
        for (int j = i + 1; j < d; ++j) {
            eij(i) = 1;
            eij(j) = 1;
            const double cross = total_energy(eij) - diag(i) - diag(j);
            M(i, j) = M(j, i) = cross;
            eij(i) = 0;
            eij(j) = 0;
        }
    }
    return M;
}

Eigen::MatrixXd EnergyModel::dissipation_matrix() const {
    const int d = sys_->dim;
    Eigen::VectorXd diag(d);
    Eigen::VectorXd ei = Eigen::VectorXd::Zero(d);
    for (int i = 0; i < d; ++i) {
        ei(i) = 1;
        diag(i) = dissipation(ei);
        ei(i) = 0;
    }
    Eigen::MatrixXd N = Eigen::MatrixXd::Zero(d, d);
    Eigen::VectorXd eij = Eigen::VectorXd::Zero(d);
    for (int i = 0; i < d; ++i) {
        N(i, i) = diag(i);
        for (int j = i + 1; j < d; ++j) {
            eij(i) = 1;
            eij(j) = 1;
            const double cross =
                0.5 * (dissipation(eij) - diag(i) - diag(j));
            N(i, j) = N(j, i) = cross;
            eij(i) = 0;
            eij(j) = 0;
        }
    }
    return N;
}

EnergyReport energy_report(const SemiDiscreteSystem& sys,
                           const Trajectory& traj) {
    EnergyModel model(sys);
    EnergyReport rep;
    rep.times = traj.times;
    rep.energies.reserve(traj.states.size());
    rep.dissipations.reserve(traj.states.size());
    for (const auto& u : traj.states) {
        rep.energies.push_back(model.energy(u));
        rep.dissipations.push_back(model.dissipation(u));
    }
    for (size_t n = 0; n + 1 < traj.states.size(); ++n) {
        const double dt = traj.times[n + 1] - traj.times[n];
        const Eigen::VectorXd mid =
            0.5 * (traj.states[n] + traj.states[n + 1]);
        const double rate =
            (rep.energies[n + 1].total - rep.energies[n].total) / dt;
        rep.residuals.push_back(rate + model.dissipation(mid));
    }
    return rep;
}

std::vector<double> dissipation_residual(const Trajectory& traj,
                                         const SemiDiscreteSystem& sys) {
    if (traj.states.size() < 2)
        throw ValidationError(
            "dissipation residual needs a trajectory with at least 2 samples");
    return energy_report(sys, traj).residuals;
}

} // namespace bresse
