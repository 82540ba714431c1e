#include "bresse/verify.hpp"

#include <unsupported/Eigen/MatrixFunctions>

#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>

#include "bresse/catalog.hpp"
#include "bresse/config.hpp"
#include "bresse/defaults.hpp"
#include "bresse/energy.hpp"
#include "bresse/errors.hpp"
#include "bresse/spectrum.hpp"
#include "bresse/system.hpp"

namespace bresse {

namespace {

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.3g", v);
    return buf;
}

std::vector<InitialMode> default_modes() {
    return {{"phi", 1, 1.0}, {"psi", 2, 0.5}, {"w", 1, 0.7}};
}

SemiDiscreteSystem make_system(const ModelSpec& spec, int N,
                               DiscretizeOptions opts = {}) {
    ModelDescription desc = assemble_model(spec);
    if (spec.coupling != CouplingPattern::Elastic && spec.law.uses_kernel())
        desc = expand_memory(desc);
    return discretize(desc, build_grid(spec.L, N), spec.bc, opts);
}

// Sup-norm trajectory gap over the listed fields shared by both systems.
double trajectory_gap(const SemiDiscreteSystem& sa, const Trajectory& ta,
                      const SemiDiscreteSystem& sb, const Trajectory& tb,
                      const std::vector<std::string>& fields) {
    double gap = 0;
    for (size_t n = 0; n < ta.states.size(); ++n)
        for (const auto& f : fields) {
            const auto a = sa.field(ta.states[n], f);
            const auto b = sb.field(tb.states[n], f);
            for (size_t j = 0; j < a.size(); ++j)
                gap = std::max(gap, std::abs(a[j] - b[j]));
        }
    return gap;
}

Eigen::VectorXd dense_midpoint_final(const Eigen::MatrixXd& A,
                                     Eigen::VectorXd u, double dt, int steps) {
    const int d = static_cast<int>(A.rows());
    const Eigen::MatrixXd lhs =
        Eigen::MatrixXd::Identity(d, d) - (dt / 2) * A;
    const Eigen::MatrixXd rhs =
        Eigen::MatrixXd::Identity(d, d) + (dt / 2) * A;
    Eigen::PartialPivLU<Eigen::MatrixXd> lu(lhs);
    for (int n = 0; n < steps; ++n) u = lu.solve(rhs * u);
    return u;
}

std::vector<ModelSpec> all_default_specs(bool include_elastic) {
    std::vector<ModelSpec> specs;
    if (include_elastic) specs.push_back(default_elastic_spec());
    for (CouplingPattern coupling : kThermalCouplings)
        for (ThermalLawKind kind : kAllLawKinds)
            specs.push_back(default_spec(coupling, kind));
    return specs;
}

} // namespace

std::vector<CheckResult> verify_energy_suite() {
    const auto specs = all_default_specs(true);
    std::vector<CheckResult> results(specs.size() + 2);

    IntegratorConfig cfg;
    cfg.scheme = Scheme::ImplicitMidpoint;
    cfg.dt = 1e-3;
    cfg.T = 1.0;
    cfg.stride = 1;

#pragma omp parallel for schedule(dynamic)
    for (size_t i = 0; i < specs.size(); ++i) {
        CheckResult& r = results[i];
        r.name = "energy identity + monotone " + specs[i].name();
        try {
            const SemiDiscreteSystem sys = make_system(specs[i], 16);
            const Eigen::VectorXd u0 = initial_state(sys, default_modes());
            const Trajectory traj = integrate(sys, u0, cfg);
            const EnergyReport rep = energy_report(sys, traj);
            const double e0 = rep.energies.front().total;
            const double scale = std::max(e0, 1.0);
            double max_resid = 0;
            for (double resid : rep.residuals)
                max_resid = std::max(max_resid, std::abs(resid));
            bool monotone = true;
            for (size_t n = 0; n + 1 < rep.energies.size(); ++n)
                if (rep.energies[n + 1].total >
                    rep.energies[n].total + 1e-12 * scale)
                    monotone = false;
            r.pass = max_resid <= 1e-7 * scale && monotone;
            r.detail = "max|residual| = " + num(max_resid) + " (tol " +
                       num(1e-7 * scale) + "), monotone = " +
                       (monotone ? "yes" : "no");
        } catch (const std::exception& e) {
            r.pass = false;
            r.detail = std::string("exception: ") + e.what();
        }
    }

    // Conservative baselines: energy drift over 1000 steps.
    auto drift_check = [&](const ModelSpec& spec, const std::string& label) {
        CheckResult r;
        r.name = "conservative drift " + label;
        try {
            const SemiDiscreteSystem sys = make_system(spec, 16);
            const Eigen::VectorXd u0 = initial_state(sys, default_modes());
            IntegratorConfig c = cfg;
            c.T = 1.0; // 1000 steps of dt = 1e-3
            c.stride = 1000;
            const Trajectory traj = integrate(sys, u0, c);
            EnergyModel model(sys);
            const double e0 = model.total_energy(traj.states.front());
            const double eN = model.total_energy(traj.states.back());
            const double drift = std::abs(eN - e0) / std::max(e0, 1.0);
            r.pass = drift <= 1e-9;
            r.detail = "relative drift = " + num(drift) + " (tol 1e-9)";
        } catch (const std::exception& e) {
            r.pass = false;
            r.detail = std::string("exception: ") + e.what();
        }
        return r;
    };
    results[specs.size()] = drift_check(default_elastic_spec(), "(Elastic)");
    ModelSpec gn2 = default_spec(CouplingPattern::Full,
                                 ThermalLawKind::GreenNaghdiIII);
    gn2.law.varpi = 0.0; // conservative type-II reduction
    results[specs.size() + 1] = drift_check(gn2, "(Full, GreenNaghdiIII varpi=0)");
    return results;
}

std::vector<CheckResult> verify_spectrum_suite() {
    const auto specs = all_default_specs(false);
    std::vector<CheckResult> results(specs.size() + 1);

#pragma omp parallel for schedule(dynamic)
    for (size_t i = 0; i < specs.size(); ++i) {
        CheckResult& r = results[i];
        r.name = "spectrum " + specs[i].name();
        try {
            const SpectrumReport rep = spectrum(make_system(specs[i], 12));
            r.pass = rep.conjugate_paired && rep.abscissa <= -1e-8;
            r.detail = "abscissa = " + num(rep.abscissa) +
                       " (tol <= -1e-8), conjugate pairs = " +
                       (rep.conjugate_paired ? "yes" : "no");
        } catch (const std::exception& e) {
            r.pass = false;
            r.detail = std::string("exception: ") + e.what();
        }
    }

    CheckResult& re = results[specs.size()];
    re.name = "spectrum (Elastic)";
    try {
        const SpectrumReport rep = spectrum(make_system(default_elastic_spec(), 12));
        re.pass = rep.conjugate_paired && std::abs(rep.abscissa) <= 1e-8;
        re.detail = "|abscissa| = " + num(std::abs(rep.abscissa)) +
                    " (tol 1e-8), conjugate pairs = " +
                    (rep.conjugate_paired ? "yes" : "no");
    } catch (const std::exception& e) {
        re.pass = false;
        re.detail = std::string("exception: ") + e.what();
    }
    return results;
}

namespace {

// Sup-over-time gap between the total-energy series of two runs.
double energy_gap(const SemiDiscreteSystem& sa, const Trajectory& ta,
                  const SemiDiscreteSystem& sb, const Trajectory& tb) {
    EnergyModel ma(sa), mb(sb);
    double gap = 0;
    for (size_t n = 0; n < ta.states.size(); ++n)
        gap = std::max(gap, std::abs(ma.total_energy(ta.states[n]) -
                                     mb.total_energy(tb.states[n])));
    return gap;
}

CheckResult monotone_gap_check(
    const std::string& name, const std::vector<double>& eps,
    const std::function<ModelSpec(double)>& limiting,
    const std::function<ModelSpec(double)>& target) {
    CheckResult r;
    r.name = name;
    try {
        IntegratorConfig cfg;
        cfg.dt = 2e-4;
        cfg.T = 0.4;
        cfg.stride = 20;
        std::vector<InitialMode> modes = default_modes();
        std::vector<double> gaps;
        for (double e : eps) {
            const SemiDiscreteSystem a = make_system(limiting(e), 8);
            const SemiDiscreteSystem b = make_system(target(e), 8);
            const Trajectory ta = integrate(a, initial_state(a, modes), cfg);
            const Trajectory tb = integrate(b, initial_state(b, modes), cfg);
            gaps.push_back(energy_gap(a, ta, b, tb));
        }
        bool monotone = true;
        for (size_t i = 0; i + 1 < gaps.size(); ++i)
            if (!(gaps[i + 1] < gaps[i])) monotone = false;
        r.pass = monotone;
        std::ostringstream d;
        d << "energy gaps:";
        for (double g : gaps) d << " " << num(g);
        d << (monotone ? " (monotone decrease)" : " (NOT monotone)");
        r.detail = d.str();
    } catch (const std::exception& e) {
        r.pass = false;
        r.detail = std::string("exception: ") + e.what();
    }
    return r;
}

} // namespace

std::vector<CheckResult> verify_limits_suite() {
    std::vector<CheckResult> results;

    // Relaxation limit: Cattaneo with unit normalization approaches the
    // Fourier run as tau -> 0.
    results.push_back(monotone_gap_check(
        "limit Cattaneo -> Fourier (SingleBending)", {1e-1, 1e-2, 1e-3},
        [](double tau) {
            ModelSpec s = default_spec(CouplingPattern::SingleBending,
                                       ThermalLawKind::Cattaneo);
            s.law.tau = tau;
            s.law.normalization = 1.0;
            return s;
        },
        [](double) {
            return default_spec(CouplingPattern::SingleBending,
                                ThermalLawKind::Fourier);
        }));

    // Kernel concentration: Gurtin-Pipkin with the single mode of mass
    // 1/eps and rate 1/eps (normalized by eps) approaches the Cattaneo
    // run with relaxation time eps.
    results.push_back(monotone_gap_check(
        "limit GurtinPipkin -> Cattaneo (Full)", {1e-1, 1e-2},
        [](double eps) {
            ModelSpec s = default_spec(CouplingPattern::Full,
                                       ThermalLawKind::GurtinPipkin);
            s.law.kernel = PronyKernel{{{1.0 / (eps * eps), 1.0 / eps}}};
            s.law.normalization = eps;
            return s;
        },
        [](double eps) {
            ModelSpec s = default_spec(CouplingPattern::Full,
                                       ThermalLawKind::Cattaneo);
            s.law.tau = eps;
            s.law.normalization = 1.0;
            return s;
        }));

    // Kernel mass concentration in the type-III history law recovers the
    // local Green-Naghdi III flow.
    results.push_back(monotone_gap_check(
        "limit TypeIIIMemory -> GreenNaghdiIII (Full)", {1e-1, 1e-2},
        [](double eps) {
            ModelSpec s = default_spec(CouplingPattern::Full,
                                       ThermalLawKind::TypeIIIMemory);
            s.law.kernel = PronyKernel{{{1.0 / (eps * eps), 1.0 / eps}}};
            return s;
        },
        [](double) {
            return default_spec(CouplingPattern::Full,
                                ThermalLawKind::GreenNaghdiIII);
        }));
    return results;
}

std::vector<CheckResult> verify_orders_suite() {
    std::vector<CheckResult> results;

    // Spatial order by three-grid Richardson: apply A to smooth sine
    // samples on N = 15, 31, 63 (coincident coarse nodes at odd fine
    // indices), and compare the images where the grids overlap.
    for (ThermalLawKind kind :
         {ThermalLawKind::Fourier, ThermalLawKind::TzouDPL,
          ThermalLawKind::TypeIIIMemory}) {
        CheckResult r;
        const ModelSpec spec = default_spec(CouplingPattern::Full, kind);
        r.name = "spatial order " + spec.name();
        try {
            const std::vector<int> Ns = {15, 31, 63};
            std::vector<SemiDiscreteSystem> sys;
            std::vector<Eigen::VectorXd> img;
            for (int N : Ns) {
                sys.push_back(make_system(spec, N));
                const SemiDiscreteSystem& s = sys.back();
                Eigen::VectorXd u(s.dim);
                for (size_t si = 0; si < s.slots.size(); ++si) {
                    const int mode = static_cast<int>(si % 4) + 1;
                    const double amp = 1.0 / (1.0 + static_cast<double>(si));
                    for (int j = 0; j < N; ++j)
                        u[s.slots[si].offset + j] =
                            amp * std::sin(mode * M_PI * s.grid.x[j] / spec.L);
                }
                img.push_back(s.apply(u));
            }
            auto overlap_err = [&](int coarse, int fine) {
                double e = 0;
                const int N = Ns[coarse];
                for (size_t si = 0; si < sys[coarse].slots.size(); ++si)
                    for (int j = 0; j < N; ++j) {
                        const double a =
                            img[coarse][sys[coarse].slots[si].offset + j];
                        const double b =
                            img[fine][sys[fine].slots[si].offset + 2 * j + 1];
                        e = std::max(e, std::abs(a - b));
                    }
                return e;
            };
            const double e1 = overlap_err(0, 1);
            const double e2 = overlap_err(1, 2);
            const double order = std::log2(e1 / e2);
            r.pass = order >= 1.9;
            r.detail = "observed order = " + num(order) + " (tol >= 1.9)";
        } catch (const std::exception& e) {
            r.pass = false;
            r.detail = std::string("exception: ") + e.what();
        }
        results.push_back(r);
    }

    // Temporal order of the implicit midpoint rule against the matrix
    // exponential on a small dense system.
    {
        CheckResult r;
        r.name = "temporal order implicit midpoint (Elastic, D=12)";
        try {
            const ModelSpec spec = default_elastic_spec();
            const SemiDiscreteSystem sys = make_system(spec, 2);
            const Eigen::MatrixXd A = assemble_matrix(sys);
            const Eigen::VectorXd u0 = initial_state(sys, default_modes());
            const double T = 1.0;
            const Eigen::VectorXd uref = (T * A).exp() * u0;
            std::vector<double> errs;
            for (double dt : {1e-2, 5e-3, 2.5e-3}) {
                const int steps = static_cast<int>(std::llround(T / dt));
                errs.push_back(
                    (dense_midpoint_final(A, u0, dt, steps) - uref).norm());
            }
            const double o1 = std::log2(errs[0] / errs[1]);
            const double o2 = std::log2(errs[1] / errs[2]);
            r.pass = o1 >= 1.9 && o2 >= 1.9;
            r.detail = "observed orders = " + num(o1) + ", " + num(o2) +
                       " (tol >= 1.9)";
        } catch (const std::exception& e) {
            r.pass = false;
            r.detail = std::string("exception: ") + e.what();
        }
        results.push_back(r);
    }
    return results;
}

namespace {

// Independent assembly of the eliminated (third-order in theta) image of
// the dual-phase-lag flux system: state (mech, theta_i, u_i = theta_i_t,
// v_i = theta_i_tt), with chained first-difference stencils so the two
// forms are algebraically identical up to the linear change of variables.
Eigen::MatrixXd assemble_dpl_eliminated(const SemiDiscreteSystem& flux) {
    const ModelSpec& spec = flux.spec;
    const int n = flux.grid.N;
    const double h = flux.grid.h;
    const int dim = flux.dim;
    const auto active = active_channels(spec.coupling);
    const Eigen::MatrixXd Aflux = assemble_matrix(flux);

    // The discretization carries every first-difference exchange as an
    // adjoint pair B = D1 + kappa*h^2*D2 (gradient side) and
    // G = D1 - kappa*h^2*D2 (divergence side); reproduce both here so
    // the eliminated form chains the exact same operators.
    const double kp = 0.25;
    Eigen::MatrixXd D1 = Eigen::MatrixXd::Zero(n, n);
    Eigen::MatrixXd D2 = Eigen::MatrixXd::Zero(n, n);
    for (int j = 0; j < n; ++j) {
        if (j + 1 < n) D1(j, j + 1) = 1.0 / (2 * h);
        if (j - 1 >= 0) D1(j, j - 1) = -1.0 / (2 * h);
        D2(j, j) = -2.0 / (h * h);
        if (j + 1 < n) D2(j, j + 1) = 1.0 / (h * h);
        if (j - 1 >= 0) D2(j, j - 1) = 1.0 / (h * h);
    }
    const Eigen::MatrixXd B = D1 + kp * h * h * D2;
    const Eigen::MatrixXd G = D1 - kp * h * h * D2;
    const Eigen::MatrixXd W = G * B;

    // Eliminated layout reuses the flux offsets: theta_i keeps its slot,
    // u_i takes the q_i slot, v_i takes the r_i slot.
    auto off = [&](const std::string& name) { return flux.slot(name).offset; };

    Eigen::MatrixXd A = Eigen::MatrixXd::Zero(dim, dim);
    // Mechanical rows are shared verbatim (they touch only positions,
    // velocities and theta columns).
    for (const char* name : {"phi", "phi_t", "psi", "psi_t", "w", "w_t"}) {
        const int o = off(name);
        A.middleRows(o, n) = Aflux.middleRows(o, n);
    }

    // d/dt of the columns the acceleration rows read: positions advance
    // to velocities and theta advances to u.
    Eigen::MatrixXd Dmap = Eigen::MatrixXd::Zero(dim, dim);
    for (int j = 0; j < n; ++j) {
        Dmap(off("phi") + j, off("phi_t") + j) = 1;
        Dmap(off("psi") + j, off("psi_t") + j) = 1;
        Dmap(off("w") + j, off("w_t") + j) = 1;
    }
    for (int i = 0; i < 3; ++i)
        if (active[i]) {
            const std::string si = std::to_string(i + 1);
            for (int j = 0; j < n; ++j)
                Dmap(off("theta" + si) + j, off("q" + si) + j) = 1;
        }

    const Eigen::MatrixXd acc_phi = A.middleRows(off("phi_t"), n);
    const Eigen::MatrixXd acc_psi = A.middleRows(off("psi_t"), n);
    const Eigen::MatrixXd acc_w = A.middleRows(off("w_t"), n);
    const Eigen::MatrixXd jerk_phi = acc_phi * Dmap;
    const Eigen::MatrixXd jerk_psi = acc_psi * Dmap;
    const Eigen::MatrixXd jerk_w = acc_w * Dmap;

    Eigen::MatrixXd vel_phi = Eigen::MatrixXd::Zero(n, dim);
    Eigen::MatrixXd vel_psi = Eigen::MatrixXd::Zero(n, dim);
    Eigen::MatrixXd vel_w = Eigen::MatrixXd::Zero(n, dim);
    vel_phi.middleCols(off("phi_t"), n).setIdentity();
    vel_psi.middleCols(off("psi_t"), n).setIdentity();
    vel_w.middleCols(off("w_t"), n).setIdentity();

    const double ell = spec.coeffs.ell;
    auto strain = [&](int channel, const Eigen::MatrixXd& a,
                      const Eigen::MatrixXd& b, const Eigen::MatrixXd& c) {
        switch (channel) {
            case 1: return Eigen::MatrixXd(B * a + b + ell * c);
            case 2: return Eigen::MatrixXd(B * c - ell * a);
            default: return Eigen::MatrixXd(B * b);
        }
    };

    const double tq = spec.law.tau_q;
    const double tt = spec.law.tau_theta;
    for (int i = 0; i < 3; ++i) {
        if (!active[i]) continue;
        const std::string si = std::to_string(i + 1);
        const int oth = off("theta" + si);
        const int ou = off("q" + si);
        const int ov = off("r" + si);
        const double varrho = spec.coeffs.varrho[i];
        const double gamma = spec.coeffs.gamma[i];
        const double w = spec.law.effective_normalization(gamma);
        const double m = spec.coeffs.m[i];

        A.block(oth, ou, n, n).setIdentity(); // theta' = u
        A.block(ou, ov, n, n).setIdentity();  // u' = v

        const int ch = i + 1;
        const Eigen::MatrixXd Gdot = strain(ch, vel_phi, vel_psi, vel_w);
        const Eigen::MatrixXd Gddot = strain(ch, acc_phi, acc_psi, acc_w);
        const Eigen::MatrixXd Gdddot = strain(ch, jerk_phi, jerk_psi, jerk_w);

        Eigen::MatrixXd row = Eigen::MatrixXd::Zero(n, dim);
        row.middleCols(ov, n) -= varrho * tq * Eigen::MatrixXd::Identity(n, n);
        row.middleCols(ou, n) -= varrho * Eigen::MatrixXd::Identity(n, n);
        row.middleCols(oth, n) += gamma * w * W;
        row.middleCols(ou, n) += gamma * w * tt * W;
        row -= m * (Gdot + tq * Gddot + (tq * tq / 2) * Gdddot);
        A.middleRows(ov, n) = (2.0 / (varrho * tq * tq)) * row;
    }
    return A;
}

} // namespace

std::vector<CheckResult> verify_oracle_suite() {
    std::vector<CheckResult> results;

    // Implicit midpoint against the matrix exponential on a dense system
    // small enough for the exponential to be a trustworthy oracle.
    {
        CheckResult r;
        r.name = "matrix exponential oracle (Full, Cattaneo) N=2";
        try {
            const ModelSpec spec =
                default_spec(CouplingPattern::Full, ThermalLawKind::Cattaneo);
            const SemiDiscreteSystem sys = make_system(spec, 2);
            const Eigen::MatrixXd A = assemble_matrix(sys);
            const Eigen::VectorXd u0 = initial_state(sys, default_modes());
            const Eigen::VectorXd uref = (1.0 * A).exp() * u0;
            IntegratorConfig cfg;
            cfg.dt = 1e-4;
            cfg.T = 1.0;
            cfg.stride = 10000;
            const Trajectory traj = integrate(sys, u0, cfg);
            const double rel =
                (traj.states.back() - uref).norm() / uref.norm();
            r.pass = rel <= 1e-6;
            r.detail = "relative error = " + num(rel) + " (tol 1e-6)";
        } catch (const std::exception& e) {
            r.pass = false;
            r.detail = std::string("exception: ") + e.what();
        }
        results.push_back(r);
    }

    // Zero thermal coupling reproduces the elastic baseline exactly, both
    // structurally (term lists) and dynamically.
    {
        CheckResult r;
        r.name = "elastic reduction m = 0";
        try {
            ModelSpec coupled =
                default_spec(CouplingPattern::Full, ThermalLawKind::Fourier);
            coupled.coeffs.m = {0, 0, 0};
            const ModelSpec elastic = default_elastic_spec();
            const ModelDescription dc = assemble_model(coupled);
            const ModelDescription de = assemble_model(elastic);
            bool structural = true;
            for (const char* label : {"phi", "psi", "w"}) {
                const Equation* ec = dc.find_equation(label);
                const Equation* ee = de.find_equation(label);
                if (!ec || !ee || ec->terms != ee->terms) structural = false;
            }
            IntegratorConfig cfg;
            cfg.dt = 1e-3;
            cfg.T = 0.5;
            cfg.stride = 25;
            const SemiDiscreteSystem sc = make_system(coupled, 8);
            const SemiDiscreteSystem se = make_system(elastic, 8);
            const Trajectory tc =
                integrate(sc, initial_state(sc, default_modes()), cfg);
            const Trajectory te =
                integrate(se, initial_state(se, default_modes()), cfg);
            const double gap = trajectory_gap(
                sc, tc, se, te,
                {"phi", "phi_t", "psi", "psi_t", "w", "w_t"});
            r.pass = structural && gap <= 1e-10;
            r.detail = "structural = " +
                       std::string(structural ? "yes" : "no") +
                       ", trajectory gap = " + num(gap) + " (tol 1e-10)";
        } catch (const std::exception& e) {
            r.pass = false;
            r.detail = std::string("exception: ") + e.what();
        }
        results.push_back(r);
    }

    // Dual-phase-lag: the flux-variable system and the independently
    // assembled eliminated third-order form must produce the same
    // temperatures.
    {
        CheckResult r;
        r.name = "dual-phase-lag flux vs eliminated form N=8";
        try {
            const ModelSpec spec =
                default_spec(CouplingPattern::Full, ThermalLawKind::TzouDPL);
            const SemiDiscreteSystem sys = make_system(spec, 8);
            const Eigen::MatrixXd Aflux = assemble_matrix(sys);
            const Eigen::MatrixXd Aelim = assemble_dpl_eliminated(sys);

            std::vector<InitialMode> modes = default_modes();
            modes.push_back({"theta1", 1, 0.3});
            modes.push_back({"theta2", 2, 0.2});
            modes.push_back({"theta3", 1, 0.25});
            const Eigen::VectorXd u0 = initial_state(sys, modes);

            // Map the flux initial data into the eliminated variables:
            // u = theta_t rows of A u0, v = theta_t rows of A^2 u0.
            const Eigen::VectorXd Au = Aflux * u0;
            const Eigen::VectorXd AAu = Aflux * Au;
            Eigen::VectorXd v0 = u0;
            const int n = sys.grid.N;
            for (int i = 1; i <= 3; ++i) {
                const std::string si = std::to_string(i);
                const int oth = sys.slot("theta" + si).offset;
                const int ou = sys.slot("q" + si).offset;
                const int ov = sys.slot("r" + si).offset;
                v0.segment(ou, n) = Au.segment(oth, n);
                v0.segment(ov, n) = AAu.segment(oth, n);
            }

            IntegratorConfig cfg;
            cfg.dt = 1e-3;
            cfg.T = 0.5;
            cfg.stride = 500;
            const Trajectory tf = integrate(sys, u0, cfg);
            const int steps = 500;
            const Eigen::VectorXd ue =
                dense_midpoint_final(Aelim, v0, cfg.dt, steps);

            double rel = 0;
            for (int i = 1; i <= 3; ++i) {
                const std::string si = std::to_string(i);
                const int oth = sys.slot("theta" + si).offset;
                const Eigen::VectorXd a =
                    tf.states.back().segment(oth, n);
                const Eigen::VectorXd b = ue.segment(oth, n);
                rel = std::max(
                    rel, (a - b).norm() / std::max(a.norm(), 1e-12));
            }
            r.pass = rel <= 1e-5;
            r.detail = "max relative theta gap = " + num(rel) + " (tol 1e-5)";
        } catch (const std::exception& e) {
            r.pass = false;
            r.detail = std::string("exception: ") + e.what();
        }
        results.push_back(r);
    }
    return results;
}

std::vector<CheckResult> verify_suite(const std::string& suite) {
    if (suite == "energy") return verify_energy_suite();
    if (suite == "spectrum") return verify_spectrum_suite();
    if (suite == "limits") return verify_limits_suite();
    if (suite == "all") {
        std::vector<CheckResult> all;
        for (const auto* s : {"energy", "spectrum", "limits"}) {
            auto part = verify_suite(s);
            all.insert(all.end(), part.begin(), part.end());
        }
        auto orders = verify_orders_suite();
        all.insert(all.end(), orders.begin(), orders.end());
        auto oracle = verify_oracle_suite();
        all.insert(all.end(), oracle.begin(), oracle.end());
        return all;
    }
    throw ValidationError("unknown verify suite \"" + suite +
                          "\"; expected energy, limits, spectrum or all");
}

} // namespace bresse
