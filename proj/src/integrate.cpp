#include "bresse/integrate.hpp"

#include <cmath>

#include "bresse/errors.hpp"

namespace bresse {

const char* scheme_name(Scheme s) {
    return s == Scheme::ImplicitMidpoint ? "implicit-midpoint" : "backward-euler";
}

void IntegratorConfig::validate() const {
    if (!(dt > 0) || !std::isfinite(dt))
        throw ValidationError("integrator.dt must be positive and finite");
    if (!(T > 0) || !std::isfinite(T))
        throw ValidationError("integrator.T must be positive and finite");
    if (dt > T)
        throw ValidationError("integrator.dt must not exceed integrator.T");
    if (stride < 1)
        throw ValidationError("integrator.stride must be at least 1");
    if (!(solve_tol > 0) || solve_tol > 1e-6)
        throw ValidationError("integrator.solve_tol must lie in (0, 1e-6]");
}

StepSolver::StepSolver(const SemiDiscreteSystem& sys, Scheme scheme, double dt,
                       double solve_tol)
    : sys_(&sys), scheme_(scheme), dt_(dt), solve_tol_(solve_tol) {
    const Eigen::MatrixXd A = assemble_matrix(sys);
    const double c = scheme == Scheme::ImplicitMidpoint ? dt / 2 : dt;
    lhs_ = Eigen::MatrixXd::Identity(sys.dim, sys.dim) - c * A;
    lu_.compute(lhs_);
}

Eigen::VectorXd StepSolver::step(const Eigen::VectorXd& u) const {
    Eigen::VectorXd rhs(sys_->dim);
    if (scheme_ == Scheme::ImplicitMidpoint) {
        sys_->apply(u.data(), rhs.data());
        rhs = u + (dt_ / 2) * rhs;
    } else {
        rhs = u;
    }
    Eigen::VectorXd next = lu_.solve(rhs);
    // One round of iterative refinement keeps the defect near round-off.
    Eigen::VectorXd resid = rhs - lhs_ * next;
    next += lu_.solve(resid);
    resid = rhs - lhs_ * next;
    const double scale = std::max(1.0, rhs.norm());
    if (!(resid.norm() <= solve_tol_ * scale) || !next.allFinite())
        throw NumericError(
            "implicit solve residual " + std::to_string(resid.norm() / scale) +
            " exceeds tolerance; the step matrix is likely ill-conditioned "
            "(reduce dt or N)");
    return next;
}

Trajectory integrate(const SemiDiscreteSystem& sys, const Eigen::VectorXd& u0,
                     const IntegratorConfig& cfg,
                     const std::vector<Observer>& observers) {
    cfg.validate();
    if (u0.size() != sys.dim)
        throw ValidationError("initial state dimension does not match system");
    const int steps = static_cast<int>(std::llround(cfg.T / cfg.dt));
    if (steps < 1)
        throw ValidationError("integrator.T must cover at least one step of dt");

    StepSolver solver(sys, cfg.scheme, cfg.dt, cfg.solve_tol);
    Trajectory traj;
    Eigen::VectorXd u = u0;
    auto record = [&](int n) {
        const double t = n * cfg.dt;
        traj.times.push_back(t);
        traj.states.push_back(u);
        for (const auto& obs : observers) obs(n, t, u);
    };
    record(0);
    for (int n = 1; n <= steps; ++n) {
        u = solver.step(u);
        if (n % cfg.stride == 0 || n == steps) record(n);
    }
    return traj;
}

} // namespace bresse
