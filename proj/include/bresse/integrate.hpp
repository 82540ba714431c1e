#pragma once

#include <Eigen/Dense>
#include <functional>
#include <vector>

#include "bresse/system.hpp"

namespace bresse {

enum class Scheme { ImplicitMidpoint, BackwardEuler };

const char* scheme_name(Scheme s);

struct IntegratorConfig {
    Scheme scheme = Scheme::ImplicitMidpoint;
    double dt = 0;
    double T = 0;          // horizon
    int stride = 1;        // output thinning
    double solve_tol = 1e-12; // relative linear-solve tolerance

    void validate() const;
};

struct Trajectory {
    std::vector<double> times;
    std::vector<Eigen::VectorXd> states;
};

// Cached factorization of (I - c*A) with c = dt/2 (midpoint) or dt
// (backward Euler).  One step solves
//   midpoint:      (I - dt/2 A) u+ = (I + dt/2 A) u
//   backward Euler:(I -   dt A) u+ = u
// with one round of iterative refinement; a residual above solve_tol
// raises NumericError with a conditioning hint.
class StepSolver {
public:
    StepSolver(const SemiDiscreteSystem& sys, Scheme scheme, double dt,
               double solve_tol = 1e-12);

    Eigen::VectorXd step(const Eigen::VectorXd& u) const;

private:
    const SemiDiscreteSystem* sys_;
    Scheme scheme_;
    double dt_;
    double solve_tol_;
    Eigen::MatrixXd lhs_;
    Eigen::PartialPivLU<Eigen::MatrixXd> lu_;
};

using Observer = std::function<void(int step, double t, const Eigen::VectorXd&)>;

// Repeated step() to the horizon; observers run at every output sample
// (including t = 0).  Deterministic given inputs.
Trajectory integrate(const SemiDiscreteSystem& sys, const Eigen::VectorXd& u0,
                     const IntegratorConfig& cfg,
                     const std::vector<Observer>& observers = {});

} // namespace bresse
