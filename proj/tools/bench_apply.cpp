#include <chrono>
#include <cstdio>
#include <random>

#include "bresse/defaults.hpp"
#include "bresse/system.hpp"

using namespace bresse;

namespace {

double time_apply(const SemiDiscreteSystem& sys, const Eigen::VectorXd& u,
                  Eigen::VectorXd& out, bool parallel, int reps) {
    const auto t0 = std::chrono::steady_clock::now();
    for (int r = 0; r < reps; ++r) {
        if (parallel)
            sys.apply(u.data(), out.data());
        else
            sys.apply_serial(u.data(), out.data());
    }
    const auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double>(t1 - t0).count() / reps;
}

} // namespace

int main() {
    const ModelSpec spec =
        default_spec(CouplingPattern::Full, ThermalLawKind::GurtinPipkin);
    std::mt19937_64 rng(2026);
    std::uniform_real_distribution<double> dist(-1, 1);

    std::printf("%8s %10s %12s %12s %8s\n", "N", "dim", "serial[s]",
                "parallel[s]", "speedup");
    for (int N : {512, 2048, 8192, 32768}) {
        ModelDescription desc = expand_memory(assemble_model(spec));
        DiscretizeOptions opts;
        opts.max_dimension = 1 << 22;
        const SemiDiscreteSystem sys =
            discretize(desc, build_grid(spec.L, N), spec.bc, opts);
        Eigen::VectorXd u(sys.dim), out(sys.dim);
        for (int i = 0; i < sys.dim; ++i) u[i] = dist(rng);
        const int reps = std::max(4, 1 << 22 >> static_cast<int>(std::log2(N)));
        // Warm-up and correctness spot check.
        Eigen::VectorXd ref(sys.dim);
        sys.apply_serial(u.data(), ref.data());
        sys.apply(u.data(), out.data());
        if ((out - ref).norm() > 1e-12 * ref.norm()) {
            std::fprintf(stderr, "parallel/serial mismatch at N=%d\n", N);
            return 1;
        }
        const double ts = time_apply(sys, u, out, false, reps);
        const double tp = time_apply(sys, u, out, true, reps);
        std::printf("%8d %10d %12.3e %12.3e %8.2f\n", N, sys.dim, ts, tp,
                    ts / tp);
    }
    return 0;
}
