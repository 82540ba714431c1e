#include "bresse/grid.hpp"

#include <cmath>

#include "bresse/errors.hpp"

namespace bresse {

Grid build_grid(double L, int N) {
    if (!(L > 0) || !std::isfinite(L))
        throw ValidationError("L must be a positive finite number");
    if (N < 2) throw ValidationError("N must be at least 2");
    Grid g;
    g.L = L;
    g.N = N;
    g.h = L / (N + 1);
    g.x.resize(N);
    for (int j = 0; j < N; ++j) g.x[j] = (j + 1) * g.h;
    return g;
}

} // namespace bresse
