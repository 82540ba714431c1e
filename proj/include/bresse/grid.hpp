#pragma once

#include <vector>

namespace bresse {

// Uniform interior grid on (0, L): N interior nodes x_j = j*h,
// j = 1..N, with h = L/(N+1).  Boundary nodes are excluded from the
// state vector.
struct Grid {
    double L = 0;
    int N = 0;
    double h = 0;
    std::vector<double> x; // interior node coordinates, size N
};

Grid build_grid(double L, int N);

} // namespace bresse
