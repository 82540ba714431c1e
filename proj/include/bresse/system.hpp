#pragma once

#include <Eigen/Dense>
#include <span>
#include <string>
#include <vector>

#include "bresse/grid.hpp"
#include "bresse/model.hpp"

namespace bresse {

// One scalar field's block of N consecutive entries in the state vector.
struct FieldSlot {
    std::string name;
    int offset = 0;   // start index in the state vector
    int channel = 0;  // 0 for mechanical fields
    bool neumann = false; // mirror ghosts at the boundary (else Dirichlet)
};

struct DiscretizeOptions {
    int max_dimension = 4000; // overflow guard for the dense analysis path
};

// Semi-discrete linear system du/dt = A u.  A is stored in CSR form;
// apply() is the matrix-free (OpenMP) action, apply_serial() the serial
// reference, assemble_matrix() the dense view for eigenvalue analysis.
struct SemiDiscreteSystem {
    ModelSpec spec;
    Grid grid;
    BoundaryCondition bc = BoundaryCondition::FullDirichlet;
    int dim = 0;
    std::vector<FieldSlot> slots;

    // CSR storage of A
    std::vector<int> row_ptr;
    std::vector<int> col_idx;
    std::vector<double> vals;

    int slot_index(const std::string& name) const; // -1 when absent
    const FieldSlot& slot(const std::string& name) const; // throws when absent
    std::span<const double> field(const Eigen::VectorXd& u,
                                  const std::string& name) const;

    void apply(const double* u, double* out) const;
    void apply_serial(const double* u, double* out) const;
    Eigen::VectorXd apply(const Eigen::VectorXd& u) const;
};

// Second-order central finite differences on the interior grid with
// Dirichlet ghosts = 0 and Neumann mirror ghosts.  Second-order-in-time
// fields are split into (value, velocity) pairs.  Throws NumericError
// when the state dimension exceeds opts.max_dimension.
SemiDiscreteSystem discretize(const ModelDescription& desc, const Grid& grid,
                              BoundaryCondition bc, DiscretizeOptions opts = {});

// Dense view of A (identical action to the operator form).
Eigen::MatrixXd assemble_matrix(const SemiDiscreteSystem& sys);

} // namespace bresse
