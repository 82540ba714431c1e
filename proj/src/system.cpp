#include "bresse/system.hpp"

#include <cmath>
#include <map>

#include "bresse/errors.hpp"

namespace bresse {

int SemiDiscreteSystem::slot_index(const std::string& name) const {
    for (size_t i = 0; i < slots.size(); ++i)
        if (slots[i].name == name) return static_cast<int>(i);
    return -1;
}

const FieldSlot& SemiDiscreteSystem::slot(const std::string& name) const {
    const int i = slot_index(name);
    if (i < 0) throw ValidationError("unknown field slot: " + name);
    return slots[i];
}

std::span<const double> SemiDiscreteSystem::field(const Eigen::VectorXd& u,
                                                  const std::string& name) const {
    const FieldSlot& s = slot(name);
    return {u.data() + s.offset, static_cast<size_t>(grid.N)};
}

void SemiDiscreteSystem::apply_serial(const double* u, double* out) const {
    for (int r = 0; r < dim; ++r) {
        double acc = 0;
        for (int p = row_ptr[r]; p < row_ptr[r + 1]; ++p)
            acc += vals[p] * u[col_idx[p]];
        out[r] = acc;
    }
}

void SemiDiscreteSystem::apply(const double* u, double* out) const {
#pragma omp parallel for schedule(static)
    for (int r = 0; r < dim; ++r) {
        double acc = 0;
        for (int p = row_ptr[r]; p < row_ptr[r + 1]; ++p)
            acc += vals[p] * u[col_idx[p]];
        out[r] = acc;
    }
}

Eigen::VectorXd SemiDiscreteSystem::apply(const Eigen::VectorXd& u) const {
    Eigen::VectorXd out(dim);
    apply(u.data(), out.data());
    return out;
}

Eigen::MatrixXd assemble_matrix(const SemiDiscreteSystem& sys) {
    Eigen::MatrixXd A = Eigen::MatrixXd::Zero(sys.dim, sys.dim);
    for (int r = 0; r < sys.dim; ++r)
        for (int p = sys.row_ptr[r]; p < sys.row_ptr[r + 1]; ++p)
            A(r, sys.col_idx[p]) += sys.vals[p];
    return A;
}

namespace {

// Accumulates stencil entries with ghost-node resolution: Dirichlet
// ghosts vanish, Neumann ghosts mirror the first/last interior node.
class Builder {
public:
    Builder(int n, double h) : n_(n), h_(h) {}

    int add_slot(const std::string& name, int channel, bool neumann) {
        slots_.push_back(FieldSlot{name, static_cast<int>(slots_.size()) * n_,
                                   channel, neumann});
        return static_cast<int>(slots_.size()) - 1;
    }

    int dim() const { return static_cast<int>(slots_.size()) * n_; }
    const std::vector<FieldSlot>& slots() const { return slots_; }
    int row(int slot, int j) const { return slots_[slot].offset + j; }

    void start_rows() { rows_.assign(dim(), {}); }

    void add(int row, int slot, int node, double coeff) {
        if (coeff == 0.0) return;
        if (node < 0 || node >= n_) {
            if (!slots_[slot].neumann) return; // Dirichlet ghost = 0
            node = node < 0 ? 0 : n_ - 1;      // mirror ghost
        }
        rows_[row][slots_[slot].offset + node] += coeff;
    }

    void add_id(int row, int slot, int j, double c) { add(row, slot, j, c); }

    void add_d1(int row, int slot, int j, double c) {
        add(row, slot, j + 1, c / (2 * h_));
        add(row, slot, j - 1, -c / (2 * h_));
    }

    void add_d2(int row, int slot, int j, double c) {
        const double w = c / (h_ * h_);
        add(row, slot, j - 1, w);
        add(row, slot, j, -2 * w);
        add(row, slot, j + 1, w);
    }

    // First-difference pair used for coupling/transfer terms: the two
    // sides of an exchange carry D1 + dir*kappa*h^2*D2 with opposite
    // dir.  The symmetric O(h^2) correction keeps the exchange exactly
    // energy-neutral (D2 is symmetric) while removing the checkerboard
    // null space of the plain centered difference, which would otherwise
    // leave high-frequency modes invisible to the damping.
    static constexpr double kPairCorrection = 0.25;

    void add_pair_d1(int row, int slot, int j, double c, int dir) {
        add_d1(row, slot, j, c);
        add_d2(row, slot, j, dir * kPairCorrection * h_ * h_ * c);
    }

    // Half-point (staggered) linear forms: one contribution references
    // the left node of the interval (side 0) or the right node (side 1).
    struct HalfComp { int slot; int side; double coeff; };
    using HalfForm = std::vector<HalfComp>;

    // c * (F_{j+1/2 ... between j and j+1} - F_{j-1/2}) / h
    void add_half_div(int row, const HalfForm& form, int j, double c) {
        for (const auto& comp : form) {
            add(row, comp.slot, j + comp.side, c * comp.coeff / h_);
            add(row, comp.slot, j - 1 + comp.side, -c * comp.coeff / h_);
        }
    }

    // c * (F_{j+1/2} + F_{j-1/2}) / 2
    void add_half_avg(int row, const HalfForm& form, int j, double c) {
        for (const auto& comp : form) {
            add(row, comp.slot, j + comp.side, c * comp.coeff / 2);
            add(row, comp.slot, j - 1 + comp.side, c * comp.coeff / 2);
        }
    }

    void to_csr(SemiDiscreteSystem& sys) const {
        sys.row_ptr.assign(1, 0);
        sys.col_idx.clear();
        sys.vals.clear();
        for (const auto& r : rows_) {
            for (const auto& [col, v] : r) {
                sys.col_idx.push_back(col);
                sys.vals.push_back(v);
            }
            sys.row_ptr.push_back(static_cast<int>(sys.col_idx.size()));
        }
    }

private:
    int n_;
    double h_;
    std::vector<FieldSlot> slots_;
    std::vector<std::map<int, double>> rows_;
};

} // namespace

SemiDiscreteSystem discretize(const ModelDescription& desc, const Grid& grid,
                              BoundaryCondition bc, DiscretizeOptions opts) {
    const ModelSpec& spec = desc.spec;
    spec.validate();
    for (const auto& eq : desc.equations)
        for (const auto& t : eq.terms)
            if (t.conv_channel > 0)
                throw ValidationError(
                    "description still carries convolution markers; call "
                    "expand_memory first");
    if (std::abs(grid.L - spec.L) > 1e-12 * std::max(1.0, spec.L))
        throw ValidationError("grid length does not match the model length L");

    const int n = grid.N;
    const double h = grid.h;
    const auto& c = spec.coeffs;
    const double ell = c.ell;
    const auto active = spec.coupling == CouplingPattern::Elastic
                            ? std::array<bool, 3>{false, false, false}
                            : active_channels(spec.coupling);
    const auto& law = spec.law;
    const bool mixed = bc == BoundaryCondition::MixedDN;

    Builder bld(n, h);
    const int phi = bld.add_slot("phi", 0, false);
    const int phi_t = bld.add_slot("phi_t", 0, false);
    const int psi = bld.add_slot("psi", 0, mixed);
    const int psi_t = bld.add_slot("psi_t", 0, mixed);
    const int wq = bld.add_slot("w", 0, mixed);
    const int w_t = bld.add_slot("w_t", 0, mixed);

    struct ChannelSlots { int theta = -1, q = -1, r = -1, p = -1; std::vector<int> z; };
    std::array<ChannelSlots, 3> ch;
    for (int i = 1; i <= 3; ++i) {
        if (!active[i - 1]) continue;
        auto& s = ch[i - 1];
        const std::string si = std::to_string(i);
        switch (law.kind) {
            case ThermalLawKind::Fourier:
                s.theta = bld.add_slot("theta" + si, i, false);
                break;
            case ThermalLawKind::Cattaneo:
            case ThermalLawKind::LordShulman:
                s.theta = bld.add_slot("theta" + si, i, false);
                s.q = bld.add_slot("q" + si, i, false);
                break;
            case ThermalLawKind::GurtinPipkin:
            case ThermalLawKind::ColemanGurtin:
                s.theta = bld.add_slot("theta" + si, i, false);
                for (size_t j = 0; j < law.kernel.modes.size(); ++j)
                    s.z.push_back(bld.add_slot(
                        "z" + si + "_" + std::to_string(j + 1), i, false));
                break;
            case ThermalLawKind::GreenNaghdiIII:
                s.p = bld.add_slot("p" + si, i, false);
                s.theta = bld.add_slot("theta" + si, i, false);
                break;
            case ThermalLawKind::TypeIIIMemory:
                s.p = bld.add_slot("p" + si, i, false);
                s.theta = bld.add_slot("theta" + si, i, false);
                for (size_t j = 0; j < law.kernel.modes.size(); ++j)
                    s.z.push_back(bld.add_slot(
                        "z" + si + "_" + std::to_string(j + 1), i, false));
                break;
            case ThermalLawKind::TzouDPL:
                s.theta = bld.add_slot("theta" + si, i, false);
                s.q = bld.add_slot("q" + si, i, false);
                s.r = bld.add_slot("r" + si, i, false);
                break;
        }
    }

    if (bld.dim() > opts.max_dimension)
        throw NumericError("state dimension " + std::to_string(bld.dim()) +
                           " exceeds the configured cap " +
                           std::to_string(opts.max_dimension) +
                           "; reduce N or raise the cap");

    bld.start_rows();

    // Staggered strain forms (evaluated at half points):
    //   S = phi_x + psi + ell*w, Ax = w_x - ell*phi, B = psi_x.
    const Builder::HalfForm S = {{phi, 1, 1 / h}, {phi, 0, -1 / h},
                                 {psi, 1, 0.5},   {psi, 0, 0.5},
                                 {wq, 1, ell / 2}, {wq, 0, ell / 2}};
    const Builder::HalfForm Ax = {{wq, 1, 1 / h},      {wq, 0, -1 / h},
                                  {phi, 1, -ell / 2}, {phi, 0, -ell / 2}};
    const Builder::HalfForm B = {{psi, 1, 1 / h}, {psi, 0, -1 / h}};

    // m_i * d/dt of the channel strain G_i, collocated.
    auto add_strain_rate = [&](int row, int j, int i, double coeff) {
        switch (i) {
            case 1:
                bld.add_pair_d1(row, phi_t, j, coeff, +1);
                bld.add_id(row, psi_t, j, coeff);
                bld.add_id(row, w_t, j, coeff * ell);
                break;
            case 2:
                bld.add_pair_d1(row, w_t, j, coeff, +1);
                bld.add_id(row, phi_t, j, -coeff * ell);
                break;
            case 3:
                bld.add_pair_d1(row, psi_t, j, coeff, +1);
                break;
        }
    };

    for (int j = 0; j < n; ++j) {
        // value rows: d(field)/dt = velocity
        bld.add_id(bld.row(phi, j), phi_t, j, 1.0);
        bld.add_id(bld.row(psi, j), psi_t, j, 1.0);
        bld.add_id(bld.row(wq, j), w_t, j, 1.0);

        // velocity rows
        int row = bld.row(phi_t, j);
        bld.add_half_div(row, S, j, c.k / c.rho1);
        bld.add_half_avg(row, Ax, j, ell * c.k0 / c.rho1);
        if (active[0]) bld.add_pair_d1(row, ch[0].theta, j, -c.m[0] / c.rho1, -1);
        if (active[1]) bld.add_id(row, ch[1].theta, j, -ell * c.m[1] / c.rho1);

        row = bld.row(psi_t, j);
        bld.add_half_div(row, B, j, c.b / c.rho2);
        bld.add_half_avg(row, S, j, -c.k / c.rho2);
        if (active[2]) bld.add_pair_d1(row, ch[2].theta, j, -c.m[2] / c.rho2, -1);
        if (active[0]) bld.add_id(row, ch[0].theta, j, c.m[0] / c.rho2);

        row = bld.row(w_t, j);
        bld.add_half_div(row, Ax, j, c.k0 / c.rho1);
        bld.add_half_avg(row, S, j, -ell * c.k / c.rho1);
        if (active[1]) bld.add_pair_d1(row, ch[1].theta, j, -c.m[1] / c.rho1, -1);
        if (active[0]) bld.add_id(row, ch[0].theta, j, ell * c.m[0] / c.rho1);
    }

    for (int i = 1; i <= 3; ++i) {
        if (!active[i - 1]) continue;
        const auto& s = ch[i - 1];
        const double varrho = c.varrho[i - 1];
        const double gamma = c.gamma[i - 1];
        const double m = c.m[i - 1];
        const double w = law.effective_normalization(gamma);
        const auto& modes = law.kernel.modes;

        for (int j = 0; j < n; ++j) {
            switch (law.kind) {
                case ThermalLawKind::Fourier: {
                    const int row = bld.row(s.theta, j);
                    bld.add_d2(row, s.theta, j, gamma * w / varrho);
                    add_strain_rate(row, j, i, -m / varrho);
                    break;
                }
                case ThermalLawKind::Cattaneo:
                case ThermalLawKind::LordShulman: {
                    int row = bld.row(s.theta, j);
                    bld.add_pair_d1(row, s.q, j, -gamma / varrho, -1);
                    add_strain_rate(row, j, i, -m / varrho);
                    row = bld.row(s.q, j);
                    bld.add_id(row, s.q, j, -1.0 / law.tau);
                    bld.add_pair_d1(row, s.theta, j, -w / law.tau, +1);
                    break;
                }
                case ThermalLawKind::GurtinPipkin: {
                    const int row = bld.row(s.theta, j);
                    for (size_t jj = 0; jj < modes.size(); ++jj) {
                        const double cj = modes[jj].a / modes[jj].b;
                        bld.add_d2(row, s.z[jj], j, gamma * w * cj / varrho);
                    }
                    add_strain_rate(row, j, i, -m / varrho);
                    for (size_t jj = 0; jj < modes.size(); ++jj) {
                        const int zr = bld.row(s.z[jj], j);
                        bld.add_id(zr, s.theta, j, modes[jj].b);
                        bld.add_id(zr, s.z[jj], j, -modes[jj].b);
                    }
                    break;
                }
                case ThermalLawKind::ColemanGurtin: {
                    const int row = bld.row(s.theta, j);
                    bld.add_d2(row, s.theta, j,
                               gamma * w * (1.0 - law.varpi) / varrho);
                    for (size_t jj = 0; jj < modes.size(); ++jj) {
                        const double cj = modes[jj].a / modes[jj].b;
                        bld.add_d2(row, s.z[jj], j,
                                   gamma * w * law.varpi * cj / varrho);
                    }
                    add_strain_rate(row, j, i, -m / varrho);
                    for (size_t jj = 0; jj < modes.size(); ++jj) {
                        const int zr = bld.row(s.z[jj], j);
                        bld.add_id(zr, s.theta, j, modes[jj].b);
                        bld.add_id(zr, s.z[jj], j, -modes[jj].b);
                    }
                    break;
                }
                case ThermalLawKind::GreenNaghdiIII: {
                    bld.add_id(bld.row(s.p, j), s.theta, j, 1.0);
                    const int row = bld.row(s.theta, j);
                    bld.add_d2(row, s.p, j, law.beta * gamma / varrho);
                    bld.add_d2(row, s.theta, j, law.varpi * gamma / varrho);
                    add_strain_rate(row, j, i, -m / varrho);
                    break;
                }
                case ThermalLawKind::TypeIIIMemory: {
                    bld.add_id(bld.row(s.p, j), s.theta, j, 1.0);
                    const int row = bld.row(s.theta, j);
                    const double mu_eff =
                        law.beta + law.varpi * law.kernel.total_mass();
                    bld.add_d2(row, s.p, j, mu_eff * gamma / varrho);
                    for (size_t jj = 0; jj < modes.size(); ++jj) {
                        const double cj = modes[jj].a / modes[jj].b;
                        bld.add_d2(row, s.z[jj], j,
                                   -law.varpi * gamma * cj / varrho);
                    }
                    add_strain_rate(row, j, i, -m / varrho);
                    for (size_t jj = 0; jj < modes.size(); ++jj) {
                        const int zr = bld.row(s.z[jj], j);
                        bld.add_id(zr, s.p, j, modes[jj].b);
                        bld.add_id(zr, s.z[jj], j, -modes[jj].b);
                    }
                    break;
                }
                case ThermalLawKind::TzouDPL: {
                    // State (theta, q, r) with the composite flux rate
                    // r = q_t + kappa*theta_x, kappa = 2*w*tau_theta/tau_q^2,
                    // which makes every equation local in the state.
                    const double tq = law.tau_q;
                    const double kappa = 2.0 * w * law.tau_theta / (tq * tq);
                    const double sigma = 1.0 - 2.0 * law.tau_theta / tq;
                    int row = bld.row(s.theta, j);
                    bld.add_pair_d1(row, s.q, j, -gamma / varrho, -1);
                    add_strain_rate(row, j, i, -m / varrho);
                    row = bld.row(s.q, j);
                    bld.add_id(row, s.r, j, 1.0);
                    bld.add_pair_d1(row, s.theta, j, -kappa, +1);
                    row = bld.row(s.r, j);
                    bld.add_id(row, s.q, j, -2.0 / (tq * tq));
                    bld.add_id(row, s.r, j, -2.0 / tq);
                    bld.add_pair_d1(row, s.theta, j, -2.0 * w * sigma / (tq * tq), +1);
                    break;
                }
            }
        }
    }

    SemiDiscreteSystem sys;
    sys.spec = spec;
    sys.grid = grid;
    sys.bc = bc;
    sys.slots = bld.slots();
    sys.dim = bld.dim();
    bld.to_csr(sys);
    return sys;
}

} // namespace bresse
