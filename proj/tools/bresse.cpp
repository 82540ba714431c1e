#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "bresse/catalog.hpp"
#include "bresse/config.hpp"
#include "bresse/decay.hpp"
#include "bresse/defaults.hpp"
#include "bresse/energy.hpp"
#include "bresse/errors.hpp"
#include "bresse/io.hpp"
#include "bresse/spectrum.hpp"
#include "bresse/system.hpp"
#include "bresse/verify.hpp"

namespace {

using namespace bresse;

std::filesystem::path resolve_output_dir(const RunConfig& cfg) {
    const char* env = std::getenv(kOutputDirEnvVar);
    const std::filesystem::path dir =
        env && *env ? std::filesystem::path(env)
                    : std::filesystem::path(cfg.output_dir);
    std::filesystem::create_directories(dir);
    return dir;
}

SemiDiscreteSystem build_system(const RunConfig& cfg) {
    ModelDescription desc = assemble_model(cfg.model);
    if (cfg.model.coupling != CouplingPattern::Elastic &&
        cfg.model.law.uses_kernel())
        desc = expand_memory(desc);
    return discretize(desc, build_grid(cfg.model.L, cfg.N), cfg.model.bc);
}

int run_simulate(const std::string& path) {
    const RunConfig cfg = load_config(path);
    const std::filesystem::path dir = resolve_output_dir(cfg);
    const SemiDiscreteSystem sys = build_system(cfg);
    const Eigen::VectorXd u0 = initial_state(sys, cfg.initial);
    const Trajectory traj = integrate(sys, u0, cfg.integrator);
    const EnergyReport rep = energy_report(sys, traj);
    write_energy_csv((dir / "energy.csv").string(), rep);
    if (cfg.write_trajectory)
        write_trajectory_csv((dir / "trajectory.csv").string(), sys, traj);
    if (cfg.write_matrix)
        write_matrix_csv((dir / "matrix.csv").string(), sys);

    const StabilityNumbers stab = stability_number(cfg.model.coeffs);
    const double e0 = rep.energies.front().total;
    const double eT = rep.energies.back().total;
    std::vector<double> totals;
    for (const auto& e : rep.energies) totals.push_back(e.total);
    DecayFit fit;
    try {
        fit = fit_decay(rep.times, totals);
    } catch (const ValidationError&) {
        // short or nonpositive series: no decay classification
    }
    double max_resid = 0;
    for (double r : rep.residuals) max_resid = std::max(max_resid, std::abs(r));

    std::ofstream sum(dir / "summary.txt");
    sum << "model: " << cfg.model.name() << "\n"
        << "dimension: " << sys.dim << "\n"
        << "chi1: " << format_double(stab.chi1) << "\n"
        << "chi2: " << format_double(stab.chi2) << "\n"
        << "E0: " << format_double(e0) << "\n"
        << "E_final: " << format_double(eT) << "\n"
        << "energy_ratio: " << format_double(e0 > 0 ? eT / e0 : 1.0) << "\n"
        << "max_energy_residual: " << format_double(max_resid) << "\n"
        << "decay_type: " << fit.type << "\n"
        << "decay_rate: " << format_double(fit.rate) << "\n";
    std::cout << "wrote " << (dir / "energy.csv").string() << "\n";
    return 0;
}

int run_spectrum(const std::string& path) {
    const RunConfig cfg = load_config(path);
    const std::filesystem::path dir = resolve_output_dir(cfg);
    const SemiDiscreteSystem sys = build_system(cfg);
    const SpectrumReport rep = spectrum(sys);
    write_spectrum_csv((dir / "spectrum.csv").string(), rep);
    const StabilityNumbers stab = stability_number(cfg.model.coeffs);
    std::ofstream sum(dir / "summary.txt");
    sum << "model: " << cfg.model.name() << "\n"
        << "dimension: " << sys.dim << "\n"
        << "eigenvalues: " << rep.eigenvalues.size() << "\n"
        << "abscissa: " << format_double(rep.abscissa) << "\n"
        << "conjugate_paired: " << (rep.conjugate_paired ? "yes" : "no") << "\n"
        << "chi1: " << format_double(stab.chi1) << "\n"
        << "chi2: " << format_double(stab.chi2) << "\n";
    std::cout << "eigenvalues: " << rep.eigenvalues.size()
              << "\nabscissa: " << format_double(rep.abscissa)
              << "\nconjugate_paired: " << (rep.conjugate_paired ? "yes" : "no")
              << "\n";
    return 0;
}

int run_verify(const std::string& suite) {
    const std::vector<CheckResult> checks = verify_suite(suite);
    int failed = 0;
    for (const auto& c : checks) {
        std::cout << (c.pass ? "PASS" : "FAIL") << "  " << c.name << ": "
                  << c.detail << "\n";
        if (!c.pass) ++failed;
    }
    std::cout << checks.size() - failed << "/" << checks.size()
              << " checks passed\n";
    return failed == 0 ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Thermoelastic curved-beam simulation and spectral analysis"};
    app.require_subcommand(1);

    std::string sim_config, spec_config, suite;
    CLI::App* sim = app.add_subcommand("simulate", "Integrate a configured model");
    sim->add_option("config", sim_config, "JSON configuration file")->required();
    CLI::App* spc = app.add_subcommand("spectrum", "Eigenvalues of the generator");
    spc->add_option("config", spec_config, "JSON configuration file")->required();
    app.add_subcommand("catalog", "List the model catalog");
    CLI::App* ver = app.add_subcommand("verify", "Run a verification suite");
    ver->add_option("suite", suite, "energy | limits | spectrum | all")->required();

    try {
        app.parse(argc, argv);
        if (app.got_subcommand("simulate")) return run_simulate(sim_config);
        if (app.got_subcommand("spectrum")) return run_spectrum(spec_config);
        if (app.got_subcommand("catalog")) {
            std::cout << bresse::catalog_text();
            return 0;
        }
        return run_verify(suite);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const bresse::ValidationError& e) {
        std::cerr << "configuration error: " << e.what() << "\n";
        return 2;
    } catch (const bresse::NumericError& e) {
        std::cerr << "numerical error: " << e.what() << "\n";
        return 3;
    }
}
