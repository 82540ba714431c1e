#pragma once

#include <json.hpp>
#include <string>
#include <vector>

#include "bresse/integrate.hpp"
#include "bresse/model.hpp"

namespace bresse {

// One sine-mode contribution to the initial data of one field:
// amplitude * sin(mode*pi*x/L) sampled at the interior nodes.
struct InitialMode {
    std::string field;
    int mode = 1;
    double amplitude = 0;
};

// Parsed run configuration (strict schema: unknown keys rejected,
// physics has no defaults, numerics have documented defaults).
struct RunConfig {
    ModelSpec model;          // includes bc and L
    bool physical_input = false;
    PhysicalParams physical;  // retained for round-tripping
    int N = 0;                // interior nodes
    IntegratorConfig integrator;
    std::vector<InitialMode> initial;
    std::string output_dir;
    bool write_trajectory = false;
    bool write_matrix = false;
};

// Throws ValidationError (naming the key) on schema or value errors.
RunConfig parse_config(const nlohmann::json& j);
RunConfig load_config(const std::string& path);
nlohmann::json to_json(const RunConfig& cfg);

bool config_equal(const RunConfig& a, const RunConfig& b);

// Initial state assembled from the sine modes (auxiliary fields follow
// their zero-history default; the Tzou DPL composite flux-rate variable
// is initialized consistently with zero flux and zero flux rate).
Eigen::VectorXd initial_state(const SemiDiscreteSystem& sys,
                              const std::vector<InitialMode>& modes);

// Environment variable overriding the configured output directory.
inline constexpr const char* kOutputDirEnvVar = "BRESSE_OUTPUT_DIR";

} // namespace bresse
