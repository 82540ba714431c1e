#pragma once

#include <json.hpp>
#include <string>

#include "bresse/energy.hpp"
#include "bresse/model.hpp"
#include "bresse/spectrum.hpp"
#include "bresse/system.hpp"

namespace bresse {

// Fixed 17-significant-digit decimal formatting for bit-stable diffs.
std::string format_double(double v);

// energy.csv header:
// t,E_total,E_mech,E_therm1,E_therm2,E_therm3,E_flux1,E_flux2,E_flux3,E_mem,D,residual
void write_energy_csv(const std::string& path, const EnergyReport& report);

// spectrum.csv header: re,im
void write_spectrum_csv(const std::string& path, const SpectrumReport& report);

// trajectory.csv: t plus one column per state entry, named field[j].
void write_trajectory_csv(const std::string& path, const SemiDiscreteSystem& sys,
                          const Trajectory& traj);

// matrix.csv: row,col,value triplets of A.
void write_matrix_csv(const std::string& path, const SemiDiscreteSystem& sys);

// JSON shape of a ModelDescription (fields, terms, classification).
nlohmann::json description_json(const ModelDescription& desc);

} // namespace bresse
