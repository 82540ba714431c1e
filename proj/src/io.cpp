#include "bresse/io.hpp"

#include <cstdio>
#include <fstream>

#include "bresse/errors.hpp"

namespace bresse {

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

namespace {

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw ValidationError("cannot open output file: " + path);
    return out;
}

} // namespace

void write_energy_csv(const std::string& path, const EnergyReport& report) {
    std::ofstream out = open_out(path);
    out << "t,E_total,E_mech,E_therm1,E_therm2,E_therm3,"
           "E_flux1,E_flux2,E_flux3,E_mem,D,residual\n";
    for (size_t n = 0; n < report.times.size(); ++n) {
        const auto& e = report.energies[n];
        const double resid = n == 0 ? 0.0 : report.residuals[n - 1];
        out << format_double(report.times[n]) << ','
            << format_double(e.total) << ',' << format_double(e.mech) << ','
            << format_double(e.therm[0]) << ',' << format_double(e.therm[1])
            << ',' << format_double(e.therm[2]) << ','
            << format_double(e.flux[0]) << ',' << format_double(e.flux[1])
            << ',' << format_double(e.flux[2]) << ',' << format_double(e.mem)
            << ',' << format_double(report.dissipations[n]) << ','
            << format_double(resid) << '\n';
    }
}

void write_spectrum_csv(const std::string& path, const SpectrumReport& report) {
    std::ofstream out = open_out(path);
    out << "re,im\n";
    for (const auto& lambda : report.eigenvalues)
        out << format_double(lambda.real()) << ','
            << format_double(lambda.imag()) << '\n';
}

void write_trajectory_csv(const std::string& path,
                          const SemiDiscreteSystem& sys,
                          const Trajectory& traj) {
    std::ofstream out = open_out(path);
    out << 't';
    for (const auto& slot : sys.slots)
        for (int j = 0; j < sys.grid.N; ++j)
            out << ',' << slot.name << '[' << j << ']';
    out << '\n';
    for (size_t n = 0; n < traj.times.size(); ++n) {
        out << format_double(traj.times[n]);
        for (int i = 0; i < sys.dim; ++i)
            out << ',' << format_double(traj.states[n][i]);
        out << '\n';
    }
}

void write_matrix_csv(const std::string& path, const SemiDiscreteSystem& sys) {
    std::ofstream out = open_out(path);
    out << "row,col,value\n";
    for (int r = 0; r < sys.dim; ++r)
        for (int p = sys.row_ptr[r]; p < sys.row_ptr[r + 1]; ++p)
            out << r << ',' << sys.col_idx[p] << ','
                << format_double(sys.vals[p]) << '\n';
}

nlohmann::json description_json(const ModelDescription& desc) {
    nlohmann::json j;
    j["name"] = desc.spec.name();
    j["memory_expanded"] = desc.memory_expanded;
    j["fields"] = nlohmann::json::array();
    for (const auto& f : desc.fields)
        j["fields"].push_back({{"name", f.name},
                               {"role", f.role},
                               {"time_order", f.time_order},
                               {"channel", f.channel}});
    j["classification"] = desc.channel_classification;
    j["equations"] = nlohmann::json::array();
    for (const auto& eq : desc.equations) {
        nlohmann::json je;
        je["label"] = eq.label;
        je["terms"] = nlohmann::json::array();
        for (const auto& t : eq.terms) {
            nlohmann::json jt = {{"value", t.value},
                                 {"symbol", t.symbol},
                                 {"field", t.field},
                                 {"dt", t.dt},
                                 {"dx", t.dx}};
            if (t.conv_channel > 0) jt["conv_channel"] = t.conv_channel;
            je["terms"].push_back(jt);
        }
        j["equations"].push_back(je);
    }
    return j;
}

} // namespace bresse
