#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>
#include <unistd.h>

#include "bresse/system.hpp"

#include "bresse/config.hpp"
#include "bresse/errors.hpp"

using namespace bresse;
using nlohmann::json;
namespace fs = std::filesystem;

namespace {

json base_config() {
    return json{
        {"model",
         {{"coupling", "SingleShear"},
          {"law", {{"kind", "Cattaneo"}, {"tau", 0.1}}},
          {"bc", "FullDirichlet"},
          {"L", 1.0},
          {"reduced",
           {{"rho1", 1.0},
            {"rho2", 1.3},
            {"k", 1.7},
            {"k0", 1.3},
            {"b", 1.1},
            {"ell", 0.8},
            {"m", {1.2, 1.2, 2.0}},
            {"gamma", {0.4, 0.3, 0.1}},
            {"varrho", {1.1, 0.9, 1.0}}}}}},
        {"grid", {{"N", 8}}},
        {"integrator", {{"dt", 0.01}, {"T", 0.1}}},
        {"initial",
         json::array({{{"field", "phi"}, {"mode", 1}, {"amplitude", 1.0}}})},
        {"output", {{"dir", "out"}}}};
}

struct TempDir {
    fs::path path;
    explicit TempDir(const std::string& tag) {
        path = fs::temp_directory_path() /
               ("bresse_test_" + tag + "_" + std::to_string(::getpid()));
        fs::remove_all(path);
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
};

fs::path write_file(const fs::path& dir, const std::string& name,
                    const std::string& content) {
    const fs::path p = dir / name;
    std::ofstream out(p);
    out << content;
    return p;
}

int run_cli(const std::string& args) {
    const std::string cmd = std::string(BRESSE_CLI_PATH) + " " + args +
                            " > /dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

} // namespace

TEST_CASE("config round-trip: parse -> serialize -> parse is stable") {
    const auto a = parse_config(base_config());
    const auto b = parse_config(to_json(a));
    CHECK(config_equal(a, b));

    // Representative variants keep round-tripping.
    auto j = base_config();
    j["model"]["coupling"] = "Full";
    j["model"]["law"] = {{"kind", "TypeIIIMemory"},
                         {"beta", 0.8},
                         {"varpi", 0.6},
                         {"kernel", json::array({{{"a", 4.0}, {"b", 4.0}},
                                                 {{"a", 6.0}, {"b", 12.0}}})}};
    j["integrator"]["scheme"] = "backward-euler";
    j["integrator"]["stride"] = 5;
    const auto c = parse_config(j);
    CHECK(config_equal(c, parse_config(to_json(c))));
    CHECK_FALSE(config_equal(a, c));
}

TEST_CASE("unknown keys are rejected with the full key path") {
    auto j = base_config();
    j["grid"]["spacing"] = 0.1;
    CHECK_THROWS_WITH_AS(parse_config(j), "unknown key \"grid.spacing\"",
                         ValidationError);

    j = base_config();
    j["model"]["law"]["tau_q"] = 0.1; // not a Cattaneo parameter
    CHECK_THROWS_WITH_AS(parse_config(j), "unknown key \"model.law.tau_q\"",
                         ValidationError);

    j = base_config();
    j["typo"] = 1;
    CHECK_THROWS_WITH_AS(parse_config(j), "unknown key \"typo\"",
                         ValidationError);
}

TEST_CASE("exactly one of physical/reduced") {
    auto j = base_config();
    j["model"].erase("reduced");
    CHECK_THROWS_AS(parse_config(j), ValidationError);

    j = base_config();
    j["model"]["physical"] = {{"rho", 1.0},    {"I1", 1.0},
                              {"I2", 1.0},     {"I3", 1.0},
                              {"E", 1.0},      {"kprimeG", 1.0},
                              {"alpha", 1.0},  {"delta11", 1.0},
                              {"delta13", 1.0},{"c_nu", 1.0},
                              {"Theta0", 1.0}, {"R", 1.0},
                              {"L", 1.0}};
    CHECK_THROWS_WITH_AS(
        parse_config(j),
        "\"model\" must contain exactly one of \"physical\" or \"reduced\"",
        ValidationError);

    // physical alone works, but then model.L conflicts
    j["model"].erase("reduced");
    j["model"].erase("L");
    const auto cfg = parse_config(j);
    CHECK(cfg.physical_input);
    CHECK(cfg.model.L == doctest::Approx(1.0));
    j["model"]["L"] = 2.0;
    CHECK_THROWS_WITH_AS(parse_config(j),
                         "\"model.L\" conflicts with \"model.physical.L\"",
                         ValidationError);
}

TEST_CASE("invalid law parameters name the field") {
    auto j = base_config();
    j["model"]["law"]["tau"] = -1.0;
    try {
        parse_config(j);
        FAIL("expected ValidationError");
    } catch (const ValidationError& err) {
        CHECK(std::string(err.what()).find("tau") != std::string::npos);
    }
}

TEST_CASE("initial_state samples sine modes on the interior grid") {
    const auto cfg = parse_config(base_config());
    auto desc = assemble_model(cfg.model);
    const auto sys = discretize(desc, build_grid(cfg.model.L, cfg.N),
                                cfg.model.bc);
    const auto u = initial_state(sys, cfg.initial);
    const auto& phi = sys.slot("phi");
    for (int j = 0; j < sys.grid.N; ++j)
        CHECK(u[phi.offset + j] ==
              doctest::Approx(std::sin(M_PI * sys.grid.x[j] / sys.grid.L)));
    // Everything else starts at zero.
    double rest = 0;
    for (int i = 0; i < sys.dim; ++i)
        if (i < phi.offset || i >= phi.offset + sys.grid.N)
            rest += std::abs(u[i]);
    CHECK(rest == 0.0);

    std::vector<InitialMode> bad{{"nope", 1, 1.0}};
    CHECK_THROWS_AS(initial_state(sys, bad), ValidationError);
}

TEST_CASE("cli: simulate produces the documented artifacts") {
    TempDir tmp("simulate");
    auto j = base_config();
    j["model"]["coupling"] = "Elastic";
    j["model"].erase("law");
    j["integrator"]["T"] = 0.5;
    j["output"]["dir"] = (tmp.path / "run").string();
    const auto cfgp = write_file(tmp.path, "cfg.json", j.dump(2));
    REQUIRE(run_cli("simulate " + cfgp.string()) == 0);

    const auto energy = slurp(tmp.path / "run" / "energy.csv");
    CHECK(energy.rfind("t,E_total,E_mech,E_therm1,E_therm2,E_therm3,"
                       "E_flux1,E_flux2,E_flux3,E_mem,D,residual\n",
                       0) == 0);
    const auto summary = slurp(tmp.path / "run" / "summary.txt");
    CHECK(summary.find("chi1") != std::string::npos);
    CHECK(summary.find("energy_ratio") != std::string::npos);

    // Elastic: E column constant to relative 1e-10.
    std::istringstream lines(energy);
    std::string line;
    std::getline(lines, line); // header
    double e0 = -1;
    while (std::getline(lines, line)) {
        const auto c1 = line.find(',');
        const auto c2 = line.find(',', c1 + 1);
        const double e = std::stod(line.substr(c1 + 1, c2 - c1 - 1));
        if (e0 < 0) e0 = e;
        CHECK(std::abs(e - e0) <= 1e-10 * e0);
    }
    CHECK(e0 > 0);
}

TEST_CASE("cli: deterministic byte-identical outputs") {
    TempDir tmp("deterministic");
    for (const char* run : {"a", "b"}) {
        auto j = base_config();
        j["output"]["dir"] = (tmp.path / run).string();
        const auto cfgp = write_file(tmp.path, std::string("cfg_") + run +
                                     ".json", j.dump(2));
        REQUIRE(run_cli("simulate " + cfgp.string()) == 0);
    }
    CHECK(slurp(tmp.path / "a" / "energy.csv") ==
          slurp(tmp.path / "b" / "energy.csv"));
}

TEST_CASE("cli: zero initial data gives an all-zero energy column") {
    TempDir tmp("zeroinit");
    auto j = base_config();
    j["initial"] = json::array();
    j["output"]["dir"] = (tmp.path / "run").string();
    const auto cfgp = write_file(tmp.path, "cfg.json", j.dump(2));
    REQUIRE(run_cli("simulate " + cfgp.string()) == 0);
    std::istringstream lines(slurp(tmp.path / "run" / "energy.csv"));
    std::string line;
    std::getline(lines, line);
    int rows = 0;
    while (std::getline(lines, line)) {
        const auto c1 = line.find(',');
        const auto c2 = line.find(',', c1 + 1);
        CHECK(line.substr(c1 + 1, c2 - c1 - 1) == "0");
        ++rows;
    }
    CHECK(rows > 0);
}

TEST_CASE("cli: exit code 2 for config errors") {
    TempDir tmp("exit2");

    auto j = base_config();
    j["model"]["law"]["tau"] = -1.0;
    const auto bad_tau = write_file(tmp.path, "bad_tau.json", j.dump());
    CHECK(run_cli("simulate " + bad_tau.string()) == 2);

    const auto malformed = write_file(tmp.path, "malformed.json", "{nope");
    CHECK(run_cli("simulate " + malformed.string()) == 2);
    CHECK(run_cli("spectrum " + malformed.string()) == 2);

    CHECK(run_cli("verify bogus") == 2);
}

TEST_CASE("cli: exit code 3 for numerical errors (dense cap)") {
    TempDir tmp("exit3");
    auto j = base_config();
    j["model"]["coupling"] = "Full";
    j["grid"]["N"] = 512; // D = (6 + 3*2) * 512 > 4000 dense cap
    j["output"]["dir"] = (tmp.path / "run").string();
    const auto cfgp = write_file(tmp.path, "cfg.json", j.dump());
    CHECK(run_cli("spectrum " + cfgp.string()) == 3);
}

TEST_CASE("cli: spectrum and catalog outputs") {
    TempDir tmp("spectrum");
    auto j = base_config();
    j["output"]["dir"] = (tmp.path / "run").string();
    const auto cfgp = write_file(tmp.path, "cfg.json", j.dump());
    REQUIRE(run_cli("spectrum " + cfgp.string()) == 0);
    const auto csv = slurp(tmp.path / "run" / "spectrum.csv");
    CHECK(csv.rfind("re,im\n", 0) == 0);
    const auto summary = slurp(tmp.path / "run" / "summary.txt");
    CHECK(summary.find("abscissa") != std::string::npos);

    const std::string cmd = std::string(BRESSE_CLI_PATH) + " catalog > " +
                            (tmp.path / "catalog.txt").string() + " 2>&1";
    REQUIRE(std::system(cmd.c_str()) == 0);
    const auto catalog = slurp(tmp.path / "catalog.txt");
    CHECK(catalog.find("57 catalog entries") != std::string::npos);
    CHECK(catalog.find("(Full, Fourier)") != std::string::npos);
    CHECK(catalog.find("(SingleBending, TypeIIIMemory)") != std::string::npos);
    CHECK(catalog.find("(Elastic)") != std::string::npos);
}
