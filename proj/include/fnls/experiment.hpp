// experiment.hpp — configuration-driven experiment runners: spectrum dumps,
// nonresonance scans, long-time simulations, normal-form runs and the
// stability exit-time study. One JSON document per experiment; every run
// writes a manifest echoing the resolved configuration and the tool version,
// so each output file is reproducible from its manifest alone.

#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "fnls/galerkin.hpp"
#include "fnls/integrator.hpp"
#include "fnls/normalform.hpp"
#include "fnls/resonance.hpp"

namespace fnls {

inline constexpr const char* kToolVersion = "fnls 0.1.0";

// Exit codes shared by the runners and the CLI.
inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 1;
inline constexpr int kExitNumericalAbort = 2;
inline constexpr int kExitAllCensored = 3;

// Configuration or schema violation; maps to exit code 1.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct LinearFit {
    double slope{0.0};
    double intercept{0.0};
    double slope_se{0.0};  // NaN when fewer than 3 points
    std::size_t n{0};
};

// Ordinary least squares of y against x.
LinearFit linear_fit(std::span<const double> x, std::span<const double> y);

// ---------------------------------------------------------------------------
// exit-time study (callable directly, without files, for tests)

struct ExitTimeConfig {
    double s{0.75};
    NonlinearitySpec f;
    int n_modes{16};
    double r{4.0};
    std::vector<double> eps_list;  // strictly decreasing
    std::vector<std::uint64_t> seeds{1, 2, 3};
    double dt{0.05};
    double t_max{1e5};
    int observer_stride{20};
    bool resonant_probe{false};  // skip the nonresonance certification
    ScanConfig certify;          // used when resonant_probe is false

    void validate() const;
};

struct ExitTimeRecord {
    double eps{0.0};
    std::uint64_t seed{0};
    std::optional<double> t_exit;  // nullopt: censored at t_max
    double r{0.0};
    double s{0.0};
};

struct ExitTimeStudy {
    std::vector<ExitTimeRecord> records;
    std::optional<LinearFit> fit;  // log T_exit vs log(1/ε), uncensored rows only
    bool all_censored() const;
};

ExitTimeStudy run_exit_time_study(const ExitTimeConfig& cfg);

// ---------------------------------------------------------------------------
// JSON-driven runners; each writes its outputs plus manifest.json under the
// config's output_dir and returns an exit code. ConfigError propagates.

int run_spectrum_experiment(const nlohmann::json& config);
int run_scan_experiment(const nlohmann::json& config);
int run_simulation_experiment(const nlohmann::json& config);
int run_normalform_experiment(const nlohmann::json& config);
int run_exit_time_experiment(const nlohmann::json& config);

// Dispatch on kind ("spectrum", "scan", "simulate", "normalform",
// "exit-time"); the config's "experiment" field must agree.
int run_experiment(const std::string& kind, const nlohmann::json& config);

// ---------------------------------------------------------------------------
// deterministic serialization helpers (shared with the test suites)

std::string format_double(double v);  // shortest round-trip decimal
void write_text_file(const std::filesystem::path& path, const std::string& content);
std::string trajectory_csv(const Trajectory& traj, double eps_initial);
nlohmann::json poly_to_json(const PolyHamiltonian& poly);
PolyHamiltonian poly_from_json(const nlohmann::json& j);

// state snapshot {N, time, xi: [[re, im], ...]} ordered k = -N..N
nlohmann::json state_to_json(const ModeState& state);
ModeState state_from_json(const nlohmann::json& j);

}  // namespace fnls
