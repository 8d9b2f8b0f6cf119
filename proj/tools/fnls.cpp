// fnls — experiment runner for the fractional NLS toolkit.
//
// Usage: fnls <spectrum|scan|simulate|normalform|exit-time> <config.json>
// Exit codes: 0 success, 1 validation error, 2 numerical abort,
//             3 exit-time study with every run censored.

#include <cstdio>
#include <exception>
#include <fstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "fnls/experiment.hpp"

namespace {

int run_from_file(const std::string& kind, const std::string& config_path) {
    std::ifstream in(config_path);
    if (!in) {
        std::fprintf(stderr, "error: cannot open config file '%s'\n", config_path.c_str());
        return fnls::kExitValidation;
    }
    nlohmann::json config;
    try {
        in >> config;
    } catch (const nlohmann::json::parse_error& e) {
        std::fprintf(stderr, "error: %s is not valid JSON: %s\n", config_path.c_str(),
                     e.what());
        return fnls::kExitValidation;
    }

    try {
        return fnls::run_experiment(kind, config);
    } catch (const fnls::ConfigError& e) {
        std::fprintf(stderr, "config error: %s\n", e.what());
        return fnls::kExitValidation;
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "config error: %s\n", e.what());
        return fnls::kExitValidation;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "numerical abort: %s\n", e.what());
        return fnls::kExitNumericalAbort;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"simulation and verification toolkit for the fractional NLS on compact domains"};
    app.set_version_flag("--version", std::string(fnls::kToolVersion));
    app.require_subcommand(1);

    const std::vector<std::string> kinds = {"spectrum", "scan", "simulate", "normalform",
                                            "exit-time"};
    const std::vector<std::string> descriptions = {
        "dump eigenvalues, frequencies and multiplicities as CSV",
        "scan s for small divisors; refine bad intervals; determinant bound report",
        "long-time split-step run with conservation diagnostics",
        "truncated normal form with gauge and action commutation checks",
        "stability exit-time study over a list of amplitudes"};

    std::string config_path;
    for (std::size_t i = 0; i < kinds.size(); ++i) {
        CLI::App* sub = app.add_subcommand(kinds[i], descriptions[i]);
        sub->add_option("config", config_path, "JSON experiment configuration")
            ->required()
            ->check(CLI::ExistingFile);
    }

    CLI11_PARSE(app, argc, argv);
    return run_from_file(app.get_subcommands().front()->get_name(), config_path);
}
