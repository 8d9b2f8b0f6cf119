#include "fnls/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <set>
#include <sstream>

namespace fnls {

namespace {

using nlohmann::json;

// Strict object reader: every key must be consumed, unknown keys are errors.
class ConfigReader {
public:
    ConfigReader(const json& obj, std::string context)
        : obj_(obj), context_(std::move(context)) {
        if (!obj.is_object()) throw ConfigError(context_ + ": expected a JSON object");
    }

    bool has(const std::string& key) const { return obj_.contains(key); }

    const json& required(const std::string& key) {
        if (!obj_.contains(key))
            throw ConfigError(context_ + ": missing required key '" + key + "'");
        seen_.insert(key);
        return obj_.at(key);
    }

    const json* optional(const std::string& key) {
        if (!obj_.contains(key)) return nullptr;
        seen_.insert(key);
        return &obj_.at(key);
    }

    double number(const std::string& key) { return as_number(required(key), key); }
    double number_or(const std::string& key, double fallback) {
        const json* j = optional(key);
        return j ? as_number(*j, key) : fallback;
    }

    int integer(const std::string& key) { return as_integer(required(key), key); }
    int integer_or(const std::string& key, int fallback) {
        const json* j = optional(key);
        return j ? as_integer(*j, key) : fallback;
    }

    std::string string(const std::string& key) {
        const json& j = required(key);
        if (!j.is_string()) throw ConfigError(context_ + ": '" + key + "' must be a string");
        return j.get<std::string>();
    }
    std::string string_or(const std::string& key, const std::string& fallback) {
        const json* j = optional(key);
        if (!j) return fallback;
        if (!j->is_string()) throw ConfigError(context_ + ": '" + key + "' must be a string");
        return j->get<std::string>();
    }

    bool boolean_or(const std::string& key, bool fallback) {
        const json* j = optional(key);
        if (!j) return fallback;
        if (!j->is_boolean()) throw ConfigError(context_ + ": '" + key + "' must be a boolean");
        return j->get<bool>();
    }

    std::vector<double> number_array(const std::string& key) {
        const json& j = required(key);
        if (!j.is_array()) throw ConfigError(context_ + ": '" + key + "' must be an array");
        std::vector<double> out;
        for (const auto& v : j) out.push_back(as_number(v, key));
        return out;
    }

    // throws if any key of the object was never consumed
    void finish() const {
        for (const auto& [key, value] : obj_.items())
            if (!seen_.contains(key))
                throw ConfigError(context_ + ": unknown key '" + key + "'");
    }

private:
    double as_number(const json& j, const std::string& key) const {
        if (!j.is_number()) throw ConfigError(context_ + ": '" + key + "' must be a number");
        return j.get<double>();
    }
    int as_integer(const json& j, const std::string& key) const {
        if (!j.is_number_integer())
            throw ConfigError(context_ + ": '" + key + "' must be an integer");
        return j.get<int>();
    }

    const json& obj_;
    std::string context_;
    std::set<std::string> seen_;
};

Domain parse_domain(ConfigReader& reader) {
    const std::string kind = reader.string("domain");
    const int d = reader.integer("d");
    if (kind == "sphere") return sphere(d);
    if (kind == "torus") return torus(d);
    throw ConfigError("domain must be 'sphere' or 'torus'");
}

std::filesystem::path prepare_output_dir(ConfigReader& reader) {
    const std::filesystem::path dir = reader.string("output_dir");
    std::filesystem::create_directories(dir);
    return dir;
}

void require_kind(ConfigReader& reader, const std::string& kind) {
    const std::string declared = reader.string("experiment");
    if (declared != kind)
        throw ConfigError("config declares experiment '" + declared + "' but '" + kind +
                          "' was requested");
}

NonlinearitySpec parse_nonlinearity(ConfigReader& reader) {
    NonlinearitySpec f;
    f.taylor = reader.number_array("f_taylor");
    return f;
}

void write_manifest(const std::filesystem::path& dir, const json& resolved) {
    json manifest;
    manifest["tool_version"] = kToolVersion;
    manifest["config"] = resolved;
    write_text_file(dir / "manifest.json", manifest.dump(2) + "\n");
}

json multi_index_json(const MultiIndex& m) {
    json out = json::object();
    for (const auto& [index, value] : m) out[std::to_string(index)] = value;
    return out;
}

}  // namespace

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void write_text_file(const std::filesystem::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
    out << content;
    if (!out) throw std::runtime_error("write failed: " + path.string());
}

LinearFit linear_fit(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size() || x.size() < 2)
        throw std::invalid_argument("linear_fit: need two or more paired samples");
    const double n = static_cast<double>(x.size());
    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        mx += x[i];
        my += y[i];
    }
    mx /= n;
    my /= n;
    double sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sxx += (x[i] - mx) * (x[i] - mx);
        sxy += (x[i] - mx) * (y[i] - my);
    }
    if (sxx == 0.0) throw std::invalid_argument("linear_fit: degenerate abscissae");

    LinearFit fit;
    fit.n = x.size();
    fit.slope = sxy / sxx;
    fit.intercept = my - fit.slope * mx;
    if (x.size() >= 3) {
        double ssr = 0.0;
        for (std::size_t i = 0; i < x.size(); ++i) {
            const double resid = y[i] - (fit.intercept + fit.slope * x[i]);
            ssr += resid * resid;
        }
        fit.slope_se = std::sqrt(ssr / (n - 2.0) / sxx);
    } else {
        fit.slope_se = std::numeric_limits<double>::quiet_NaN();
    }
    return fit;
}

// ---------------------------------------------------------------------------
// exit-time study

void ExitTimeConfig::validate() const {
    if (eps_list.size() < 1) throw ConfigError("exit-time: eps_list must be nonempty");
    for (std::size_t i = 0; i < eps_list.size(); ++i) {
        if (eps_list[i] <= 0.0) throw ConfigError("exit-time: eps entries must be > 0");
        if (i > 0 && eps_list[i] >= eps_list[i - 1])
            throw ConfigError("exit-time: eps_list must be strictly decreasing");
    }
    if (seeds.empty()) throw ConfigError("exit-time: seeds must be nonempty");
    if (s <= 0.5) throw ConfigError("exit-time: s must be > 1/2");
    if (dt <= 0.0 || t_max <= 0.0) throw ConfigError("exit-time: dt and T_max must be > 0");
}

ExitTimeStudy run_exit_time_study(const ExitTimeConfig& cfg) {
    cfg.validate();
    if (!cfg.resonant_probe) {
        const KnrResult knr = check_knr(cfg.s, cfg.certify, torus(1));
        if (!knr.pass)
            throw ConfigError(
                "exit-time: s = " + format_double(cfg.s) +
                " fails the nonresonance test (worst divisor " +
                format_double(knr.worst.value) + " from " + knr.worst.L.to_string() +
                "); set resonant_probe to true to study it anyway");
    }

    const GalerkinSystem sys(cfg.n_modes, cfg.s, cfg.f);
    StepPlan plan;
    plan.dt = cfg.dt;
    plan.t_end = cfg.t_max;
    plan.observer_stride = cfg.observer_stride;

    ExitTimeStudy study;
    for (double eps : cfg.eps_list) {
        for (std::uint64_t seed : cfg.seeds) {
            const ModeState psi0 = random_initial_state(cfg.n_modes, cfg.r, eps, seed);
            const auto t_exit = exit_time(sys, psi0, plan, cfg.r, 2.0 * eps);
            study.records.push_back({eps, seed, t_exit, cfg.r, cfg.s});
        }
    }

    std::vector<double> log_inv_eps, log_t;
    for (const auto& rec : study.records) {
        if (!rec.t_exit) continue;  // censored rows never enter the fit
        log_inv_eps.push_back(std::log(1.0 / rec.eps));
        log_t.push_back(std::log(*rec.t_exit));
    }
    if (log_t.size() >= 2) study.fit = linear_fit(log_inv_eps, log_t);
    return study;
}

bool ExitTimeStudy::all_censored() const {
    return std::none_of(records.begin(), records.end(),
                        [](const ExitTimeRecord& r) { return r.t_exit.has_value(); });
}

// ---------------------------------------------------------------------------
// serialization

std::string trajectory_csv(const Trajectory& traj, double eps_initial) {
    std::ostringstream out;
    const std::size_t n_actions =
        traj.samples.empty() ? 0 : traj.samples.front().actions.size();
    out << "t,gamma,H,sobolev_r";
    for (std::size_t j = 0; j < n_actions; ++j) out << ",I_" << j;
    out << ",exceeded_2eps\n";
    for (const auto& s : traj.samples) {
        out << format_double(s.t) << ',' << format_double(s.gamma) << ','
            << format_double(s.h_total) << ',' << format_double(s.sobolev_r);
        for (double a : s.actions) out << ',' << format_double(a);
        out << ',' << (s.sobolev_r >= 2.0 * eps_initial ? 1 : 0) << '\n';
    }
    return out.str();
}

nlohmann::json poly_to_json(const PolyHamiltonian& poly) {
    json out = json::array();
    for (const auto& [key, coeff] : poly.terms()) {
        json term;
        term["J"] = multi_index_json(key.J);
        term["L"] = multi_index_json(key.L);
        term["re"] = coeff.real();
        term["im"] = coeff.imag();
        out.push_back(term);
    }
    return out;
}

PolyHamiltonian poly_from_json(const nlohmann::json& j) {
    PolyHamiltonian poly;
    for (const auto& term : j) {
        MultiIndex J, L;
        for (const auto& [mode, exp] : term.at("J").items()) J.set(std::stoi(mode), exp);
        for (const auto& [mode, exp] : term.at("L").items()) L.set(std::stoi(mode), exp);
        poly.add(J, L, Complex{term.at("re").get<double>(), term.at("im").get<double>()});
    }
    return poly;
}

nlohmann::json state_to_json(const ModeState& state) {
    json out;
    out["N"] = state.N;
    out["time"] = state.time;
    json xi = json::array();
    for (int k = -state.N; k <= state.N; ++k)
        xi.push_back({state.mode(k).real(), state.mode(k).imag()});
    out["xi"] = xi;
    return out;
}

ModeState state_from_json(const nlohmann::json& j) {
    ModeState state(j.at("N").get<int>());
    state.time = j.at("time").get<double>();
    const auto& xi = j.at("xi");
    if (static_cast<int>(xi.size()) != state.size())
        throw ConfigError("state snapshot: xi length does not match N");
    for (int i = 0; i < state.size(); ++i)
        state.xi[static_cast<std::size_t>(i)] =
            Complex{xi[i][0].get<double>(), xi[i][1].get<double>()};
    return state;
}

// ---------------------------------------------------------------------------
// runners

int run_spectrum_experiment(const json& config) {
    ConfigReader reader(config, "spectrum config");
    require_kind(reader, "spectrum");
    const Domain domain = parse_domain(reader);
    const double s = reader.number("s");
    const int cutoff = reader.integer("cutoff");
    const auto dir = prepare_output_dir(reader);
    reader.finish();
    if (s <= 0.5) throw ConfigError("spectrum: s must be > 1/2");
    if (cutoff < 0) throw ConfigError("spectrum: cutoff must be >= 0");

    const FrequencyTable table(domain, s, cutoff);
    std::ostringstream csv;
    csv << "j,lambda,omega,multiplicity,d_omega_ds\n";
    for (const auto& entry : table.entries()) {
        // ω_0 is identically zero, so its s-derivative is zero as well
        const double d_omega =
            entry.level == 0 ? 0.0 : frequency_derivative(domain, entry.level, s, 1);
        csv << entry.level << ',' << format_double(entry.lambda) << ','
            << format_double(entry.omega) << ',' << multiplicity(domain, entry.level)
            << ',' << format_double(d_omega) << '\n';
    }
    write_text_file(dir / "spectrum.csv", csv.str());

    json resolved = config;
    write_manifest(dir, resolved);
    return kExitOk;
}

int run_scan_experiment(const json& config) {
    ConfigReader reader(config, "scan config");
    require_kind(reader, "scan");
    const Domain domain = parse_domain(reader);

    ScanConfig scan;
    scan.K = reader.integer("K");
    scan.N = reader.integer("N");
    scan.j_max = reader.integer("J_max");
    scan.gamma = reader.number_or("gamma", 1e-4);
    scan.alpha = reader.number_or("alpha", static_cast<double>(domain.dim) + 1.0);
    if (reader.has("s_grid")) {
        scan.s_grid = reader.number_array("s_grid");
    } else {
        const auto range = reader.number_array("s_range");
        if (range.size() != 2) throw ConfigError("scan: s_range must be [lo, hi]");
        const double step = reader.number("s_step");
        if (step <= 0.0) throw ConfigError("scan: s_step must be > 0");
        for (double s = range[0]; s <= range[1] + 1e-12; s += step)
            scan.s_grid.push_back(s);
    }
    const double refine_step = reader.number_or("refine_grid_step", 1e-3);
    const auto dir = prepare_output_dir(reader);
    reader.finish();
    scan.validate();

    const auto points = scan_s(scan, domain);
    std::ostringstream csv;
    csv << "s,min_divisor,argmin_L\n";
    for (const auto& p : points)
        csv << format_double(p.s) << ',' << format_double(p.min_divisor) << ",\""
            << p.argmin.canonical_sign().to_string() << "\"\n";
    write_text_file(dir / "scan.csv", csv.str());

    // refine around the combination with the smallest divisor on the grid
    const auto global_min =
        std::min_element(points.begin(), points.end(),
                         [](const ScanPoint& a, const ScanPoint& b) {
                             return a.min_divisor < b.min_divisor;
                         });
    const BadIntervalReport refined =
        refine_bad_intervals(global_min->argmin, scan.s_grid.front(), scan.s_grid.back(),
                             scan.threshold(), domain, refine_step);

    json summary;
    summary["threshold"] = scan.threshold();
    summary["global_min"] = {{"s", global_min->s},
                             {"min_divisor", global_min->min_divisor},
                             {"L", global_min->argmin.canonical_sign().to_string()}};
    summary["bad_intervals"] = json::array();
    for (const auto& iv : refined.intervals)
        summary["bad_intervals"].push_back({{"L", iv.L.canonical_sign().to_string()},
                                            {"s_lo", iv.s_lo},
                                            {"s_hi", iv.s_hi}});
    summary["total_measure"] = refined.total_measure;
    summary["lemma_bound"] = json::array();
    for (double s : scan.s_grid) {
        const auto lemma = lemma_bound_report(scan.K, s, domain);
        summary["lemma_bound"].push_back(
            {{"s", s}, {"min_scaled", lemma.min_scaled}, {"argmin", lemma.argmin}});
    }
    write_text_file(dir / "summary.json", summary.dump(2) + "\n");

    json resolved = config;
    resolved["gamma"] = scan.gamma;
    resolved["alpha"] = scan.alpha;
    resolved["refine_grid_step"] = refine_step;
    write_manifest(dir, resolved);
    return kExitOk;
}

int run_simulation_experiment(const json& config) {
    ConfigReader reader(config, "simulate config");
    require_kind(reader, "simulate");
    const double s = reader.number("s");
    const NonlinearitySpec f = parse_nonlinearity(reader);
    const int n_modes = reader.integer("N");
    const double r = reader.number("r");
    const double eps = reader.number("eps");
    const auto seed = static_cast<std::uint64_t>(reader.integer_or("seed", 1));
    StepPlan plan;
    plan.dt = reader.number("dt");
    plan.t_end = reader.number("T_end");
    plan.observer_stride = reader.integer_or("observer_stride", 1);
    const std::string scheme = reader.string_or("scheme", "strang");
    if (scheme == "strang")
        plan.scheme = SplitScheme::Strang;
    else if (scheme == "lie")
        plan.scheme = SplitScheme::Lie;
    else
        throw ConfigError("simulate: scheme must be 'strang' or 'lie'");
    const json* compare = reader.optional("compare_s");
    const double compare_s = compare ? compare->get<double>() : 0.0;
    const auto dir = prepare_output_dir(reader);
    reader.finish();
    if (s <= 0.5) throw ConfigError("simulate: s must be > 1/2");
    try {
        plan.validate();
    } catch (const std::invalid_argument& e) {
        throw ConfigError(std::string("simulate: ") + e.what());
    }

    const auto run_one = [&](double s_run, const std::string& suffix) {
        const GalerkinSystem sys(n_modes, s_run, f);
        const ModeState psi0 = random_initial_state(n_modes, r, eps, seed);
        const double eps0 = sobolev_norm(psi0, r);
        const Trajectory traj = evolve(sys, psi0, plan, r);
        write_text_file(dir / ("trajectory" + suffix + ".csv"), trajectory_csv(traj, eps0));
        write_text_file(dir / ("final_state" + suffix + ".json"),
                        state_to_json(traj.final_state).dump(2) + "\n");
        return traj.abort_reason;
    };

    const auto abort_reason = run_one(s, "");
    std::optional<std::string> compare_abort;
    if (compare) compare_abort = run_one(compare_s, "_compare");

    json resolved = config;
    resolved["seed"] = seed;
    resolved["observer_stride"] = plan.observer_stride;
    resolved["scheme"] = scheme;
    if (abort_reason) resolved["abort_reason"] = *abort_reason;
    if (compare_abort) resolved["compare_abort_reason"] = *compare_abort;
    write_manifest(dir, resolved);
    return (abort_reason || compare_abort) ? kExitNumericalAbort : kExitOk;
}

int run_normalform_experiment(const json& config) {
    ConfigReader reader(config, "normalform config");
    require_kind(reader, "normalform");
    const double s = reader.number("s");
    const NonlinearitySpec f = parse_nonlinearity(reader);
    const int n_modes = reader.integer("N");
    const int K = reader.integer("K");
    const double threshold = reader.number_or("threshold", 1e-10);
    const int window = reader.integer_or("remainder_window", 2);
    const auto dir = prepare_output_dir(reader);
    reader.finish();
    if (s <= 0.5) throw ConfigError("normalform: s must be > 1/2");
    if (K < 1) throw ConfigError("normalform: K must be >= 1");

    const FrequencyTable freqs(torus(1), s, n_modes);
    const PolyHamiltonian hp = expand_hp(f, n_modes, K + 2 + window);
    if (hp.empty() && !f.is_zero())
        std::fprintf(stderr, "warning: nonlinearity produced no terms at this order\n");

    NormalFormResult nf;
    try {
        nf = birkhoff_normal_form(freqs, hp, K, threshold, window);
    } catch (const std::runtime_error& e) {
        std::fprintf(stderr, "%s\n", e.what());
        return kExitNumericalAbort;
    }

    json output;
    output["Z"] = poly_to_json(nf.Z);
    output["generators"] = json::array();
    for (const auto& chi : nf.generators) output["generators"].push_back(poly_to_json(chi));
    output["remainder"] = poly_to_json(nf.remainder);
    output["residuals"] = nf.residuals;
    write_text_file(dir / "normalform.json", output.dump(2) + "\n");

    json verification;
    const auto gauge = verify_gauge_rule(nf.Z);
    verification["gauge"] = {{"pass", gauge.pass()},
                             {"violation_count", gauge.violations.size()}};
    const auto balance = verify_level_balance(nf.Z);
    verification["level_balance"] = {{"pass", balance.pass()},
                                     {"violation_count", balance.violations.size()}};
    verification["action_commutation"] = json::array();
    bool all_commute = true;
    for (int j = 0; j <= n_modes; ++j) {
        const auto report = verify_action_commutation(nf.Z, j, freqs);
        all_commute = all_commute && report.pass();
        verification["action_commutation"].push_back(
            {{"level", j}, {"pass", report.pass()}, {"max_abs", report.max_abs}});
    }
    write_text_file(dir / "verification.json", verification.dump(2) + "\n");

    std::printf("Z: %zu terms (degrees %d..%d), remainder: %zu terms\n", nf.Z.size(),
                nf.Z.empty() ? 0 : nf.Z.min_degree(), nf.Z.empty() ? 0 : nf.Z.max_degree(),
                nf.remainder.size());
    std::printf("gauge rule: %s, level balance: %s, action commutation: %s\n",
                gauge.pass() ? "pass" : "FAIL", balance.pass() ? "pass" : "FAIL",
                all_commute ? "pass" : "FAIL");

    json resolved = config;
    resolved["threshold"] = threshold;
    resolved["remainder_window"] = window;
    write_manifest(dir, resolved);
    return kExitOk;
}

int run_exit_time_experiment(const json& config) {
    ConfigReader reader(config, "exit-time config");
    require_kind(reader, "exit-time");
    ExitTimeConfig cfg;
    cfg.s = reader.number("s");
    cfg.f = parse_nonlinearity(reader);
    cfg.n_modes = reader.integer("N");
    cfg.r = reader.number("r");
    cfg.eps_list = reader.number_array("eps_list");
    if (const json* seeds = reader.optional("seeds")) {
        cfg.seeds.clear();
        for (const auto& v : *seeds) cfg.seeds.push_back(v.get<std::uint64_t>());
    }
    cfg.dt = reader.number("dt");
    cfg.t_max = reader.number("T_max");
    cfg.observer_stride = reader.integer_or("observer_stride", 20);
    cfg.resonant_probe = reader.boolean_or("resonant_probe", false);
    cfg.certify.K = 3;
    cfg.certify.N = cfg.n_modes;
    cfg.certify.j_max = cfg.n_modes;
    cfg.certify.gamma = 1e-4;
    cfg.certify.alpha = 2.0;
    cfg.certify.s_grid = {cfg.s};
    if (const json* certify = reader.optional("certify")) {
        ConfigReader creader(*certify, "exit-time certify");
        cfg.certify.K = creader.integer_or("K", cfg.certify.K);
        cfg.certify.N = creader.integer_or("N", cfg.certify.N);
        cfg.certify.j_max = creader.integer_or("J_max", cfg.certify.j_max);
        cfg.certify.gamma = creader.number_or("gamma", cfg.certify.gamma);
        cfg.certify.alpha = creader.number_or("alpha", cfg.certify.alpha);
        creader.finish();
    }
    const auto dir = prepare_output_dir(reader);
    reader.finish();

    const ExitTimeStudy study = run_exit_time_study(cfg);

    std::ostringstream csv;
    csv << "eps,seed,T_exit,censored,r,s\n";
    for (const auto& rec : study.records) {
        csv << format_double(rec.eps) << ',' << rec.seed << ',';
        if (rec.t_exit) csv << format_double(*rec.t_exit);
        csv << ',' << (rec.t_exit ? 0 : 1) << ',' << format_double(rec.r) << ','
            << format_double(rec.s) << '\n';
    }
    write_text_file(dir / "exit_times.csv", csv.str());

    json fit;
    fit["n_uncensored"] = study.records.size() - static_cast<std::size_t>(std::count_if(
                              study.records.begin(), study.records.end(),
                              [](const ExitTimeRecord& r) { return !r.t_exit; }));
    fit["all_censored"] = study.all_censored();
    fit["time_resolution"] = cfg.dt * cfg.observer_stride;
    if (study.fit) {
        fit["slope"] = study.fit->slope;
        fit["slope_se"] = study.fit->slope_se;
        fit["intercept"] = study.fit->intercept;
    } else {
        // with every run censored the study only bounds the exit time below
        fit["lower_bound_T"] = cfg.t_max;
    }
    write_text_file(dir / "fit.json", fit.dump(2) + "\n");

    json resolved = config;
    resolved["observer_stride"] = cfg.observer_stride;
    resolved["resonant_probe"] = cfg.resonant_probe;
    json certify;
    certify["K"] = cfg.certify.K;
    certify["N"] = cfg.certify.N;
    certify["J_max"] = cfg.certify.j_max;
    certify["gamma"] = cfg.certify.gamma;
    certify["alpha"] = cfg.certify.alpha;
    resolved["certify"] = certify;
    json seeds = json::array();
    for (auto seed : cfg.seeds) seeds.push_back(seed);
    resolved["seeds"] = seeds;
    write_manifest(dir, resolved);

    return study.all_censored() ? kExitAllCensored : kExitOk;
}

int run_experiment(const std::string& kind, const json& config) {
    if (kind == "spectrum") return run_spectrum_experiment(config);
    if (kind == "scan") return run_scan_experiment(config);
    if (kind == "simulate") return run_simulation_experiment(config);
    if (kind == "normalform") return run_normalform_experiment(config);
    if (kind == "exit-time") return run_exit_time_experiment(config);
    throw ConfigError("unknown experiment kind '" + kind + "'");
}

}  // namespace fnls
