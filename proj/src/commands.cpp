#include "vlab/commands.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <thread>

namespace vlab {

namespace {

constexpr std::size_t kDefaultTrials = 100;

std::size_t require_degree(const ConfigFile& cfg, const CommandOptions& opt) {
    if (opt.degree) return *opt.degree;
    if (cfg.d) return *cfg.d;
    throw InputError("degree: required (--degree or \"d\" in the config)");
}

template <class F>
json with_exact_field(const ConfigFile& cfg, std::string_view command, F&& body) {
    switch (cfg.field.kind) {
    case FieldSpec::Kind::Rationals: return body(RationalField());
    case FieldSpec::Kind::PrimeField: return body(PrimeField(cfg.field.p));
    case FieldSpec::Kind::Float: break;
    }
    throw InputError("field: " + std::string(command) + " requires an exact field (\"rational\" or \"fp:<prime>\")");
}

json forms_json(const auto& forms) {
    json out = json::array();
    for (const auto& f : forms) out.push_back(to_json(f));
    return out;
}

json membership_cmd(const ConfigFile& cfg, const CommandOptions& opt) {
    const std::size_t d = require_degree(cfg, opt);
    const std::size_t m = opt.m ? *opt.m : cfg.m.value_or(1);
    return with_exact_field(cfg, "membership", [&](const auto& field) {
        return to_json(membership(exact_points(cfg, field), d, m));
    });
}

json interpolate_cmd(const ConfigFile& cfg, const CommandOptions& opt) {
    const std::size_t d = require_degree(cfg, opt);
    return with_exact_field(cfg, "interpolate", [&](const auto& field) {
        const auto points = exact_points(cfg, field);
        const auto system = hypersurface_system(points, d);
        json out;
        out["d"] = d;
        out["m"] = system.m();
        out["forms"] = forms_json(system.forms);
        if (system.m() == 1 && points.size() + 1 >= basis_size(points.r(), d)) {
            const auto local = recover_coefficients_local(points, d);
            out["local_recovery"] = to_json(local);
            out["local_recovery_agrees"] = local == system.forms.front();
        }
        return out;
    });
}

json classify_cmd(const ConfigFile& cfg, const CommandOptions& opt, std::vector<std::string>& warnings) {
    const std::size_t d = require_degree(cfg, opt);
    ClassifyOptions copts;
    copts.generality_cap = opt.cap_kgen;
    copts.minor_cap = opt.cap_minors;
    return with_exact_field(cfg, "classify", [&](const auto& field) {
        const auto report = classify(exact_points(cfg, field), d, copts);
        warnings = report.char_warnings;
        return to_json(report);
    });
}

json classify_plane_cmd(const ConfigFile& cfg, const CommandOptions& opt) {
    const std::size_t d = require_degree(cfg, opt);
    return with_exact_field(cfg, "classify-plane", [&](const auto& field) {
        return to_json(classify_plane(exact_points(cfg, field), d));
    });
}

json classify_quadric_cmd(const ConfigFile& cfg, const CommandOptions& opt) {
    if (const auto d = opt.degree ? opt.degree : cfg.d; d && *d != 2)
        throw InputError("degree: classify-quadric3 is for quadrics, got " + std::to_string(*d));
    return with_exact_field(cfg, "classify-quadric3", [&](const auto& field) {
        return to_json(classify_quadric_p3(exact_points(cfg, field)));
    });
}

json regularity_cmd(const ConfigFile& cfg) {
    return with_exact_field(cfg, "regularity", [&](const auto& field) {
        const auto points = exact_points(cfg, field);
        json out;
        out["n_points"] = points.size();
        out["span_dim"] = span_dimension(points.points());
        out["regularity"] = regularity_of_points(points.points());
        return out;
    });
}

json secants_cmd(const ConfigFile& cfg, const CommandOptions& opt) {
    return with_exact_field(cfg, "secants", [&](const auto& field) {
        const auto points = exact_points(cfg, field);
        json out;
        if (points.size() < 2) {
            out["max_secant"] = points.size();
            out["witness"] = nullptr;
        } else {
            const auto sec = max_secant(points.points());
            out["max_secant"] = sec.count;
            out["witness"] = {sec.witness.first, sec.witness.second};
        }
        const auto gen = k_generality(points.points(), opt.cap_kgen, opt.cap_minors);
        out["t_generality"] = gen.capped ? json("capped") : json(gen.k);
        out["span_dim"] = span_dimension(points.points());
        return out;
    });
}

json fit_cmd(const ConfigFile& cfg, const CommandOptions& opt) {
    const std::size_t d = require_degree(cfg, opt);
    const FloatCloud cloud = float_cloud(cfg);
    const FitResult fit = fit_hypersurface(cloud, d);
    json out = to_json(fit, monomial_basis(cloud.r(), d));
    out["residual_note"] = "smallest singular value of the column-normalized Veronese matrix; "
                           "a proxy, not the geometric distance to the variety";
    return out;
}

json minimal_degree_cmd(const ConfigFile& cfg, const CommandOptions& opt) {
    const FloatCloud cloud = float_cloud(cfg);
    const std::size_t d_max = opt.d_max ? *opt.d_max : cfg.d_max.value_or(0);
    if (d_max == 0) throw InputError("dmax: required (--dmax or \"d_max\" in the config)");
    const double eps = opt.eps ? *opt.eps : cfg.eps.value_or(default_eps(cloud.size()));
    const MinimalDegreeResult res = minimal_degree(cloud, d_max, eps);
    json out;
    out["eps"] = res.eps;
    out["residuals"] = res.residuals;
    if (res.degree) {
        out["status"] = "Found";
        out["degree"] = *res.degree;
        out["fit"] = to_json(*res.fit, monomial_basis(cloud.r(), *res.degree));
    } else {
        out["status"] = "NotFound";
        out["degree"] = nullptr;
    }
    return out;
}

json multidegree_cmd(const ConfigFile& cfg, const CommandOptions& opt) {
    if (cfg.field.kind != FieldSpec::Kind::PrimeField)
        throw PreconditionError("field: multidegree-check samples over a prime field, got \"" + cfg.field.name() + "\"");
    const std::size_t r = opt.r ? *opt.r : cfg.r;
    const std::size_t d = require_degree(cfg, opt);
    const std::size_t n = opt.n ? *opt.n : cfg.n.value_or(0);
    if (n == 0) throw InputError("n: required (--n or \"n\" in the config)");
    const std::size_t trials = opt.trials ? *opt.trials : cfg.trials.value_or(kDefaultTrials);
    const auto seed = opt.seed ? opt.seed : cfg.seed;
    if (!seed) throw InputError("seed: required for randomized commands");
    return to_json(multidegree_check(PrimeField(cfg.field.p), r, d, n, trials, *seed));
}

ConfigFile effective_config(std::string_view command, const json& config, const CommandOptions& opt) {
    json doc = config;
    if (doc.is_null()) doc = json::object();
    if (command == "multidegree-check") {
        if (!doc.contains("r") && opt.r) doc["r"] = *opt.r;
        if (!doc.contains("field") && !opt.field) doc["field"] = "fp:" + std::to_string(kDefaultTestPrime);
    }
    if (opt.field) {
        const bool homogenize = doc.contains("homogenize") && doc["homogenize"].is_boolean() && doc["homogenize"].get<bool>();
        if (homogenize && *opt.field != "float") throw InputError("field: --field conflicts with \"homogenize\"");
        doc["field"] = *opt.field;
    }
    return parse_config(doc);
}

double elapsed_ms(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot read " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace

const std::vector<std::string>& command_names() {
    static const std::vector<std::string> names = {
        "membership", "interpolate", "classify", "classify-plane", "classify-quadric3",
        "regularity", "secants",     "fit",      "minimal-degree", "multidegree-check",
    };
    return names;
}

bool command_accepts_no_input(std::string_view command) { return command == "multidegree-check"; }

json execute(std::string_view command, const json& config, const CommandOptions& options) {
    const auto& names = command_names();
    if (std::find(names.begin(), names.end(), command) == names.end())
        throw InputError("command: unknown subcommand '" + std::string(command) + "'");

    const ConfigFile cfg = effective_config(command, config, options);
    std::vector<std::string> warnings;
    json result;
    if (command == "membership") result = membership_cmd(cfg, options);
    else if (command == "interpolate") result = interpolate_cmd(cfg, options);
    else if (command == "classify") result = classify_cmd(cfg, options, warnings);
    else if (command == "classify-plane") result = classify_plane_cmd(cfg, options);
    else if (command == "classify-quadric3") result = classify_quadric_cmd(cfg, options);
    else if (command == "regularity") result = regularity_cmd(cfg);
    else if (command == "secants") result = secants_cmd(cfg, options);
    else if (command == "fit") result = fit_cmd(cfg, options);
    else if (command == "minimal-degree") result = minimal_degree_cmd(cfg, options);
    else result = multidegree_cmd(cfg, options);

    return {{"field", cfg.field.name()}, {"result", std::move(result)}, {"char_warnings", warnings}};
}

json run_report(std::string_view command, std::string_view input_text, const CommandOptions& options) {
    const auto start = std::chrono::steady_clock::now();
    json config;
    if (!input_text.empty()) {
        try {
            config = json::parse(input_text);
        } catch (const json::parse_error& e) {
            throw InputError(std::string("config: malformed JSON: ") + e.what());
        }
    } else if (!command_accepts_no_input(command)) {
        throw InputError("config: input is empty");
    }

    json body;
    try {
        body = execute(command, config, options);
    } catch (const json::exception& e) {
        throw InputError(std::string("config: ") + e.what());
    }

    json report;
    report["schema_version"] = kSchemaVersion;
    report["tool_version"] = kToolVersion;
    report["command"] = command;
    report["input_digest"] = input_digest(input_text);
    report["field"] = body["field"];
    report["result"] = std::move(body["result"]);
    report["char_warnings"] = body["char_warnings"];
    report["timing_ms"] = elapsed_ms(start);
    return report;
}

json error_report(std::string_view command, std::string_view input_text, std::string_view kind,
                  std::string_view message) {
    return {{"schema_version", kSchemaVersion},
            {"tool_version", kToolVersion},
            {"command", command},
            {"input_digest", input_digest(input_text)},
            {"error", {{"kind", kind}, {"message", message}}}};
}

int exit_code(const std::exception& e) {
    if (dynamic_cast<const InputError*>(&e)) return 2;
    if (dynamic_cast<const PreconditionError*>(&e)) return 3;
    return 1;
}

std::string_view error_kind(const std::exception& e) {
    if (dynamic_cast<const CapError*>(&e)) return "cap";
    if (dynamic_cast<const InputError*>(&e)) return "input";
    if (dynamic_cast<const PreconditionError*>(&e)) return "precondition";
    return "internal";
}

BatchOutcome run_batch(std::string_view command, const std::filesystem::path& dir, const CommandOptions& options,
                       std::size_t threads) {
    namespace fs = std::filesystem;
    if (!fs::is_directory(dir)) throw InputError("batch: not a directory: " + dir.string());

    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(dir))
        if (entry.is_regular_file() && entry.path().extension() == ".json") files.push_back(entry.path());
    std::sort(files.begin(), files.end(), [](const fs::path& a, const fs::path& b) {
        return a.filename().string() < b.filename().string();
    });

    std::vector<json> entries(files.size());
    std::vector<char> ok(files.size(), 0);
    std::atomic<std::size_t> next{0};

    auto worker = [&] {
        for (std::size_t i = next++; i < files.size(); i = next++) {
            const std::string name = files[i].filename().string();
            std::string text;
            try {
                text = read_file(files[i]);
                entries[i] = {{"file", name}, {"report", run_report(command, text, options)}};
                ok[i] = 1;
            } catch (const std::exception& e) {
                entries[i] = {{"file", name},
                              {"report", error_report(command, text, error_kind(e), e.what())},
                              {"exit_code", exit_code(e)}};
            }
        }
    };

    const std::size_t pool = std::max<std::size_t>(1, std::min(threads, files.size()));
    std::vector<std::thread> workers;
    for (std::size_t t = 1; t < pool; ++t) workers.emplace_back(worker);
    worker();
    for (auto& w : workers) w.join();

    const auto succeeded = static_cast<std::size_t>(std::count(ok.begin(), ok.end(), 1));
    BatchOutcome out;
    out.all_ok = succeeded == files.size();
    out.report = {{"schema_version", kSchemaVersion},
                  {"tool_version", kToolVersion},
                  {"command", command},
                  {"batch", entries},
                  {"summary", {{"files", files.size()}, {"succeeded", succeeded}, {"failed", files.size() - succeeded}}}};
    return out;
}

std::size_t threads_from_env() {
    const char* raw = std::getenv("VERONESE_LAB_THREADS");
    if (!raw) return 1;
    char* end = nullptr;
    const unsigned long v = std::strtoul(raw, &end, 10);
    if (end == raw || *end != '\0' || v == 0) return 1;
    return std::min<unsigned long>(v, 256);
}

} // namespace vlab
