#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "vlab/io.hpp"

namespace vlab {

// Command-line overrides; a set flag wins over the same key in the config file.
struct CommandOptions {
    std::optional<std::size_t> degree;
    std::optional<std::size_t> m;
    std::optional<std::size_t> trials;
    std::optional<std::size_t> d_max;
    std::optional<std::size_t> r;
    std::optional<std::size_t> n;
    std::optional<std::uint64_t> seed;
    std::optional<double> eps;
    std::optional<std::string> field;
    std::uint64_t cap_minors = kDefaultMinorCap;
    std::size_t cap_kgen = kDefaultGeneralityCap;
};

const std::vector<std::string>& command_names();

// Commands that may run without a configuration file.
bool command_accepts_no_input(std::string_view command);

// Runs one command on a parsed configuration. Returns
// {"field", "result", "char_warnings"}; throws vlab::Error subclasses.
json execute(std::string_view command, const json& config, const CommandOptions& options);

// Full report for raw input text: schema_version, tool_version, command,
// input_digest, field, result, char_warnings, timing_ms.
json run_report(std::string_view command, std::string_view input_text, const CommandOptions& options);

// {"schema_version", "tool_version", "command", "input_digest", "error": {"kind", "message"}}.
json error_report(std::string_view command, std::string_view input_text, std::string_view kind,
                  std::string_view message);

// 2 for input and cap errors, 3 for precondition errors, 1 otherwise.
int exit_code(const std::exception& e);
std::string_view error_kind(const std::exception& e);

struct BatchOutcome {
    json report;
    bool all_ok = true;
};

// Runs the command on every regular *.json file of dir in filename order.
// Per-file failures become error entries; `threads` bounds the fan-out.
BatchOutcome run_batch(std::string_view command, const std::filesystem::path& dir, const CommandOptions& options,
                       std::size_t threads);

// Parses VERONESE_LAB_THREADS; 1 when unset or invalid.
std::size_t threads_from_env();

} // namespace vlab
