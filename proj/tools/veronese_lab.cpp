#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "vlab/commands.hpp"

namespace {

std::string read_input(const std::string& path) {
    if (path.empty()) return {};
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw vlab::InputError("config: cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void emit(const vlab::json& report, const std::string& out_path) {
    const std::string text = report.dump(2) + "\n";
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw vlab::InputError("out: cannot write '" + out_path + "'");
    out << text;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact and numerical tools for point configurations on hypersurfaces"};
    app.set_version_flag("--version", std::string(vlab::kToolVersion));

    std::string command;
    std::string config_path;
    std::string out_path;
    std::string batch_dir;
    vlab::CommandOptions opt;

    std::string command_help = "One of:";
    for (const auto& name : vlab::command_names()) command_help += " " + name;
    app.add_option("command", command, command_help)->required()->check(CLI::IsMember(vlab::command_names()));
    app.add_option("config", config_path, "Configuration JSON file ('-' for stdin)");
    app.add_option("-d,--degree", opt.degree, "Hypersurface degree");
    app.add_option("--m", opt.m, "Number of independent hypersurfaces");
    app.add_option("--field", opt.field, "Override the config field: rational, fp:<prime> or float");
    app.add_option("--seed", opt.seed, "Seed for randomized commands");
    app.add_option("--trials", opt.trials, "Trial count for randomized commands");
    app.add_option("--dmax", opt.d_max, "Largest degree tried by minimal-degree");
    app.add_option("--eps", opt.eps, "Residual threshold for minimal-degree");
    app.add_option("--r", opt.r, "Ambient dimension for multidegree-check");
    app.add_option("--n", opt.n, "Number of points for multidegree-check");
    app.add_option("--out", out_path, "Write the report here instead of stdout");
    app.add_option("--batch", batch_dir, "Run the command on every *.json file of a directory");
    app.add_option("--cap-minors", opt.cap_minors, "Largest number of minors or subsets enumerated");
    app.add_option("--cap-kgen", opt.cap_kgen, "Largest k checked for k-generality");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    if (!batch_dir.empty()) {
        try {
            const auto outcome = vlab::run_batch(command, batch_dir, opt, vlab::threads_from_env());
            emit(outcome.report, out_path);
            return outcome.all_ok ? 0 : 1;
        } catch (const std::exception& e) {
            std::cerr << "error: " << e.what() << "\n";
            std::cout << vlab::error_report(command, "", vlab::error_kind(e), e.what()).dump(2) << "\n";
            return vlab::exit_code(e);
        }
    }

    std::string input;
    try {
        input = read_input(config_path);
        emit(vlab::run_report(command, input, opt), out_path);
        return 0;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        std::cout << vlab::error_report(command, input, vlab::error_kind(e), e.what()).dump(2) << "\n";
        return vlab::exit_code(e);
    }
}
