#pragma once

// fuzzyqm <experiment> [--config FILE] [--seed N] [--out DIR] [--h LIST] [--set key=value]...
//
// Exit status: 0 success, 1 numeric failure or a failed check, 2 usage or
// validation error.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fuzzyqm/cli/config.hpp"
#include "fuzzyqm/cli/run.hpp"

namespace fuzzyqm::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

inline std::string experiment_list() {
    std::string s;
    for (auto e : kExperiments) s += (s.empty() ? "" : ", ") + std::string(e);
    return s;
}

// Builds the merged config from defaults, an optional file and flags.
// Throws ConfigurationError (or ParseError) on malformed input.
inline json resolve_config(const std::string& experiment, const std::string& config_file,
                           const std::optional<std::uint64_t>& seed, const std::string& out_dir,
                           const std::string& h_list, const std::vector<std::string>& sets) {
    json c = default_config(experiment);
    if (!config_file.empty()) {
        std::ifstream f(config_file, std::ios::binary);
        if (!f) throw ConfigurationError("cannot read config file " + config_file);
        std::stringstream buf;
        buf << f.rdbuf();
        json user = parse_config_text(buf.str(), config_file);
        if (user.contains("experiment") && user.at("experiment") != json(experiment)) {
            throw ConfigurationError(config_file + ": experiment " + user.at("experiment").dump() +
                                     " does not match the command line ('" + experiment + "')");
        }
        c.merge_patch(user);
    }
    for (const auto& s : sets) apply_override(c, s);
    if (!h_list.empty()) {
        if (experiment != "classical-limit") throw ConfigurationError("--h only applies to classical-limit");
        c["sweep"]["h"] = parse_number_list(h_list);
    }
    if (seed) c["seed"] = *seed;
    if (!out_dir.empty()) c["output_dir"] = out_dir;
    return c;
}

inline int run_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Fuzzy-set reading of quantum mechanics: numerical experiments", "fuzzyqm"};
    // -h is left free so --h can carry the Schroedinger numbers
    app.set_help_flag("--help", "print this help and exit");
    app.set_version_flag("--version", std::string(kVersion));
    std::string experiment, config_file, out_dir, h_list;
    std::optional<std::uint64_t> seed;
    std::vector<std::string> sets;
    bool dry_run = false;
    app.add_option("experiment", experiment, "one of: " + experiment_list())->required();
    app.add_option("--config", config_file, "JSON config merged over the experiment defaults");
    app.add_option("--seed", seed, "random seed");
    app.add_option("--out", out_dir, "output directory (overrides output_dir)");
    app.add_option("--h", h_list, "comma-separated Schroedinger numbers for classical-limit");
    app.add_option("--set", sets, "override a config value, e.g. --set grid.n=4001")->take_all();
    app.add_flag("--dry-run", dry_run, "validate and print the resolved config without running");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForVersion&) {
        out << kVersion << "\n";
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "fuzzyqm: " << e.what() << "\n" << "run 'fuzzyqm --help' for usage\n";
        return kExitUsage;
    }

    if (!is_experiment(experiment)) {
        err << "fuzzyqm: unknown experiment '" << experiment << "' (expected one of: " << experiment_list() << ")\n";
        return kExitUsage;
    }

    json config;
    try {
        config = resolve_config(experiment, config_file, seed, out_dir, h_list, sets);
    } catch (const Error& e) {
        err << "fuzzyqm: " << e.what() << "\n";
        return kExitUsage;
    }
    if (const auto findings = validate(config); !findings.empty()) {
        err << "fuzzyqm: invalid configuration:\n";
        for (const auto& f : findings) err << "  " << f << "\n";
        return kExitUsage;
    }
    if (dry_run) {
        out << config.dump(2) << "\n";
        return kExitOk;
    }

    try {
        const Outcome o = run_experiment(config);
        const auto dir = config.at("output_dir").get<std::string>();
        write_outcome(config, o, dir);
        out << summary_text(config, o);
        out << "wrote " << dir << "\n";
        return o.passed() ? kExitOk : kExitFailure;
    } catch (const ConfigurationError& e) {
        err << "fuzzyqm: " << e.what() << "\n";
        return kExitUsage;
    } catch (const Error& e) {
        err << "fuzzyqm: " << e.what() << "\n";
        return kExitFailure;
    }
}

}  // namespace fuzzyqm::cli
