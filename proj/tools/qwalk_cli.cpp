// Command-line front end: runs one experiment described by a JSON config or
// a bundled preset and writes plot-ready CSV/JSON into the output directory.

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "qwalk/experiment.hpp"

int main(int argc, char** argv) {
    CLI::App app{"multiport quantum-walk experiments"};

    std::string config_path, preset, out_dir = ".";
    int threads = 0;
    bool list_presets = false;
    app.add_option("--config", config_path, "path to an experiment JSON file");
    app.add_option("--preset", preset, "bundled experiment name");
    app.add_option("--out", out_dir, "output directory")->capture_default_str();
    app.add_option("--threads", threads, "worker threads (0 = auto)")
        ->capture_default_str();
    app.add_flag("--list-presets", list_presets, "list bundled experiments");

    CLI11_PARSE(app, argc, argv);

    if (list_presets) {
        for (const std::string& n : qwalk::preset_names())
            std::cout << n << "\n";
        return 0;
    }

    try {
        qwalk::ExperimentConfig cfg = [&] {
            if (!preset.empty())
                return qwalk::ExperimentConfig::from_json_text(
                    qwalk::preset_json(preset));
            if (!config_path.empty())
                return qwalk::ExperimentConfig::from_file(config_path);
            throw qwalk::ConfigError("need --config or --preset (or --list-presets)");
        }();
        const qwalk::RunOutcome oc =
            qwalk::run_experiment(cfg, out_dir, threads);
        std::cout << oc.summary_text << "\n";
        return oc.exit_code;
    } catch (const qwalk::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "invariant violation: " << e.what() << "\n";
        return 3;
    }
}
