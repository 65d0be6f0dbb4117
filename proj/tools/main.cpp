#include <string>

#include <CLI11.hpp>

#include "fracdiff/commands.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Implicit finite-difference solver with non-uniform timesteps for the "
                 "Caputo-form fractional diffusion equation"};
    app.require_subcommand(1);

    std::string config_path;
    std::string experiment_name;

    CLI::App* solve = app.add_subcommand("solve", "Run a solve and write CSV/JSON outputs");
    solve->add_option("config", config_path, "key = value config file")->required();

    CLI::App* experiment = app.add_subcommand(
        "experiment", "Run a named experiment: convergence|stability|point-source|cost-scaling");
    experiment->add_option("name", experiment_name, "experiment name")->required();
    experiment->add_option("config", config_path, "key = value config file")->required();

    CLI11_PARSE(app, argc, argv);

    if (solve->parsed()) {
        return fracdiff::cmd_solve(config_path);
    }
    return fracdiff::cmd_experiment(experiment_name, config_path);
}
