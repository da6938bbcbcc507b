#include <string>

#include "CLI11.hpp"
#include "runner.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Bogoliubov radiation from a moving impurity: spectra, energies, "
                 "condensate depletion, and the numerical self-check suite"};
    app.require_subcommand(1);

    cli::RunOptions opt;
    auto add_common = [&](CLI::App* sub, bool need_config) {
        if (need_config)
            sub->add_option("--config", opt.config_path, "JSON run configuration")
                ->required();
        sub->add_option("--out", opt.out_path, "output path (default: stdout)");
        sub->add_option("--format", opt.format, "csv or json")
            ->check(CLI::IsMember({"csv", "json"}));
        sub->add_option("--threads", opt.threads, "worker threads")
            ->check(CLI::PositiveNumber);
        sub->add_option("--seed", opt.seed, "seed for stochastic self-checks");
    };

    CLI::App* spectrum = app.add_subcommand("spectrum", "radiated occupation and energy density on a (k, theta) grid");
    add_common(spectrum, true);
    CLI::App* energy = app.add_subcommand("energy", "total radiated energy up to a wavenumber cutoff");
    add_common(energy, true);
    CLI::App* sweep = app.add_subcommand("sweep", "repeat spectrum or energy over a parameter ladder");
    add_common(sweep, true);
    CLI::App* depletion = app.add_subcommand("depletion", "condensate depletion in a finite box");
    add_common(depletion, true);
    CLI::App* validate = app.add_subcommand("validate", "run the numerical self-check suite");
    add_common(validate, false);
    validate->add_option("--k1-perturbation", opt.k1_perturbation,
                         "inject a relative error into the Bessel K1 cross-check (test hook)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    if (spectrum->parsed()) return cli::cmd_spectrum(opt);
    if (energy->parsed()) return cli::cmd_energy(opt);
    if (sweep->parsed()) return cli::cmd_sweep(opt);
    if (depletion->parsed()) return cli::cmd_depletion(opt);
    return cli::cmd_validate(opt);
}
