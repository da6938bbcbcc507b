#pragma once

#include <string>

namespace cli {

struct RunOptions {
    std::string config_path;
    std::string out_path;       // empty -> stdout
    std::string format = "csv"; // csv | json
    int threads = 1;
    unsigned long long seed = 0;
    double k1_perturbation = 0.0; // validate canary hook
};

// Each returns the process exit code:
// 0 ok, 1 config/validation error, 2 numerical failure, 3 self-check failure.
int cmd_spectrum(const RunOptions& opt);
int cmd_energy(const RunOptions& opt);
int cmd_sweep(const RunOptions& opt);
int cmd_depletion(const RunOptions& opt);
int cmd_validate(const RunOptions& opt);

}  // namespace cli
