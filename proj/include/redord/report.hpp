#pragma once

// Command cores behind the CLI: predict / scan / density / verify over
// an ExperimentConfig, human-readable reports, the CSV record stream,
// and the exit-code contract.

#include "redord/config.hpp"
#include "redord/predictor.hpp"
#include "redord/scan.hpp"

#include <iosfwd>
#include <string>

namespace redord {

// 0 success; 2 prediction mismatch; 3 density lower bound at or below
// its threshold; 4 config or hypothesis error; 5 unsupported group
// configuration.
enum ExitCode : int {
    exit_ok = 0,
    exit_mismatch = 2,
    exit_density_below = 3,
    exit_config_error = 4,
    exit_unsupported = 5,
};

struct VerifyReport {
    Prediction prediction;
    u64 expected_nr = 0;  // predicted value unless overridden in config
    u64 empirical_gcd = 0;
    bool match = false;
    std::vector<DensityCounter> densities;
    std::vector<double> thresholds;
    double runtime_seconds = 0.0;
};

struct VerifyOutcome {
    VerifyReport report;
    ScanResult scan;
    int exit_code = exit_ok;
};

// CSV schema: header "p,status,ord_1,...,ord_k,ord" plus one "v_<ell>"
// column per requested ell; status is "good" or "skipped:<reason>";
// skipped rows leave the order and valuation columns empty.
std::string records_csv(const ScanResult& scan, std::size_t k, const std::set<u64>& ells);

// Evaluates one configured density request against a completed scan.
DensityCounter density_for_request(const ScanResult& scan, const GroupPointSpec& spec,
                                   const DensityRequest& req);

// Scan + prediction comparison + configured densities. Throws
// UnsupportedConfig / HypothesisViolation / ConfigError upward.
VerifyOutcome run_verify(const ExperimentConfig& cfg);

enum class Command { Predict, Scan, Density, Verify };

// Runs one command, writing the report to `out` and diagnostics to
// `err`, and the CSV to cfg.out_path when set; never throws.
int run_command(Command cmd, const ExperimentConfig& cfg, std::ostream& out,
                std::ostream& err);

}  // namespace redord
