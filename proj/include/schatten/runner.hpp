#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "schatten/sampler.hpp"

namespace schatten::cli {

struct RunConfig {
    std::vector<std::string> checkers{"all"};
    int trials = 100;
    SampleSpec spec;
    uint64_t base_seed = 0x5EED5EEDull;
    std::string out_path;  // empty: records go nowhere but the summary still prints
    int jobs = 0;          // 0 = hardware concurrency
    bool dump_failures = true;

    void validate() const;  // throws ConfigInvalid
    std::vector<std::string> resolved_checkers() const;
};

// Plain-text key/value config ("key = value", '#' comments). Unknown keys are
// rejected. Command-line flags override whatever the file sets.
RunConfig load_config_file(const std::string& path);

struct CheckerSummary {
    std::string id;
    int trials = 0;
    int passes = 0;
    int errors = 0;
    double min_relative_margin = 0.0;
    double max_wall_ms = 0.0;
};

struct RunSummary {
    std::vector<CheckerSummary> rows;
    int trials = 0;
    int passes = 0;
    int errors = 0;
    bool all_pass() const { return passes == trials && errors == 0; }
};

// Executes trials on a worker pool; records stream to `records` in trial
// order (one JSON object per line). The summary table prints to `log`.
RunSummary run(const RunConfig& config, std::ostream* records, std::ostream& log);

// Re-runs one dumped record and compares lhs/rhs/digest bit-exactly.
// Returns 0: reproduced and pass, 1: reproduced and fail, 2: mismatch.
int replay_record(const json& record, std::ostream& log);

}  // namespace schatten::cli
