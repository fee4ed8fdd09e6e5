// Command-line front end: seeded verification sweeps over the inequality
// checkers, single-record replay, instance sampling, and a Schatten-norm
// utility for matrices in the plain-text interchange format.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "schatten/matrixio.hpp"
#include "schatten/runner.hpp"

namespace {

using namespace schatten;
using namespace schatten::cli;

struct CommonFlags {
    std::string checker;
    std::string dim, len, grid;
    int trials = -1;
    int order_n = -1, order_m = -1, hyper_length = -1;
    std::string seed;
    std::optional<double> tol_rel, tol_abs;
    std::string s, q, r;
    std::string out;
    int jobs = -1;

    void attach(CLI::App* cmd) {
        cmd->add_option("--checker", checker,
                        "checker id, comma list, or 'all' (default: all)");
        cmd->add_option("--trials", trials, "trials per checker");
        cmd->add_option("--dim", dim, "matrix dimension, N or LO:HI");
        cmd->add_option("--len", len, "family length, N or LO:HI");
        cmd->add_option("--order-n", order_n, "first defect order");
        cmd->add_option("--order-m", order_m, "second defect order");
        cmd->add_option("--hyper-length", hyper_length, "defect family truncation");
        cmd->add_option("--seed", seed, "base seed (decimal or 0x hex)");
        cmd->add_option("--tol-rel", tol_rel, "relative tolerance");
        cmd->add_option("--tol-abs", tol_abs, "absolute tolerance");
        cmd->add_option("--grid", grid, "comma list of shifts, descending");
        cmd->add_option("--s", s, "pin the exponent s ('inf' allowed)");
        cmd->add_option("--q", q, "pin the exponent q ('inf' allowed)");
        cmd->add_option("--r", r, "pin the exponent r ('inf' allowed)");
        cmd->add_option("--out", out, "record stream path (JSON lines)");
        cmd->add_option("--jobs", jobs, "worker threads (0 = hardware)");
    }

    void apply(RunConfig& cfg) const {
        auto split_ids = [](const std::string& v) {
            std::vector<std::string> out;
            std::stringstream ss(v);
            std::string item;
            while (std::getline(ss, item, ','))
                if (!item.empty()) out.push_back(item);
            return out;
        };
        auto parse_range = [](const std::string& v, int& lo, int& hi) {
            const auto colon = v.find(':');
            if (colon == std::string::npos) {
                lo = hi = std::stoi(v);
            } else {
                lo = std::stoi(v.substr(0, colon));
                hi = std::stoi(v.substr(colon + 1));
            }
        };
        auto parse_pin = [](const std::string& v) {
            return v == "inf" ? INFINITY : std::stod(v);
        };
        if (!checker.empty()) cfg.checkers = split_ids(checker);
        if (trials >= 0) cfg.trials = trials;
        if (!dim.empty()) parse_range(dim, cfg.spec.dim_lo, cfg.spec.dim_hi);
        if (!len.empty()) parse_range(len, cfg.spec.len_lo, cfg.spec.len_hi);
        if (order_n >= 0) cfg.spec.order_n = order_n;
        if (order_m >= 0) cfg.spec.order_m = order_m;
        if (hyper_length >= 0) cfg.spec.hyper_length = hyper_length;
        if (!seed.empty()) cfg.base_seed = std::stoull(seed, nullptr, 0);
        if (tol_rel) cfg.spec.tol.rel = *tol_rel;
        if (tol_abs) cfg.spec.tol.abs = *tol_abs;
        if (!grid.empty()) {
            cfg.spec.grid.clear();
            std::stringstream ss(grid);
            std::string item;
            while (std::getline(ss, item, ','))
                if (!item.empty()) cfg.spec.grid.push_back(std::stod(item));
        }
        if (!s.empty()) cfg.spec.pin_s = parse_pin(s);
        if (!q.empty()) cfg.spec.pin_q = parse_pin(q);
        if (!r.empty()) cfg.spec.pin_r = parse_pin(r);
        if (!out.empty()) cfg.out_path = out;
        if (jobs >= 0) cfg.jobs = jobs;
    }
};

int cmd_verify(const std::string& config_path, const CommonFlags& flags) {
    RunConfig cfg;
    if (!config_path.empty()) cfg = load_config_file(config_path);
    flags.apply(cfg);  // flags win over the file

    std::ofstream out_file;
    std::ostream* records = nullptr;
    if (!cfg.out_path.empty()) {
        out_file.open(cfg.out_path);
        if (!out_file) throw IoFailure("cannot open output path: " + cfg.out_path);
        records = &out_file;
    }
    const RunSummary summary = run(cfg, records, std::cout);
    return summary.all_pass() ? 0 : 1;
}

int cmd_replay(const std::string& record_path, int line_number) {
    std::ifstream in(record_path);
    if (!in) throw IoFailure("cannot open record file: " + record_path);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (lineno == line_number) {
            const json record = json::parse(line);
            return replay_record(record, std::cout);
        }
    }
    throw IoFailure("record file has no line " + std::to_string(line_number));
}

int cmd_sample(const CommonFlags& flags) {
    RunConfig cfg;
    flags.apply(cfg);
    if (cfg.checkers.size() != 1 || cfg.checkers[0] == "all")
        throw ConfigInvalid("sample requires exactly one --checker id");
    cfg.validate();
    const uint64_t seed = derive_trial_seed(cfg.base_seed, 0);
    const SampledTrial trial = run_checker(cfg.checkers[0], cfg.spec, seed);
    json out = trial.instance;
    out["checker"] = cfg.checkers[0];
    out["seed"] = seed;
    out["digest"] = hex64(fnv1a(trial.instance.dump()));
    if (!cfg.out_path.empty()) {
        std::ofstream f(cfg.out_path);
        if (!f) throw IoFailure("cannot open output path: " + cfg.out_path);
        f << out.dump(2) << '\n';
    } else {
        std::cout << out.dump(2) << '\n';
    }
    return 0;
}

int cmd_norm(const std::string& matrix_path, const std::string& s_text) {
    const CMatrix m = read_matrix_file(matrix_path);
    const Exponent s =
        s_text == "inf" ? Exponent::infinity() : Exponent::finite(std::stod(s_text));
    std::cout.precision(17);
    std::cout << schatten_norm(m, s) << '\n';
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Schatten-norm transformer inequality verification harness"};
    app.require_subcommand(1);

    std::string config_path, record_path, matrix_path, norm_s = "2";
    int replay_line = 1;

    CLI::App* verify = app.add_subcommand("verify", "run a verification sweep");
    CommonFlags verify_flags;
    verify->add_option("--config", config_path, "key = value config file");
    verify_flags.attach(verify);

    CLI::App* replay = app.add_subcommand("replay", "re-run one dumped record");
    replay->add_option("record", record_path, "record stream file (JSON lines)")
        ->required();
    replay->add_option("--line", replay_line, "1-based record line (default 1)");

    CLI::App* sample = app.add_subcommand("sample", "emit one sampled instance");
    CommonFlags sample_flags;
    sample_flags.attach(sample);

    CLI::App* norm = app.add_subcommand("norm", "Schatten norm of a matrix file");
    norm->add_option("matrix", matrix_path, "matrix in plain-text format")->required();
    norm->add_option("--s", norm_s, "exponent in [1, inf], 'inf' allowed");

    CLI11_PARSE(app, argc, argv);

    try {
        if (verify->parsed()) return cmd_verify(config_path, verify_flags);
        if (replay->parsed()) return cmd_replay(record_path, replay_line);
        if (sample->parsed()) return cmd_sample(sample_flags);
        if (norm->parsed()) return cmd_norm(matrix_path, norm_s);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    }
    return 0;
}
