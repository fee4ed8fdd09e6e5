#include "schatten/runner.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <mutex>
#include <ostream>
#include <sstream>
#include <thread>

namespace schatten::cli {

void RunConfig::validate() const {
    if (trials < 1) throw ConfigInvalid("trials must be >= 1");
    if (spec.dim_lo < 2 || spec.dim_hi < spec.dim_lo)
        throw ConfigInvalid("dimension range must satisfy 2 <= lo <= hi");
    if (spec.len_lo < 1 || spec.len_hi < spec.len_lo)
        throw ConfigInvalid("length range must satisfy 1 <= lo <= hi");
    if (spec.grid.empty()) throw ConfigInvalid("shift grid must not be empty");
    for (double g : spec.grid)
        if (!(g > 0.0)) throw ConfigInvalid("shift grid entries must be > 0");
    for (const std::string& c : checkers)
        if (c != "all" && !is_checker_id(c))
            throw ConfigInvalid("unknown checker id: " + c);
}

std::vector<std::string> RunConfig::resolved_checkers() const {
    for (const std::string& c : checkers)
        if (c == "all") return checker_ids();
    return checkers;
}

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            if (!cur.empty()) out.push_back(cur);
            cur.clear();
        } else if (!std::isspace(static_cast<unsigned char>(c))) {
            cur.push_back(c);
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

void parse_range(const std::string& v, int& lo, int& hi) {
    const auto colon = v.find(':');
    if (colon == std::string::npos) {
        lo = hi = std::stoi(v);
    } else {
        lo = std::stoi(v.substr(0, colon));
        hi = std::stoi(v.substr(colon + 1));
    }
}

double parse_pin(const std::string& v) {
    if (v == "inf") return INFINITY;
    return std::stod(v);
}

}  // namespace

RunConfig load_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigInvalid("cannot open config file: " + path);
    RunConfig cfg;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        const auto eq = line.find('=');
        if (line.find_first_not_of(" \t\r\n") == std::string::npos) continue;
        if (eq == std::string::npos)
            throw ConfigInvalid("config line " + std::to_string(lineno) +
                                ": expected 'key = value'");
        auto trim = [](std::string s) {
            const auto b = s.find_first_not_of(" \t\r\n");
            const auto e = s.find_last_not_of(" \t\r\n");
            return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
        };
        const std::string key = trim(line.substr(0, eq));
        const std::string val = trim(line.substr(eq + 1));
        if (key == "checkers")
            cfg.checkers = split(val, ',');
        else if (key == "trials")
            cfg.trials = std::stoi(val);
        else if (key == "dim")
            parse_range(val, cfg.spec.dim_lo, cfg.spec.dim_hi);
        else if (key == "len")
            parse_range(val, cfg.spec.len_lo, cfg.spec.len_hi);
        else if (key == "order_n")
            cfg.spec.order_n = std::stoi(val);
        else if (key == "order_m")
            cfg.spec.order_m = std::stoi(val);
        else if (key == "hyper_length")
            cfg.spec.hyper_length = std::stoi(val);
        else if (key == "seed")
            cfg.base_seed = std::stoull(val);
        else if (key == "tol_rel")
            cfg.spec.tol.rel = std::stod(val);
        else if (key == "tol_abs")
            cfg.spec.tol.abs = std::stod(val);
        else if (key == "grid") {
            cfg.spec.grid.clear();
            for (const std::string& g : split(val, ',')) cfg.spec.grid.push_back(std::stod(g));
        } else if (key == "s")
            cfg.spec.pin_s = parse_pin(val);
        else if (key == "q")
            cfg.spec.pin_q = parse_pin(val);
        else if (key == "r")
            cfg.spec.pin_r = parse_pin(val);
        else if (key == "out")
            cfg.out_path = val;
        else if (key == "jobs")
            cfg.jobs = std::stoi(val);
        else
            throw ConfigInvalid("config line " + std::to_string(lineno) +
                                ": unknown key '" + key + "'");
    }
    return cfg;
}

namespace {

struct TrialSlot {
    json record;
    bool pass = false;
    bool error = false;
    double wall_ms = 0.0;
    double relative_margin = 0.0;
    std::string checker;
};

TrialSlot execute_trial(const std::string& checker, const RunConfig& cfg,
                        uint64_t seed) {
    TrialSlot slot;
    slot.checker = checker;
    const auto t0 = std::chrono::steady_clock::now();
    try {
        SampledTrial trial = run_checker(checker, cfg.spec, seed);
        const auto t1 = std::chrono::steady_clock::now();
        slot.wall_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
        const uint64_t digest = fnv1a(trial.instance.dump());
        const bool embed = !trial.report.pass && cfg.dump_failures;
        slot.record = record_to_json(trial.report, slot.wall_ms, digest,
                                     embed ? &trial.instance : nullptr);
        slot.pass = trial.report.pass;
        slot.relative_margin = trial.report.relative_margin;
    } catch (const Error& e) {
        const auto t1 = std::chrono::steady_clock::now();
        slot.wall_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
        slot.error = true;
        slot.record = json{{"checker", checker}, {"seed", seed},
                           {"error", e.what()},  {"pass", false},
                           {"wall_ms", slot.wall_ms}};
    }
    return slot;
}

}  // namespace

RunSummary run(const RunConfig& config, std::ostream* records, std::ostream& log) {
    config.validate();
    const std::vector<std::string> ids = config.resolved_checkers();
    const int per_checker = config.trials;
    const std::size_t total = ids.size() * std::size_t(per_checker);

    std::vector<TrialSlot> slots(total);
    std::atomic<std::size_t> next{0};
    int jobs = config.jobs > 0 ? config.jobs
                               : int(std::max(1u, std::thread::hardware_concurrency()));
    jobs = std::min<int>(jobs, int(total));

    auto worker = [&] {
        for (;;) {
            const std::size_t k = next.fetch_add(1);
            if (k >= total) return;
            const std::string& checker = ids[k / std::size_t(per_checker)];
            // per-trial seed = hash(base_seed, global trial index)
            const uint64_t seed = derive_trial_seed(config.base_seed, k);
            slots[k] = execute_trial(checker, config, seed);
        }
    };
    if (jobs <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(std::size_t(jobs));
        for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    RunSummary summary;
    summary.trials = int(total);
    for (const std::string& id : ids) {
        CheckerSummary row;
        row.id = id;
        row.min_relative_margin = INFINITY;
        summary.rows.push_back(row);
    }
    for (std::size_t k = 0; k < total; ++k) {
        const TrialSlot& slot = slots[k];
        if (records != nullptr) *records << slot.record.dump() << '\n';
        CheckerSummary& row = summary.rows[k / std::size_t(per_checker)];
        ++row.trials;
        if (slot.error) {
            ++row.errors;
            ++summary.errors;
        } else if (slot.pass) {
            ++row.passes;
            ++summary.passes;
        }
        if (!slot.error)
            row.min_relative_margin = std::min(row.min_relative_margin,
                                               slot.relative_margin);
        row.max_wall_ms = std::max(row.max_wall_ms, slot.wall_ms);
    }

    log << std::left << std::setw(30) << "checker" << std::right << std::setw(8)
        << "trials" << std::setw(8) << "pass" << std::setw(8) << "err" << std::setw(16)
        << "min rel margin" << std::setw(12) << "max ms" << '\n';
    for (const CheckerSummary& row : summary.rows) {
        log << std::left << std::setw(30) << row.id << std::right << std::setw(8)
            << row.trials << std::setw(8) << row.passes << std::setw(8) << row.errors
            << std::setw(16) << std::setprecision(4) << std::scientific
            << (std::isinf(row.min_relative_margin) ? 0.0 : row.min_relative_margin)
            << std::setw(12) << std::fixed << std::setprecision(2) << row.max_wall_ms
            << '\n';
        log.unsetf(std::ios::floatfield);
    }
    log << (summary.all_pass() ? "ALL PASS" : "FAILURES PRESENT") << " ("
        << summary.passes << "/" << summary.trials << " trials, " << summary.errors
        << " errors)\n";
    return summary;
}

int replay_record(const json& record, std::ostream& log) {
    if (record.contains("error")) {
        log << "record is an error record; nothing to replay\n";
        return 2;
    }
    const verify::InequalityReport original = report_from_record(record);
    const SampleSpec spec = SampleSpec::from_params(original.params);
    SampledTrial trial = run_checker(original.checker_id, spec, original.seed);
    const uint64_t digest = fnv1a(trial.instance.dump());
    const std::string recorded_digest = record.value("digest", std::string());

    const bool lhs_ok = trial.report.lhs == original.lhs;
    const bool rhs_ok = trial.report.rhs == original.rhs;
    const bool digest_ok =
        recorded_digest.empty() || hex64(digest) == recorded_digest;

    log << "checker " << original.checker_id << " seed " << original.seed << '\n';
    log << std::setprecision(17);
    log << "  lhs " << trial.report.lhs << (lhs_ok ? "  == recorded" : "  != recorded ")
        << (lhs_ok ? "" : std::to_string(original.lhs)) << '\n';
    log << "  rhs " << trial.report.rhs << (rhs_ok ? "  == recorded" : "  != recorded ")
        << (rhs_ok ? "" : std::to_string(original.rhs)) << '\n';
    log << "  digest " << hex64(digest) << (digest_ok ? "  == recorded" : "  != recorded")
        << '\n';
    log << "  pass " << (trial.report.pass ? "true" : "false") << '\n';

    if (!lhs_ok || !rhs_ok || !digest_ok) return 2;
    return trial.report.pass ? 0 : 1;
}

}  // namespace schatten::cli
