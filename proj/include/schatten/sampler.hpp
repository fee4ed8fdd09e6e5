#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "schatten/report.hpp"
#include "schatten/rng.hpp"
#include "schatten/verify.hpp"

namespace schatten::cli {

// Everything a sampler reads. Replays rebuild this from the record's params,
// so every field that influences a random draw must round-trip through them.
struct SampleSpec {
    int dim_lo = 2, dim_hi = 6;
    int len_lo = 1, len_hi = 8;
    int order_n = 1, order_m = 1;  // defect orders for the contraction checkers
    int hyper_length = 8;          // truncation length for defect families
    std::vector<double> grid = verify::default_shift_grid();
    verify::Tolerance tol;
    // pins: 0 = sample freely, INFINITY = pin to the infinite exponent,
    // any other value = pin to that finite value
    double pin_s = 0.0, pin_q = 0.0, pin_r = 0.0;
    int rejection_cap = 2000;

    std::map<std::string, double> to_params() const;
    static SampleSpec from_params(const std::map<std::string, double>& p);
};

// Deterministic instance draws (each consumes only the given Rng).
SchattenTriple sample_triple(const SampleSpec& spec, Rng& rng);
CMatrix sample_x(Rng& rng, int rows, int cols);
WeightedFamily sample_family(Rng& rng, int dim, int length, double w_lo, double w_hi);
CMatrix sample_cohyper_contraction(Rng& rng, int dim, int order, double tol, int cap,
                                   int* attempts);
CMatrix sample_hyper_cohyper_contraction(Rng& rng, int dim, int order_hyper,
                                         int order_cohyper, double tol, int cap,
                                         int* attempts);

// One sampled trial: the verdict plus the full serialized instance
// (used for digests, failure dumps and the sample subcommand).
struct SampledTrial {
    verify::InequalityReport report;
    json instance;
};

// All checker ids, in the canonical run order.
const std::vector<std::string>& checker_ids();
bool is_checker_id(const std::string& id);

// Sample the instance for `id` from (spec, seed), run its checker, and return
// the annotated report. Throws on unknown ids and on sampler/checker errors.
SampledTrial run_checker(const std::string& id, const SampleSpec& spec, uint64_t seed);

}  // namespace schatten::cli
