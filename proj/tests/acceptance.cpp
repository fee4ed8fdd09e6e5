// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Each criterion pins its tolerances and sample counts in code.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "schatten/hypercontraction.hpp"
#include "schatten/runner.hpp"

using namespace schatten;
using namespace schatten::cli;
using namespace schatten::verify;

namespace {

constexpr uint64_t kBaseSeed = 0xACCE5501ull;

struct Failure {
    std::string detail;
};

int g_failures = 0;

void criterion(int id, const std::string& name,
               const std::function<void(std::string&)>& body) {
    const auto t0 = std::chrono::steady_clock::now();
    std::string detail;
    bool ok = true;
    try {
        body(detail);
    } catch (const Failure& f) {
        ok = false;
        detail = f.detail;
    } catch (const std::exception& e) {
        ok = false;
        detail = std::string("exception: ") + e.what();
    }
    const double ms = std::chrono::duration<double, std::milli>(
                          std::chrono::steady_clock::now() - t0)
                          .count();
    std::printf("[%s] criterion %d: %s (%.0f ms)%s%s\n", ok ? "PASS" : "FAIL", id,
                name.c_str(), ms, detail.empty() ? "" : " -- ", detail.c_str());
    std::fflush(stdout);
    if (!ok) ++g_failures;
}

void require(bool cond, const std::string& detail) {
    if (!cond) throw Failure{detail};
}

uint64_t seed_at(uint64_t block, uint64_t k) {
    return derive_trial_seed(kBaseSeed + block, k);
}

std::string sci(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2e", v);
    return buf;
}

WeightedFamily random_family(Rng& rng, int d, int len) {
    std::vector<CMatrix> members;
    for (int n = 0; n < len; ++n) members.push_back(rng.gaussian_matrix(d, d));
    return WeightedFamily(std::move(members), rng.log_uniform_weights(len, 1e-2, 1e2));
}

CMatrix block_row(const WeightedFamily& f) {
    const int d = f.dim();
    CMatrix out(d, d * f.length());
    for (int n = 0; n < f.length(); ++n)
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) out(i, n * d + j) = f.member(n)(i, j);
    return out;
}

CMatrix block_column(const WeightedFamily& f) {
    const int d = f.dim();
    CMatrix out(d * f.length(), d);
    for (int n = 0; n < f.length(); ++n)
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) out(n * d + i, j) = f.member(n)(i, j);
    return out;
}

void sweep(const std::string& id, const SampleSpec& spec, int trials, uint64_t block,
           std::string& detail) {
    double worst = INFINITY;
    for (int k = 0; k < trials; ++k) {
        const SampledTrial t = run_checker(id, spec, seed_at(block, uint64_t(k)));
        worst = std::min(worst, t.report.relative_margin);
        if (!t.report.pass)
            throw Failure{id + ": trial " + std::to_string(k) + " failed, margin " +
                          std::to_string(t.report.relative_margin) +
                          (t.report.notes.empty() ? "" : ", " + t.report.notes)};
    }
    if (!detail.empty()) detail += "; ";
    detail += id + " min margin " + sci(worst);
}

// --------------------------------------------------------------------------

void criterion1(std::string& detail) {
    Rng rng(seed_at(1, 0));
    double worst = 0.0;
    for (int k = 0; k < 500; ++k) {
        const int d = rng.uniform_int(2, 8);
        const int len = rng.uniform_int(1, 8);
        const WeightedFamily f = random_family(rng, d, len);
        const double row_oracle = operator_norm(block_row(f));
        const double col_oracle = operator_norm(block_column(f));
        const double row_err =
            std::abs(row_norm(f) - row_oracle) / std::max(1.0, row_oracle);
        const double col_err =
            std::abs(column_norm(f) - col_oracle) / std::max(1.0, col_oracle);
        worst = std::max({worst, row_err, col_err});
        require(row_err <= 1e-9 && col_err <= 1e-9,
                "block norm mismatch at trial " + std::to_string(k));
    }
    detail = "500 families, worst relative error " + sci(worst);
}

void criterion2(std::string& detail) {
    Rng rng(seed_at(2, 0));
    double worst = 0.0;
    for (int k = 0; k < 100; ++k) {
        const int d = rng.uniform_int(2, 8);
        const CMatrix e = rng.haar_unitary(d);
        const CMatrix f = rng.haar_unitary(d);
        auto [fam_e, fam_f] = rank_one_family(e, f, d);
        const std::vector<double> lam = rng.log_uniform_weights(d, 1e-2, 1e2);
        double lam_sum = 0.0;
        for (double v : lam) lam_sum += v;

        const double right_err =
            (gram_right(fam_e, 0.0) - CMatrix::identity(d)).max_abs_entry();
        const CMatrix want = lam_sum * rank_one(column(e, 0), column(e, 0));
        const double left_err =
            (gram_left(fam_e.reweighted(lam), 1.0) - want).max_abs_entry() /
            std::max(1.0, lam_sum);
        worst = std::max({worst, right_err, left_err});
        require(right_err <= 1e-12 && left_err <= 1e-12,
                "rank-one identity fails at trial " + std::to_string(k));
        (void)fam_f;
    }
    detail = "100 rotated bases, worst error " + sci(worst);
}

void criterion3(std::string& detail) {
    const double pins[] = {1.0, 1.37, 2.0, 3.0, INFINITY};
    uint64_t block = 30;
    for (double s : pins) {
        SampleSpec spec;
        spec.pin_s = s;
        sweep("double_monotonicity", spec, 1000, block++, detail);
        detail.clear();
    }
    detail = "1000 instances per s in {1, 1.37, 2, 3, inf}";
}

void criterion4(std::string& detail) {
    uint64_t block = 40;
    for (std::string id :
         {"endpoint_op_reg", "endpoint_hs_right_reg", "endpoint_hs_left_reg",
          "endpoint_tr_reg", "endpoint_op_plain", "endpoint_hs_right_plain",
          "endpoint_hs_left_plain", "endpoint_tr_plain", "endpoint_op_reduced",
          "endpoint_hs_right_reduced", "endpoint_hs_left_reduced",
          "endpoint_tr_reduced"}) {
        SampleSpec spec;
        std::string scratch;
        sweep(id, spec, 500, block++, scratch);
    }

    // equality probes
    Rng rng(seed_at(4, 999));
    const Tolerance tol{};
    {
        // near-zero shifts on the reduced operator form
        const int d = 4;
        WeightedFamily idf({CMatrix::identity(d)}, {1.0});
        EndpointInstance inst{idf, idf, idf, idf, 1e-18, 1e-18, 1e-18, 1e-18,
                              rng.gaussian_matrix(d, d)};
        const InequalityReport r = check_endpoint(EndpointVariant::op_reduced, inst, tol);
        require(r.pass && std::abs(r.gap) <= 1e-10 * std::max(1.0, r.rhs),
                "operator-endpoint equality probe gap " + std::to_string(r.gap));
    }
    {
        // scaled-unitary trace-endpoint equality (product polar identity)
        const int d = 4;
        const double w = 1.7;
        WeightedFamily fam_a({rng.haar_unitary(d) * 1.3}, {0.8});
        WeightedFamily fam_b({rng.haar_unitary(d) * 0.6}, {w});
        WeightedFamily fam_c({rng.gaussian_matrix(d, d)}, {1.0});
        WeightedFamily fam_d({rng.gaussian_matrix(d, d)}, {w});
        EndpointInstance inst{fam_a, fam_b, fam_c, fam_d, 0.3, 0.3, 0.3, 0.3,
                              rng.gaussian_matrix(d, d)};
        const InequalityReport r = check_endpoint(EndpointVariant::tr_plain, inst, tol);
        require(r.pass && std::abs(r.gap) <= 1e-10 * std::max(1.0, r.rhs),
                "trace-endpoint equality probe gap " + std::to_string(r.gap));
    }
    detail = "12 variants x 500 instances; equality probes within 1e-10";
}

void criterion5(std::string& detail) {
    SampleSpec spec;  // d in [2,6], len in [1,8]
    std::string scratch;
    sweep("weighted_cs_plain", spec, 5000, 50, scratch);
    detail = scratch;

    scratch.clear();
    SampleSpec sup_spec;
    sup_spec.len_hi = 6;
    sweep("weighted_cs_sup", sup_spec, 500, 51, scratch);

    // single identity pair: equality at several triples, both forms
    Rng rng(seed_at(5, 7));
    const Tolerance tol{};
    for (const SchattenTriple t :
         {SchattenTriple::from_qr(Exponent::finite(2.0), Exponent::finite(2.0)),
          SchattenTriple::from_qr(Exponent::finite(1.0), Exponent::infinity()),
          SchattenTriple::from_qr(Exponent::finite(4.0), Exponent::finite(1.2))}) {
        const int d = 4;
        WeightedFamily idf({CMatrix::identity(d)}, {1.0});
        WeightedCsInstance inst{idf, idf, t, rng.gaussian_matrix(d, d),
                                default_shift_grid()};
        const InequalityReport r = check_weighted_cs(WeightedCsForm::plain, inst, tol);
        require(r.pass && std::abs(r.gap) <= 1e-10 * std::max(1.0, r.rhs),
                "identity-pair equality probe gap " + std::to_string(r.gap));
    }
    detail += "; sup monotone on 500 grids; identity probes within 1e-10";
}

void criterion6(std::string& detail) {
    uint64_t block = 60;
    for (std::string id :
         {"cs_low_s_left", "cs_low_s_right", "cs_high_s_left", "cs_high_s_right",
          "rebalanced_cs_sup", "rebalanced_cs_plain", "substituted_cs_sup",
          "substituted_cs_plain"}) {
        SampleSpec spec;
        std::string scratch;
        sweep(id, spec, 500, block++, scratch);
    }
    detail = "8 case/form checkers x 500 instances, 1e-12 cross-agreement enforced";
}

void criterion7(std::string& detail) {
    std::string scratch;
    SampleSpec spec;
    sweep("rank_one_cs_plain", spec, 500, 70, scratch);  // includes norm independence
    sweep("rank_one_cs_sup", spec, 250, 71, scratch);
    sweep("rank_one_cs_holder_plain", spec, 250, 72, scratch);

    Rng rng(seed_at(7, 1));
    const Tolerance tol{};
    const SchattenTriple t =
        SchattenTriple::from_qr(Exponent::finite(2.5), Exponent::finite(3.0));
    {
        // zero probe: X f_1 = 0 gives 0 = 0
        const int d = 4;
        const CMatrix e = rng.haar_unitary(d), f = rng.haar_unitary(d);
        const std::vector<cplx> f1 = column(f, 0);
        CMatrix x = rng.gaussian_matrix(d, d);
        const std::vector<cplx> xf1 = mat_vec(x, f1);
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j)
                x(i, j) -= xf1[std::size_t(i)] * std::conj(f1[std::size_t(j)]);
        RankOneInstance inst{e, f, rng.log_uniform_weights(d, 1e-1, 1e1),
                             rng.log_uniform_weights(d, 1e-1, 1e1), t, x,
                             default_shift_grid()};
        const InequalityReport r = check_rank_one_cs(RankOneForm::plain, inst, tol);
        require(r.pass && r.lhs <= 1e-12 && r.rhs <= 1e-12, "zero probe not 0 = 0");
    }
    {
        // scalar probe: d = 1 attains exact equality
        RankOneInstance inst{CMatrix::identity(1), CMatrix::identity(1), {0.7}, {1.9},
                             t, Rng(seed_at(7, 2)).gaussian_matrix(1, 1),
                             default_shift_grid()};
        const InequalityReport r = check_rank_one_cs(RankOneForm::plain, inst, tol);
        require(r.pass && std::abs(r.gap) <= 1e-12 * std::max(1.0, r.rhs),
                "scalar probe gap " + std::to_string(r.gap));
    }
    {
        // aligned rank-one X with constant weights: the slack has a closed form
        const int d = 5;
        const CMatrix e = rng.haar_unitary(d), f = rng.haar_unitary(d);
        const double lam = 0.9, rho = 2.3;
        const cplx xval = rng.complex_gaussian();
        const CMatrix x = rank_one(column(f, 0), column(e, 0)) * xval;  // X f1 = xval e1
        RankOneInstance inst{e, f, std::vector<double>(d, lam),
                             std::vector<double>(d, rho), t, x, default_shift_grid()};
        const InequalityReport r = check_rank_one_cs(RankOneForm::plain, inst, tol);
        const double slack = std::pow(double(d), t.half_minus_half_recip_q() +
                                                     t.half_recip_r());
        require(r.pass, "aligned probe fails");
        require(std::abs(r.rhs - slack * r.lhs) <= 1e-12 * std::max(1.0, r.rhs),
                "closed-form slack violated: rhs/lhs = " + std::to_string(r.rhs / r.lhs) +
                    " want " + std::to_string(slack));
    }
    detail = scratch + "; zero/scalar/aligned probes exact";
}

void criterion8(std::string& detail) {
    // defect of c*I equals (1 - c^2)^n I to 1e-12
    for (double c : {0.0, 0.3, 0.9, 1.0}) {
        const CMatrix ci = CMatrix::identity(4) * c;
        for (int n = 1; n <= 6; ++n) {
            const double want = std::pow(1.0 - c * c, n);
            const double err =
                (defect(ci, n, DefectSide::hyper).value - CMatrix::identity(4) * want)
                    .max_abs_entry();
            require(err <= 1e-12, "scalar defect closed form fails at c = " +
                                      std::to_string(c) + ", n = " + std::to_string(n));
        }
    }

    // dominance displays, 300 sampled contractions each, lengths up to 10
    uint64_t block = 80;
    for (std::string id :
         {"dominance_right_gram", "dominance_left_gram", "dominance_right_gram_dual",
          "dominance_left_gram_dual", "dominance_right_gram_mixed",
          "dominance_left_gram_mixed"}) {
        const bool mixed = id.find("mixed") != std::string::npos;
        for (int k = 0; k < 300; ++k) {
            SampleSpec spec;
            spec.dim_hi = 5;
            spec.hyper_length = 1 + (k % 10);
            spec.order_n = mixed ? 1 + (k % 2) : 1 + (k % 3);
            spec.order_m = mixed ? 1 + ((k / 2) % 2) : 1 + ((k / 3) % 3);
            const SampledTrial t =
                run_checker(id, spec, seed_at(block, uint64_t(k)));
            require(t.report.pass, id + ": min-eigenvalue margin " +
                                       std::to_string(t.report.gap) + " at trial " +
                                       std::to_string(k));
        }
        ++block;
    }

    // defect-family bounds: 300 instances at orders (1,1), 100 at (2,2)
    {
        SampleSpec spec;
        spec.dim_hi = 5;
        spec.order_n = 1;
        spec.order_m = 1;
        std::string scratch;
        sweep("defect_family_cs", spec, 300, 90, scratch);
        spec.order_n = 2;
        spec.order_m = 2;
        sweep("defect_family_cs", spec, 100, 91, scratch);
    }
    detail = "scalar defects exact; 6 x 300 dominance margins >= -1e-9; 400 bound checks";
}

void criterion9(std::string& detail) {
    RunConfig cfg;
    cfg.checkers = {"all"};
    cfg.trials = 2;
    cfg.spec.dim_hi = 4;
    cfg.spec.len_hi = 4;
    cfg.spec.hyper_length = 5;
    cfg.base_seed = 0xD1CE;

    std::ostringstream first, second, devnull;
    const RunSummary s1 = run(cfg, &first, devnull);
    const RunSummary s2 = run(cfg, &second, devnull);
    require(s1.all_pass() && s2.all_pass(), "determinism sub-suite has failures");
    require(s1.rows.size() == checker_ids().size(),
            "the 'all' selection does not cover every checker");

    auto strip = [](const std::string& streamed) {
        std::vector<json> out;
        std::istringstream in(streamed);
        std::string line;
        while (std::getline(in, line)) {
            json rec = json::parse(line);
            rec.erase("wall_ms");  // the only nondeterministic field
            out.push_back(std::move(rec));
        }
        return out;
    };
    require(strip(first.str()) == strip(second.str()),
            "record streams differ between identical runs");

    int replayed = 0;
    std::istringstream in(first.str());
    std::string line;
    while (std::getline(in, line)) {
        std::ostringstream log;
        const int rc = replay_record(json::parse(line), log);
        require(rc == 0, "replay mismatch on record " + std::to_string(replayed));
        ++replayed;
    }
    detail = std::to_string(replayed) + " records replayed bit-identically";
}

}  // namespace

int main() {
    criterion(1, "block operator-matrix norms match their assembled oracles",
              criterion1);
    criterion(2, "rank-one basis family Gram identities", criterion2);
    criterion(3, "norm ordering under two-sided Loewner domination", criterion3);
    criterion(4, "twelve endpoint inequality variants with equality probes",
              criterion4);
    criterion(5, "weighted transformer bound, plain and regularized sup forms",
              criterion5);
    criterion(6, "special cases and reweighted forms agree with the general bound",
              criterion6);
    criterion(7, "rank-one extremal families and norm independence", criterion7);
    criterion(8, "defect operators, dominance displays, contraction applications",
              criterion8);
    criterion(9, "bit-exact replay and run-to-run determinism", criterion9);

    if (g_failures > 0) {
        std::printf("%d criterion(s) FAILED\n", g_failures);
        return 1;
    }
    std::printf("all 9 criteria PASS\n");
    return 0;
}
