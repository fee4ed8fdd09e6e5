#include "schatten/sampler.hpp"

#include <algorithm>
#include <cmath>

#include "schatten/hypercontraction.hpp"

namespace schatten::cli {

using namespace schatten::verify;

std::map<std::string, double> SampleSpec::to_params() const {
    std::map<std::string, double> p;
    p["dim_lo"] = dim_lo;
    p["dim_hi"] = dim_hi;
    p["len_lo"] = len_lo;
    p["len_hi"] = len_hi;
    p["order_n"] = order_n;
    p["order_m"] = order_m;
    p["hyper_length"] = hyper_length;
    p["tol_rel"] = tol.rel;
    p["tol_abs"] = tol.abs;
    p["pin_s"] = pin_s;
    p["pin_q"] = pin_q;
    p["pin_r"] = pin_r;
    p["rejection_cap"] = rejection_cap;
    for (std::size_t i = 0; i < grid.size(); ++i)
        p["grid" + std::to_string(i)] = grid[i];
    return p;
}

SampleSpec SampleSpec::from_params(const std::map<std::string, double>& p) {
    SampleSpec s;
    const auto get = [&](const char* k, double fallback) {
        const auto it = p.find(k);
        return it == p.end() ? fallback : it->second;
    };
    s.dim_lo = int(get("dim_lo", s.dim_lo));
    s.dim_hi = int(get("dim_hi", s.dim_hi));
    s.len_lo = int(get("len_lo", s.len_lo));
    s.len_hi = int(get("len_hi", s.len_hi));
    s.order_n = int(get("order_n", s.order_n));
    s.order_m = int(get("order_m", s.order_m));
    s.hyper_length = int(get("hyper_length", s.hyper_length));
    s.tol.rel = get("tol_rel", s.tol.rel);
    s.tol.abs = get("tol_abs", s.tol.abs);
    s.pin_s = get("pin_s", 0.0);
    s.pin_q = get("pin_q", 0.0);
    s.pin_r = get("pin_r", 0.0);
    s.rejection_cap = int(get("rejection_cap", s.rejection_cap));
    std::vector<double> grid;
    for (std::size_t i = 0;; ++i) {
        const auto it = p.find("grid" + std::to_string(i));
        if (it == p.end()) break;
        grid.push_back(it->second);
    }
    if (!grid.empty()) s.grid = std::move(grid);
    return s;
}

namespace {

Exponent exponent_from_pin(double pin) {
    return std::isinf(pin) ? Exponent::infinity() : Exponent::finite(pin);
}

Exponent draw_exponent(Rng& rng, double inf_prob) {
    if (rng.uniform01() < inf_prob) return Exponent::infinity();
    return Exponent::finite(rng.log_uniform(1.0, 10.0));
}

}  // namespace

SchattenTriple sample_triple(const SampleSpec& spec, Rng& rng) {
    Exponent q = spec.pin_q != 0.0 ? exponent_from_pin(spec.pin_q)
                                   : draw_exponent(rng, 0.15);
    Exponent r = spec.pin_r != 0.0 ? exponent_from_pin(spec.pin_r)
                                   : draw_exponent(rng, 0.15);
    if (q.is_inf() && r.is_inf() && spec.pin_r == 0.0)
        r = Exponent::finite(rng.log_uniform(1.0, 10.0));
    return SchattenTriple::from_qr(q, r);
}

namespace {

// substituted/Holder forms need q bounded away from 1 and finite r
SchattenTriple sample_triple_substituted(const SampleSpec& spec, Rng& rng) {
    Exponent q = spec.pin_q != 0.0
                     ? exponent_from_pin(spec.pin_q)
                     : (rng.uniform01() < 0.1
                            ? Exponent::infinity()
                            : Exponent::finite(rng.log_uniform(1.25, 10.0)));
    Exponent r = spec.pin_r != 0.0 ? exponent_from_pin(spec.pin_r)
                                   : Exponent::finite(rng.log_uniform(1.0, 10.0));
    return SchattenTriple::from_qr(q, r);
}

Exponent sample_single_exponent(const SampleSpec& spec, Rng& rng) {
    if (spec.pin_s != 0.0) return exponent_from_pin(spec.pin_s);
    return draw_exponent(rng, 0.2);
}

}  // namespace

CMatrix sample_x(Rng& rng, int rows, int cols) {
    const double u = rng.uniform01();
    int rank = 0;  // 0 = dense
    if (u < 0.2)
        rank = 1;
    else if (u < 0.3)
        rank = std::min(2, std::min(rows, cols));
    if (rank == 0) return rng.gaussian_matrix(rows, cols);
    CMatrix x(rows, cols);
    for (int k = 0; k < rank; ++k) {
        const std::vector<cplx> g = rng.gaussian_vector(rows);
        const std::vector<cplx> h = rng.gaussian_vector(cols);
        x = x + rank_one(h, g);  // g h^H
    }
    return x;
}

WeightedFamily sample_family(Rng& rng, int dim, int length, double w_lo, double w_hi) {
    std::vector<CMatrix> members;
    members.reserve(std::size_t(length));
    for (int n = 0; n < length; ++n) members.push_back(rng.gaussian_matrix(dim, dim));
    return WeightedFamily(std::move(members), rng.log_uniform_weights(length, w_lo, w_hi));
}

CMatrix sample_cohyper_contraction(Rng& rng, int dim, int order, double tol, int cap,
                                   int* attempts) {
    for (int k = 1; k <= cap; ++k) {
        const double radius = 1.0 - rng.uniform01();  // (0, 1]
        CMatrix c = rng.random_contraction(dim, radius);
        if (is_cohypercontractive(c, order, tol).ok) {
            if (attempts != nullptr) *attempts = k;
            return c;
        }
    }
    throw SamplerExhausted("cohypercontraction sampler: no acceptance in " +
                           std::to_string(cap) + " attempts (order " +
                           std::to_string(order) + ")");
}

CMatrix sample_hyper_cohyper_contraction(Rng& rng, int dim, int order_hyper,
                                         int order_cohyper, double tol, int cap,
                                         int* attempts) {
    for (int k = 1; k <= cap; ++k) {
        const double radius = 1.0 - rng.uniform01();
        CMatrix c = rng.random_contraction(dim, radius);
        if (is_hypercontractive(c, order_hyper, tol).ok &&
            is_cohypercontractive(c, order_cohyper, tol).ok) {
            if (attempts != nullptr) *attempts = k;
            return c;
        }
    }
    throw SamplerExhausted("hyper+cohyper sampler: no acceptance in " +
                           std::to_string(cap) + " attempts (orders " +
                           std::to_string(order_hyper) + ", " +
                           std::to_string(order_cohyper) + ")");
}

namespace {

int draw_dim(const SampleSpec& spec, Rng& rng) {
    return rng.uniform_int(spec.dim_lo, spec.dim_hi);
}
int draw_len(const SampleSpec& spec, Rng& rng) {
    return rng.uniform_int(spec.len_lo, spec.len_hi);
}

// ---- per-checker samplers -------------------------------------------------

SampledTrial trial_double_monotonicity(const SampleSpec& spec, uint64_t seed) {
    Rng rng(seed);
    const int da = draw_dim(spec, rng), db = draw_dim(spec, rng);
    DoubleMonoInstance inst{CMatrix(), CMatrix(), CMatrix(), CMatrix(), CMatrix(),
                            sample_single_exponent(spec, rng)};
    inst.a = rng.gaussian_matrix(da, da);
    inst.b = rng.gaussian_matrix(db, db);
    const CMatrix q1 = rng.random_psd(da);
    const CMatrix q2 = rng.random_psd(db);
    // C = U (A*A + Q1)^(1/2) keeps C*C = A*A + Q1; D mirrors it on the left side
    inst.c = rng.haar_unitary(da) *
             frac_power((inst.a.adjoint() * inst.a).symmetrized() + q1, 0.5);
    inst.d = frac_power((inst.b * inst.b.adjoint()).symmetrized() + q2, 0.5) *
             rng.haar_unitary(db);
    inst.x = sample_x(rng, da, db);

    SampledTrial out{check_double_monotonicity(inst, spec.tol), json()};
    out.report.params["dim_a"] = da;
    out.report.params["dim_b"] = db;
    out.instance = json{{"a", to_json(inst.a)}, {"b", to_json(inst.b)},
                        {"c", to_json(inst.c)}, {"d", to_json(inst.d)},
                        {"x", to_json(inst.x)},
                        {"s", inst.s.is_inf() ? json("inf") : json(inst.s.value())}};
    return out;
}

SampledTrial trial_endpoint(EndpointVariant v, const SampleSpec& spec, uint64_t seed) {
    Rng rng(seed);
    const int da = draw_dim(spec, rng), db = draw_dim(spec, rng);
    const int len = draw_len(spec, rng);
    WeightedFamily fam_a = sample_family(rng, da, len, 1e-2, 1e2);
    WeightedFamily fam_b = sample_family(rng, db, len, 1e-2, 1e2);
    std::vector<CMatrix> cs, ds;
    for (int n = 0; n < len; ++n) cs.push_back(rng.gaussian_matrix(da, da));
    for (int n = 0; n < len; ++n) ds.push_back(rng.gaussian_matrix(db, db));
    WeightedFamily fam_c = WeightedFamily::with_unit_weights(std::move(cs));
    WeightedFamily fam_d =
        WeightedFamily(std::move(ds), fam_b.primary_weights());  // w rides on D
    EndpointInstance inst{std::move(fam_a),
                          std::move(fam_b),
                          std::move(fam_c),
                          std::move(fam_d),
                          rng.log_uniform(1e-4, 1e2),
                          rng.log_uniform(1e-4, 1e2),
                          rng.log_uniform(1e-4, 1e2),
                          rng.log_uniform(1e-4, 1e2),
                          CMatrix()};
    inst.x = sample_x(rng, da, db);

    SampledTrial out{check_endpoint(v, inst, spec.tol), json()};
    out.report.params["dim_a"] = da;
    out.report.params["dim_b"] = db;
    out.report.params["len"] = len;
    out.instance = json{{"family_a", to_json(inst.fam_a)},
                        {"family_b", to_json(inst.fam_b)},
                        {"family_c", to_json(inst.fam_c)},
                        {"family_d", to_json(inst.fam_d)},
                        {"eta", inst.eta},
                        {"eps", inst.eps},
                        {"zeta", inst.zeta},
                        {"theta", inst.theta},
                        {"x", to_json(inst.x)}};
    return out;
}

json triple_json(const SchattenTriple& t) {
    return json{{"q", t.q.is_inf() ? json("inf") : json(t.q.value())},
                {"r", t.r.is_inf() ? json("inf") : json(t.r.value())},
                {"s", t.s}};
}

SampledTrial trial_weighted_cs(WeightedCsForm form, const SampleSpec& spec,
                               uint64_t seed) {
    Rng rng(seed);
    const int da = draw_dim(spec, rng), db = draw_dim(spec, rng);
    const int len = draw_len(spec, rng);
    WeightedCsInstance inst{sample_family(rng, da, len, 1e-2, 1e2),
                            sample_family(rng, db, len, 1e-2, 1e2),
                            sample_triple(spec, rng), CMatrix(), spec.grid};
    inst.x = sample_x(rng, da, db);

    SampledTrial out{check_weighted_cs(form, inst, spec.tol), json()};
    out.report.params["dim_a"] = da;
    out.report.params["dim_b"] = db;
    out.report.params["len"] = len;
    out.instance = json{{"family_a", to_json(inst.fam_a)},
                        {"family_b", to_json(inst.fam_b)},
                        {"triple", triple_json(inst.triple)},
                        {"x", to_json(inst.x)},
                        {"grid", inst.grid}};
    return out;
}

SampledTrial trial_reduced_cs(ReducedCsCase c, const SampleSpec& spec, uint64_t seed) {
    Rng rng(seed);
    const int da = draw_dim(spec, rng), db = draw_dim(spec, rng);
    const int len = draw_len(spec, rng);
    const bool low = (c == ReducedCsCase::low_left || c == ReducedCsCase::low_right);
    const double s = spec.pin_s != 0.0 ? spec.pin_s
                                       : (low ? rng.uniform(1.0, 2.0)
                                              : rng.uniform(2.0, 10.0));
    ReducedCsInstance inst{sample_family(rng, da, len, 1e-2, 1e2),
                           sample_family(rng, db, len, 1e-2, 1e2), s, CMatrix()};
    inst.x = sample_x(rng, da, db);

    SampledTrial out{check_reduced_cs(c, inst, spec.tol), json()};
    out.report.params["dim_a"] = da;
    out.report.params["dim_b"] = db;
    out.report.params["len"] = len;
    out.instance = json{{"family_a", to_json(inst.fam_a)},
                        {"family_b", to_json(inst.fam_b)},
                        {"s", s},
                        {"x", to_json(inst.x)}};
    return out;
}

SampledTrial trial_rebalanced_cs(RebalancedForm f, const SampleSpec& spec,
                                 uint64_t seed) {
    Rng rng(seed);
    const int da = draw_dim(spec, rng), db = draw_dim(spec, rng);
    const int len = draw_len(spec, rng);
    const bool substituted = (f == RebalancedForm::substituted_sup ||
                              f == RebalancedForm::substituted_plain);
    const double w_lo = substituted ? 1e-1 : 1e-2;
    const double w_hi = substituted ? 1e1 : 1e2;
    RebalancedCsInstance inst{
        sample_family(rng, da, len, w_lo, w_hi),
        sample_family(rng, db, len, w_lo, w_hi),
        substituted ? sample_triple_substituted(spec, rng) : sample_triple(spec, rng),
        CMatrix(), spec.grid};
    inst.x = sample_x(rng, da, db);

    SampledTrial out{check_rebalanced_cs(f, inst, spec.tol), json()};
    out.report.params["dim_a"] = da;
    out.report.params["dim_b"] = db;
    out.report.params["len"] = len;
    out.instance = json{{"family_a", to_json(inst.fam_a)},
                        {"family_b", to_json(inst.fam_b)},
                        {"triple", triple_json(inst.triple)},
                        {"x", to_json(inst.x)},
                        {"grid", inst.grid}};
    return out;
}

SampledTrial trial_rank_one_cs(RankOneForm f, const SampleSpec& spec, uint64_t seed) {
    Rng rng(seed);
    const int d = draw_dim(spec, rng);
    const bool holder =
        (f == RankOneForm::holder_plain || f == RankOneForm::holder_sup);
    const double w_lo = holder ? 1e-1 : 1e-2;
    const double w_hi = holder ? 1e1 : 1e2;
    RankOneInstance inst{rng.haar_unitary(d),
                         rng.haar_unitary(d),
                         rng.log_uniform_weights(d, w_lo, w_hi),
                         rng.log_uniform_weights(d, w_lo, w_hi),
                         holder ? sample_triple_substituted(spec, rng)
                                : sample_triple(spec, rng),
                         CMatrix(),
                         spec.grid};
    inst.x = sample_x(rng, d, d);

    SampledTrial out{check_rank_one_cs(f, inst, spec.tol), json()};
    out.report.params["dim"] = d;
    out.instance = json{{"e_basis", to_json(inst.e_basis)},
                        {"f_basis", to_json(inst.f_basis)},
                        {"lam", inst.lam},
                        {"rho", inst.rho},
                        {"triple", triple_json(inst.triple)},
                        {"x", to_json(inst.x)},
                        {"grid", inst.grid}};
    return out;
}

SampledTrial trial_defect_cs(const SampleSpec& spec, uint64_t seed) {
    Rng rng(seed);
    const int d = draw_dim(spec, rng);
    int attempts_c = 0, attempts_d = 0;
    DefectCsInstance inst;
    inst.c = sample_cohyper_contraction(rng, d, spec.order_n, 1e-9, spec.rejection_cap,
                                        &attempts_c);
    inst.d = sample_cohyper_contraction(rng, d, spec.order_m, 1e-9, spec.rejection_cap,
                                        &attempts_d);
    inst.order_n = spec.order_n;
    inst.order_m = spec.order_m;
    inst.length = spec.hyper_length;
    inst.triple = sample_triple(spec, rng);
    inst.x = sample_x(rng, d, d);
    inst.grid = spec.grid;

    SampledTrial out{check_defect_cs(inst, spec.tol), json()};
    out.report.params["dim"] = d;
    out.report.params["attempts_c"] = attempts_c;
    out.report.params["attempts_d"] = attempts_d;
    out.instance = json{{"c", to_json(inst.c)},
                        {"d", to_json(inst.d)},
                        {"order_n", inst.order_n},
                        {"order_m", inst.order_m},
                        {"length", inst.length},
                        {"triple", triple_json(inst.triple)},
                        {"x", to_json(inst.x)},
                        {"grid", inst.grid}};
    return out;
}

SampledTrial trial_dominance(DominanceKind k, const SampleSpec& spec, uint64_t seed) {
    Rng rng(seed);
    const int d = draw_dim(spec, rng);
    int attempts = 0;
    DominanceInstance inst;
    inst.order_n = spec.order_n;
    inst.order_m = spec.order_m;
    inst.length = spec.hyper_length;
    const bool mixed = (k == DominanceKind::right_gram_mixed ||
                        k == DominanceKind::left_gram_mixed);
    const bool dual = (k == DominanceKind::right_gram_dual ||
                       k == DominanceKind::left_gram_dual);
    if (mixed) {
        inst.c = sample_hyper_cohyper_contraction(rng, d, spec.order_n, spec.order_m,
                                                  1e-9, spec.rejection_cap, &attempts);
    } else {
        inst.c = sample_cohyper_contraction(rng, d, dual ? spec.order_m : spec.order_n,
                                            1e-9, spec.rejection_cap, &attempts);
    }

    SampledTrial out{check_dominance(k, inst, spec.tol), json()};
    out.report.params["dim"] = d;
    out.report.params["attempts"] = attempts;
    out.instance = json{{"c", to_json(inst.c)},
                        {"order_n", inst.order_n},
                        {"order_m", inst.order_m},
                        {"length", inst.length}};
    return out;
}

}  // namespace

const std::vector<std::string>& checker_ids() {
    static const std::vector<std::string> ids = {
        "double_monotonicity",
        "endpoint_op_reg",
        "endpoint_hs_right_reg",
        "endpoint_hs_left_reg",
        "endpoint_tr_reg",
        "endpoint_op_plain",
        "endpoint_hs_right_plain",
        "endpoint_hs_left_plain",
        "endpoint_tr_plain",
        "endpoint_op_reduced",
        "endpoint_hs_right_reduced",
        "endpoint_hs_left_reduced",
        "endpoint_tr_reduced",
        "weighted_cs_plain",
        "weighted_cs_sup",
        "cs_low_s_left",
        "cs_low_s_right",
        "cs_high_s_left",
        "cs_high_s_right",
        "rebalanced_cs_sup",
        "rebalanced_cs_plain",
        "substituted_cs_sup",
        "substituted_cs_plain",
        "rank_one_cs_plain",
        "rank_one_cs_sup",
        "rank_one_cs_holder_plain",
        "rank_one_cs_holder_sup",
        "defect_family_cs",
        "dominance_right_gram",
        "dominance_left_gram",
        "dominance_right_gram_dual",
        "dominance_left_gram_dual",
        "dominance_right_gram_mixed",
        "dominance_left_gram_mixed",
    };
    return ids;
}

bool is_checker_id(const std::string& id) {
    const auto& ids = checker_ids();
    return std::find(ids.begin(), ids.end(), id) != ids.end();
}

SampledTrial run_checker(const std::string& id, const SampleSpec& spec, uint64_t seed) {
    SampledTrial trial = [&] {
        if (id == "double_monotonicity") return trial_double_monotonicity(spec, seed);
        if (id == "endpoint_op_reg")
            return trial_endpoint(EndpointVariant::op_reg, spec, seed);
        if (id == "endpoint_hs_right_reg")
            return trial_endpoint(EndpointVariant::hs_right_reg, spec, seed);
        if (id == "endpoint_hs_left_reg")
            return trial_endpoint(EndpointVariant::hs_left_reg, spec, seed);
        if (id == "endpoint_tr_reg")
            return trial_endpoint(EndpointVariant::tr_reg, spec, seed);
        if (id == "endpoint_op_plain")
            return trial_endpoint(EndpointVariant::op_plain, spec, seed);
        if (id == "endpoint_hs_right_plain")
            return trial_endpoint(EndpointVariant::hs_right_plain, spec, seed);
        if (id == "endpoint_hs_left_plain")
            return trial_endpoint(EndpointVariant::hs_left_plain, spec, seed);
        if (id == "endpoint_tr_plain")
            return trial_endpoint(EndpointVariant::tr_plain, spec, seed);
        if (id == "endpoint_op_reduced")
            return trial_endpoint(EndpointVariant::op_reduced, spec, seed);
        if (id == "endpoint_hs_right_reduced")
            return trial_endpoint(EndpointVariant::hs_right_reduced, spec, seed);
        if (id == "endpoint_hs_left_reduced")
            return trial_endpoint(EndpointVariant::hs_left_reduced, spec, seed);
        if (id == "endpoint_tr_reduced")
            return trial_endpoint(EndpointVariant::tr_reduced, spec, seed);
        if (id == "weighted_cs_plain")
            return trial_weighted_cs(WeightedCsForm::plain, spec, seed);
        if (id == "weighted_cs_sup")
            return trial_weighted_cs(WeightedCsForm::sup, spec, seed);
        if (id == "cs_low_s_left")
            return trial_reduced_cs(ReducedCsCase::low_left, spec, seed);
        if (id == "cs_low_s_right")
            return trial_reduced_cs(ReducedCsCase::low_right, spec, seed);
        if (id == "cs_high_s_left")
            return trial_reduced_cs(ReducedCsCase::high_left, spec, seed);
        if (id == "cs_high_s_right")
            return trial_reduced_cs(ReducedCsCase::high_right, spec, seed);
        if (id == "rebalanced_cs_sup")
            return trial_rebalanced_cs(RebalancedForm::rebalanced_sup, spec, seed);
        if (id == "rebalanced_cs_plain")
            return trial_rebalanced_cs(RebalancedForm::rebalanced_plain, spec, seed);
        if (id == "substituted_cs_sup")
            return trial_rebalanced_cs(RebalancedForm::substituted_sup, spec, seed);
        if (id == "substituted_cs_plain")
            return trial_rebalanced_cs(RebalancedForm::substituted_plain, spec, seed);
        if (id == "rank_one_cs_plain")
            return trial_rank_one_cs(RankOneForm::plain, spec, seed);
        if (id == "rank_one_cs_sup")
            return trial_rank_one_cs(RankOneForm::sup, spec, seed);
        if (id == "rank_one_cs_holder_plain")
            return trial_rank_one_cs(RankOneForm::holder_plain, spec, seed);
        if (id == "rank_one_cs_holder_sup")
            return trial_rank_one_cs(RankOneForm::holder_sup, spec, seed);
        if (id == "defect_family_cs") return trial_defect_cs(spec, seed);
        if (id == "dominance_right_gram")
            return trial_dominance(DominanceKind::right_gram, spec, seed);
        if (id == "dominance_left_gram")
            return trial_dominance(DominanceKind::left_gram, spec, seed);
        if (id == "dominance_right_gram_dual")
            return trial_dominance(DominanceKind::right_gram_dual, spec, seed);
        if (id == "dominance_left_gram_dual")
            return trial_dominance(DominanceKind::left_gram_dual, spec, seed);
        if (id == "dominance_right_gram_mixed")
            return trial_dominance(DominanceKind::right_gram_mixed, spec, seed);
        if (id == "dominance_left_gram_mixed")
            return trial_dominance(DominanceKind::left_gram_mixed, spec, seed);
        throw VariantUnknown("unknown checker id: " + id);
    }();
    trial.report.seed = seed;
    for (const auto& [k, v] : spec.to_params()) trial.report.params.emplace(k, v);
    return trial;
}

}  // namespace schatten::cli
