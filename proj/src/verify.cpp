#include "schatten/verify.hpp"

#include <algorithm>
#include <cmath>

namespace schatten::verify {

std::vector<double> default_shift_grid() { return {1e2, 1.0, 1e-2, 1e-4, 1e-6}; }

InequalityReport make_report(std::string checker_id, double lhs, double rhs,
                             const Tolerance& tol) {
    InequalityReport r;
    r.checker_id = std::move(checker_id);
    r.lhs = lhs;
    r.rhs = rhs;
    r.gap = rhs - lhs;
    r.relative_margin = r.gap / std::max(rhs, tol.abs);
    r.pass = tol.le(lhs, rhs);
    return r;
}

SupScan sup_sandwich(const HermitianSpectrum& left, double t_left,
                     const HermitianSpectrum& right, double t_right, const CMatrix& t,
                     Exponent s, const std::vector<double>& grid, double step_tol) {
    SupScan out;
    std::vector<CMatrix> lfac, rfac;
    lfac.reserve(grid.size());
    rfac.reserve(grid.size());
    for (double g : grid) {
        lfac.push_back(left.shifted_power(g, t_left));
        rfac.push_back(right.shifted_power(g, t_right));
    }
    std::vector<double> diagonal(grid.size(), 0.0);
    for (std::size_t i = 0; i < grid.size(); ++i) {
        for (std::size_t j = 0; j < grid.size(); ++j) {
            const double v = schatten_norm(lfac[i] * t * rfac[j], s);
            out.max_value = std::max(out.max_value, v);
            if (i == j) diagonal[i] = v;
        }
    }
    // grid is descending, so the diagonal must be non-decreasing
    for (std::size_t i = 0; i + 1 < diagonal.size(); ++i) {
        const double step = diagonal[i + 1] - diagonal[i];
        out.worst_step = std::min(out.worst_step, step);
        if (step < -step_tol) out.monotone = false;
    }
    return out;
}

const char* endpoint_variant_name(EndpointVariant v) {
    switch (v) {
        case EndpointVariant::op_reg: return "endpoint_op_reg";
        case EndpointVariant::hs_right_reg: return "endpoint_hs_right_reg";
        case EndpointVariant::hs_left_reg: return "endpoint_hs_left_reg";
        case EndpointVariant::tr_reg: return "endpoint_tr_reg";
        case EndpointVariant::op_plain: return "endpoint_op_plain";
        case EndpointVariant::hs_right_plain: return "endpoint_hs_right_plain";
        case EndpointVariant::hs_left_plain: return "endpoint_hs_left_plain";
        case EndpointVariant::tr_plain: return "endpoint_tr_plain";
        case EndpointVariant::op_reduced: return "endpoint_op_reduced";
        case EndpointVariant::hs_right_reduced: return "endpoint_hs_right_reduced";
        case EndpointVariant::hs_left_reduced: return "endpoint_hs_left_reduced";
        case EndpointVariant::tr_reduced: return "endpoint_tr_reduced";
    }
    throw VariantUnknown("unknown endpoint variant");
}

const char* reduced_case_name(ReducedCsCase c) {
    switch (c) {
        case ReducedCsCase::low_left: return "cs_low_s_left";
        case ReducedCsCase::low_right: return "cs_low_s_right";
        case ReducedCsCase::high_left: return "cs_high_s_left";
        case ReducedCsCase::high_right: return "cs_high_s_right";
    }
    throw VariantUnknown("unknown reduced case");
}

const char* rebalanced_form_name(RebalancedForm f) {
    switch (f) {
        case RebalancedForm::rebalanced_sup: return "rebalanced_cs_sup";
        case RebalancedForm::rebalanced_plain: return "rebalanced_cs_plain";
        case RebalancedForm::substituted_sup: return "substituted_cs_sup";
        case RebalancedForm::substituted_plain: return "substituted_cs_plain";
    }
    throw VariantUnknown("unknown rebalanced form");
}

const char* rank_one_form_name(RankOneForm f) {
    switch (f) {
        case RankOneForm::plain: return "rank_one_cs_plain";
        case RankOneForm::sup: return "rank_one_cs_sup";
        case RankOneForm::holder_plain: return "rank_one_cs_holder_plain";
        case RankOneForm::holder_sup: return "rank_one_cs_holder_sup";
    }
    throw VariantUnknown("unknown rank-one form");
}

const char* dominance_kind_name(DominanceKind k) {
    switch (k) {
        case DominanceKind::right_gram: return "dominance_right_gram";
        case DominanceKind::left_gram: return "dominance_left_gram";
        case DominanceKind::right_gram_dual: return "dominance_right_gram_dual";
        case DominanceKind::left_gram_dual: return "dominance_left_gram_dual";
        case DominanceKind::right_gram_mixed: return "dominance_right_gram_mixed";
        case DominanceKind::left_gram_mixed: return "dominance_left_gram_mixed";
    }
    throw VariantUnknown("unknown dominance kind");
}

}  // namespace schatten::verify
