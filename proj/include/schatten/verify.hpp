#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "schatten/exponent.hpp"
#include "schatten/transformer.hpp"

namespace schatten::verify {

// Mixed-tolerance comparison: pass iff lhs <= rhs*(1+rel) + abs.
// Spectral round-off scales with magnitude, so both terms are needed.
struct Tolerance {
    double rel = 1e-8;
    double abs = 1e-10;
    bool le(double lhs, double rhs) const { return lhs <= rhs * (1.0 + rel) + abs; }
};

// Default logarithmic shift grid, descending: the supremum is approached as
// the shifts decrease, so the last entry dominates.
std::vector<double> default_shift_grid();

// One trial's verdict.
struct InequalityReport {
    std::string checker_id;
    std::map<std::string, double> params;
    double lhs = 0.0;
    double rhs = 0.0;
    double gap = 0.0;              // rhs - lhs
    double relative_margin = 0.0;  // gap / max(rhs, tol.abs)
    bool pass = false;
    uint64_t seed = 0;
    std::string notes;
};

InequalityReport make_report(std::string checker_id, double lhs, double rhs,
                             const Tolerance& tol);

// ---------------------------------------------------------------------------
// Norm ordering under the Loewner preconditions A*A <= C*C and B B* <= D D*:
// ||A X B||_s <= ||C X D||_s. Throws PreconditionUnmet.
struct DoubleMonoInstance {
    CMatrix a, b, c, d, x;
    Exponent s = Exponent::finite(2.0);
};
InequalityReport check_double_monotonicity(const DoubleMonoInstance& inst,
                                           const Tolerance& tol);

// ---------------------------------------------------------------------------
// Endpoint inequalities for transformer sums with factor families C, D.
// Twelve displays: {operator, Hilbert-Schmidt x2, trace} endpoints, each in a
// regularized, a plain, and a reduced (C = D = I) form. "right"/"left" names
// which Gram sums carry the normalization (sum M*M vs sum M M*).
enum class EndpointVariant {
    op_reg,
    hs_right_reg,
    hs_left_reg,
    tr_reg,
    op_plain,
    hs_right_plain,
    hs_left_plain,
    tr_plain,
    op_reduced,
    hs_right_reduced,
    hs_left_reduced,
    tr_reduced,
};
const char* endpoint_variant_name(EndpointVariant v);

struct EndpointInstance {
    WeightedFamily fam_a;  // primary weights = lambda
    WeightedFamily fam_b;  // primary weights = w
    WeightedFamily fam_c;  // unit weights, same dimension as fam_a
    WeightedFamily fam_d;  // primary weights = w, same dimension as fam_b
    double eta, eps, zeta, theta;  // regularization shifts, all > 0
    CMatrix x;
};
InequalityReport check_endpoint(EndpointVariant v, const EndpointInstance& inst,
                                const Tolerance& tol);

// ---------------------------------------------------------------------------
// The weighted Cauchy-Schwarz inequality for transformer sums
//   || sum lam^(1/2-1/2q) w^(1/2r) A_n X B_n ||_s
// bounded through the four Gram sums, in the plain form and in the
// shift-regularized sup form (max over the grid + monotone trend check).
enum class WeightedCsForm { plain, sup };

struct WeightedCsInstance {
    WeightedFamily fam_a;  // primary = lambda
    WeightedFamily fam_b;  // primary = w
    SchattenTriple triple;
    CMatrix x;
    std::vector<double> grid;  // descending shifts (sup form)
};
InequalityReport check_weighted_cs(WeightedCsForm form, const WeightedCsInstance& inst,
                                   const Tolerance& tol);

// ---------------------------------------------------------------------------
// Special cases that drop one summability requirement. low = s in [1,2],
// high = s in [2,inf); left/right names the family whose weighted Gram norm
// survives on the bound. Each checker also recomputes the bound through the
// general inequality at the mapped exponents and requires 1e-12 agreement.
enum class ReducedCsCase { low_left, low_right, high_left, high_right };
const char* reduced_case_name(ReducedCsCase c);

struct ReducedCsInstance {
    WeightedFamily fam_a;
    WeightedFamily fam_b;
    double s;
    CMatrix x;
};
InequalityReport check_reduced_cs(ReducedCsCase c, const ReducedCsInstance& inst,
                                  const Tolerance& tol);
SchattenTriple reduced_case_triple(ReducedCsCase c, double s);

// ---------------------------------------------------------------------------
// Reweighted forms: the weight pattern moves out of the transformer
// coefficients into the Gram sums (rebalanced, coefficient-free sum), or
// enters through the power substitution lam = gamma^(2q/(q-1)), w = rho^(2r)
// (substituted). Checked against the general inequality on the transformed
// families to 1e-12 on both sides.
enum class RebalancedForm { rebalanced_sup, rebalanced_plain, substituted_sup, substituted_plain };
const char* rebalanced_form_name(RebalancedForm f);

struct RebalancedCsInstance {
    WeightedFamily fam_a;  // primary = lambda (rebalanced) or gamma (substituted)
    WeightedFamily fam_b;  // primary = w (rebalanced) or rho (substituted)
    SchattenTriple triple;
    CMatrix x;
    std::vector<double> grid;
};
InequalityReport check_rebalanced_cs(RebalancedForm f, const RebalancedCsInstance& inst,
                                     const Tolerance& tol);

// ---------------------------------------------------------------------------
// Rank-one extremal families built from two orthonormal bases: the
// transformer output is rank one with coefficients
//   c_n = lam^(1/2-1/2q) rho^(1/2r) <X f_1, e_n>,
// its Schatten-s norm equals ||c||_2 for every s, and the displayed bounds
// close in terms of ||X f_1||. Holder forms use gamma, w with sum gamma^(2q/(q-1)),
// sum w^(2r). Throws NotOrthonormal.
enum class RankOneForm { plain, sup, holder_plain, holder_sup };
const char* rank_one_form_name(RankOneForm f);

struct RankOneInstance {
    CMatrix e_basis;  // columns form an ONB
    CMatrix f_basis;
    std::vector<double> lam;  // lambda (plain/sup) or gamma (holder)
    std::vector<double> rho;  // rho (plain/sup) or w (holder)
    SchattenTriple triple;
    CMatrix x;
    std::vector<double> grid;
};
InequalityReport check_rank_one_cs(RankOneForm f, const RankOneInstance& inst,
                                   const Tolerance& tol);

// ---------------------------------------------------------------------------
// Application to defect families of contractions: both displayed bounds
// (plain and shift-regularized sup) for the families
//   (sqrt(defect(C,1,hyper)) C^n sqrt(defect(C,N,cohyper)))_n
// with binomial weights, against the defect-operator norms.
// Throws NotHypercontractive.
struct DefectCsInstance {
    CMatrix c;  // N-cohypercontractive
    CMatrix d;  // M-cohypercontractive
    int order_n = 1;
    int order_m = 1;
    int length = 8;
    SchattenTriple triple;
    CMatrix x;
    std::vector<double> grid;
    double psd_tol = 1e-9;
};
InequalityReport check_defect_cs(const DefectCsInstance& inst, const Tolerance& tol);

// ---------------------------------------------------------------------------
// Loewner dominance of truncated defect-family Gram sums by the matching
// defect operator. Six displays; "dual" runs the same display on the second
// sampled contraction, "mixed" uses the two-order family. The report stores
// the minimal eigenvalue of (bound - partial sum) as the gap; pass means the
// margin is >= -psd_tol.
enum class DominanceKind {
    right_gram,
    left_gram,
    right_gram_dual,
    left_gram_dual,
    right_gram_mixed,
    left_gram_mixed,
};
const char* dominance_kind_name(DominanceKind k);

struct DominanceInstance {
    CMatrix c;
    int order_n = 1;
    int order_m = 1;
    int length = 8;
    double psd_tol = 1e-9;
};
InequalityReport check_dominance(DominanceKind k, const DominanceInstance& inst,
                                 const Tolerance& tol);

// ---------------------------------------------------------------------------
// Shared internals, exposed for the samplers and tests.

// max over the grid pairs (eta, zeta) of || L(eta) T R(zeta) ||_s where
// L(eta) = left.shifted_power(eta, t_left) and likewise R. Also walks the
// diagonal of the descending grid and records whether the norm is
// non-decreasing within step_tol per step.
struct SupScan {
    double max_value = 0.0;
    bool monotone = true;
    double worst_step = 0.0;  // most negative increment along the diagonal
};
SupScan sup_sandwich(const HermitianSpectrum& left, double t_left,
                     const HermitianSpectrum& right, double t_right, const CMatrix& t,
                     Exponent s, const std::vector<double>& grid, double step_tol);

}  // namespace schatten::verify
