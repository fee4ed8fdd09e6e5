#include <cmath>
#include <string>

#include "schatten/hypercontraction.hpp"
#include "schatten/verify.hpp"

namespace schatten::verify {

namespace {

void check_onb(const CMatrix& basis, const char* which) {
    const CMatrix g = basis.adjoint() * basis;
    double defect = 0.0;
    for (int i = 0; i < g.rows(); ++i)
        for (int j = 0; j < g.cols(); ++j)
            defect = std::max(defect, std::abs(g(i, j) - (i == j ? cplx{1.0, 0.0}
                                                                 : cplx{0.0, 0.0})));
    if (defect > 1e-8)
        throw NotOrthonormal(std::string("rank-one check: basis ") + which +
                             " is not orthonormal");
}

double vec_sum(const std::vector<double>& v) {
    double s = 0.0;
    for (double x : v) s += x;
    return s;
}

}  // namespace

InequalityReport check_rank_one_cs(RankOneForm f, const RankOneInstance& inst,
                                   const Tolerance& tol) {
    const SchattenTriple& t = inst.triple;
    t.validate();
    check_onb(inst.e_basis, "e");
    check_onb(inst.f_basis, "f");
    const int d = inst.e_basis.rows();
    if (int(inst.lam.size()) != d || int(inst.rho.size()) != d)
        throw DimensionMismatch("rank-one check: weights must cover the full basis");

    const bool holder =
        (f == RankOneForm::holder_plain || f == RankOneForm::holder_sup);
    const bool sup_form = (f == RankOneForm::sup || f == RankOneForm::holder_sup);
    if (holder) {
        if (!t.q.is_inf() && t.q.value() == 1.0)
            throw BadSubstitution("Holder form requires q > 1");
        if (t.r.is_inf()) throw BadSubstitution("Holder form requires finite r");
    }

    const std::vector<cplx> e1 = column(inst.e_basis, 0);
    const std::vector<cplx> f1 = column(inst.f_basis, 0);
    const std::vector<cplx> xf1 = mat_vec(inst.x, f1);
    const double xf1_norm = vec_norm(xf1);

    // coefficient vector of the rank-one transformer output
    std::vector<cplx> coef(static_cast<std::size_t>(d));
    for (int n = 0; n < d; ++n) {
        const cplx inner_n = inner(xf1, column(inst.e_basis, n));  // <X f1, e_n>
        const double w =
            holder ? inst.lam[std::size_t(n)] * inst.rho[std::size_t(n)]
                   : std::pow(inst.lam[std::size_t(n)], t.half_minus_half_recip_q()) *
                         std::pow(inst.rho[std::size_t(n)], t.half_recip_r());
        coef[std::size_t(n)] = w * inner_n;
    }
    CMatrix sum(d, d);
    for (int n = 0; n < d; ++n) {
        const CMatrix term = rank_one(column(inst.f_basis, n), e1);  // f_n (x) e_1
        sum = sum + coef[std::size_t(n)] * term;
    }
    const double coef_norm = vec_norm(coef);

    // weight-sum factors of the displayed bounds
    double left_sum, right_factor;
    if (holder) {
        const double e_gamma = 2.0 / (1.0 - t.q.reciprocal());  // 2q/(q-1)
        const double e_w = 2.0 * t.r.value();
        double sg = 0.0, sw = 0.0;
        for (double g : inst.lam) sg += std::pow(g, e_gamma);
        for (double w : inst.rho) sw += std::pow(w, e_w);
        left_sum = sg;
        right_factor = std::pow(sw, t.half_recip_r());
    } else {
        left_sum = vec_sum(inst.lam);
        right_factor = std::pow(vec_sum(inst.rho), t.half_recip_r());
    }

    const Exponent s = Exponent::finite(t.s);
    double lhs, rhs;
    SupScan scan;
    if (sup_form) {
        // (eta I + left_sum * e1 (x) e1)^(1/2q - 1/2) acting on the sum
        const HermitianSpectrum left =
            hermitian_eigen(left_sum * rank_one(e1, e1), 1e-8);
        const HermitianSpectrum unit = hermitian_eigen(CMatrix::identity(d), 1e-8);
        // no right regularizer in the display: the right factor collapsed to 1
        scan = sup_sandwich(left, t.half_recip_q() - 0.5, unit, 0.0, sum, s, inst.grid,
                            tol.abs);
        lhs = scan.max_value;
        rhs = right_factor * xf1_norm;
    } else {
        lhs = schatten_norm(sum, s);
        rhs = std::pow(left_sum, t.half_minus_half_recip_q()) * right_factor * xf1_norm;
    }

    InequalityReport r = make_report(rank_one_form_name(f), lhs, rhs, tol);

    if (!sup_form) {
        // rank-one output: Schatten-s norm equals ||coef||_2 for every s
        bool norm_independent = true;
        double worst = 0.0;
        const Exponent probes[] = {Exponent::finite(1.0), Exponent::finite(2.0),
                                   Exponent::finite(3.0), Exponent::infinity()};
        for (const Exponent& p : probes) {
            const double err = std::abs(schatten_norm(sum, p) - coef_norm);
            worst = std::max(worst, err);
            if (err > 1e-10 * std::max(1.0, coef_norm)) norm_independent = false;
        }
        r.pass = r.pass && norm_independent;
        r.params["rank_one_norm_err"] = worst;
        if (!norm_independent) r.notes += "rank-one norm is not s-independent; ";
    } else {
        r.pass = r.pass && scan.monotone;
        r.params["monotone"] = scan.monotone ? 1.0 : 0.0;
        r.params["worst_step"] = scan.worst_step;
    }
    r.params["coef_norm"] = coef_norm;
    r.params["xf1_norm"] = xf1_norm;
    r.params["q"] = t.q.is_inf() ? INFINITY : t.q.value();
    r.params["r"] = t.r.is_inf() ? INFINITY : t.r.value();
    r.params["s"] = t.s;
    return r;
}

InequalityReport check_defect_cs(const DefectCsInstance& inst, const Tolerance& tol) {
    const SchattenTriple& t = inst.triple;
    t.validate();
    const Exponent s = Exponent::finite(t.s);

    const WeightedFamily fam_c =
        cohyper_family(inst.c, inst.order_n, inst.length, inst.psd_tol);
    const WeightedFamily fam_d =
        cohyper_family(inst.d, inst.order_m, inst.length, inst.psd_tol);

    const CMatrix sum = apply(
        TransformerSpec(fam_c, fam_d, t.half_minus_half_recip_q(), t.half_recip_r()),
        inst.x);

    const CMatrix g1_c = defect(inst.c, 1, DefectSide::hyper).value;
    const CMatrix gn_c = defect(inst.c, inst.order_n, DefectSide::cohyper).value;
    const CMatrix g1_d = defect(inst.d, 1, DefectSide::hyper).value;
    const CMatrix gm_d = defect(inst.d, inst.order_m, DefectSide::cohyper).value;

    const double core = schatten_norm(frac_power(gn_c, t.half_recip_q(), inst.psd_tol) *
                                          inst.x *
                                          frac_power(g1_d, t.half_recip_r(), inst.psd_tol),
                                      s);

    const double lhs_plain = schatten_norm(sum, s);
    const double rhs_plain =
        std::pow(operator_norm(g1_c), t.half_minus_half_recip_q()) *
        std::pow(operator_norm(gm_d), t.half_minus_half_recip_r()) * core;

    const SupScan scan = sup_sandwich(hermitian_eigen(g1_c, 1e-8),
                                      t.half_recip_q() - 0.5,
                                      hermitian_eigen(gm_d, 1e-8),
                                      t.half_recip_r() - 0.5, sum, s, inst.grid, tol.abs);

    InequalityReport r = make_report("defect_family_cs", lhs_plain, rhs_plain, tol);
    const bool sup_ok = tol.le(scan.max_value, core);
    r.pass = r.pass && sup_ok && scan.monotone;
    r.params["sup_lhs"] = scan.max_value;
    r.params["sup_rhs"] = core;
    r.params["monotone"] = scan.monotone ? 1.0 : 0.0;
    r.params["worst_step"] = scan.worst_step;
    r.params["order_n"] = inst.order_n;
    r.params["order_m"] = inst.order_m;
    r.params["length"] = inst.length;
    r.params["q"] = t.q.is_inf() ? INFINITY : t.q.value();
    r.params["r"] = t.r.is_inf() ? INFINITY : t.r.value();
    r.params["s"] = t.s;
    if (!sup_ok) r.notes += "regularized form exceeds its bound; ";
    if (!scan.monotone) r.notes += "sandwich norm not monotone along the grid; ";
    return r;
}

InequalityReport check_dominance(DominanceKind k, const DominanceInstance& inst,
                                 const Tolerance& tol) {
    const int order_first = inst.order_n;
    const int order_second = inst.order_m;

    CMatrix partial(inst.c.rows(), inst.c.rows());
    CMatrix bound(inst.c.rows(), inst.c.rows());
    switch (k) {
        case DominanceKind::right_gram:
        case DominanceKind::right_gram_dual: {
            const int order = (k == DominanceKind::right_gram) ? order_first : order_second;
            const WeightedFamily fam =
                cohyper_family(inst.c, order, inst.length, inst.psd_tol);
            partial = gram_right(fam, 0.0);
            bound = defect(inst.c, order, DefectSide::cohyper).value;
            break;
        }
        case DominanceKind::left_gram:
        case DominanceKind::left_gram_dual: {
            const int order = (k == DominanceKind::left_gram) ? order_first : order_second;
            const WeightedFamily fam =
                cohyper_family(inst.c, order, inst.length, inst.psd_tol);
            partial = gram_left(fam, 1.0);
            bound = defect(inst.c, 1, DefectSide::hyper).value;
            break;
        }
        case DominanceKind::right_gram_mixed: {
            const WeightedFamily fam = hyper_cohyper_family(
                inst.c, order_first, order_second, inst.length, inst.psd_tol);
            partial = gram_right(fam, 1.0);  // weighted by binom(order_first) pattern
            bound = defect(inst.c, order_second, DefectSide::cohyper).value;
            break;
        }
        case DominanceKind::left_gram_mixed: {
            const WeightedFamily fam = hyper_cohyper_family(
                inst.c, order_first, order_second, inst.length, inst.psd_tol);
            // left Gram weighted by the second binomial pattern
            const WeightedFamily flipped =
                fam.reweighted(fam.secondary_weights(), fam.primary_weights());
            partial = gram_left(flipped, 1.0);
            bound = defect(inst.c, order_first, DefectSide::hyper).value;
            break;
        }
        default:
            throw VariantUnknown("check_dominance: unknown kind");
    }

    const double margin = loewner_margin(partial, bound);  // min eig(bound - partial)
    // lhs = -margin against rhs = 0 under abs tolerance psd_tol, so
    // pass <=> margin >= -psd_tol and the report's gap is the margin itself.
    Tolerance dom_tol{tol.rel, inst.psd_tol};
    InequalityReport r = make_report(dominance_kind_name(k), -margin, 0.0, dom_tol);
    r.params["order_n"] = order_first;
    r.params["order_m"] = order_second;
    r.params["length"] = inst.length;
    return r;
}

}  // namespace schatten::verify
