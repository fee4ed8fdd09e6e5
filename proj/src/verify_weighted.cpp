#include <cmath>
#include <string>

#include "schatten/verify.hpp"

namespace schatten::verify {

namespace {

constexpr double kCrossTol = 1e-12;

bool agree(double a, double b) {
    return std::abs(a - b) <= kCrossTol * std::max({1.0, std::abs(a), std::abs(b)});
}

void stamp_triple(InequalityReport& r, const SchattenTriple& t) {
    r.params["q"] = t.q.is_inf() ? INFINITY : t.q.value();
    r.params["r"] = t.r.is_inf() ? INFINITY : t.r.value();
    r.params["s"] = t.s;
}

// the common right-hand norm || (sum A*A)^(1/2q) X (sum w B B*)^(1/2r) ||_s
double core_factor(const WeightedFamily& fa, const WeightedFamily& fb,
                   const SchattenTriple& t, const CMatrix& x) {
    const CMatrix left = frac_power(gram_right(fa, 0.0), t.half_recip_q());
    const CMatrix right = frac_power(gram_left(fb, 1.0), t.half_recip_r());
    return schatten_norm(left * x * right, Exponent::finite(t.s));
}

}  // namespace

InequalityReport check_weighted_cs(WeightedCsForm form, const WeightedCsInstance& inst,
                                   const Tolerance& tol) {
    const WeightedFamily& fa = inst.fam_a;
    const WeightedFamily& fb = inst.fam_b;
    const SchattenTriple& t = inst.triple;
    t.validate();
    const Exponent s = Exponent::finite(t.s);

    const CMatrix sum =
        apply(TransformerSpec(fa, fb, t.half_minus_half_recip_q(), t.half_recip_r()),
              inst.x);
    const double core = core_factor(fa, fb, t, inst.x);

    InequalityReport r;
    if (form == WeightedCsForm::plain) {
        const double lhs = schatten_norm(sum, s);
        const double rhs = std::pow(operator_norm(gram_left(fa, 1.0)),
                                    t.half_minus_half_recip_q()) *
                           std::pow(operator_norm(gram_right(fb, 0.0)),
                                    t.half_minus_half_recip_r()) *
                           core;
        r = make_report("weighted_cs_plain", lhs, rhs, tol);
    } else {
        const HermitianSpectrum left = hermitian_eigen(gram_left(fa, 1.0));
        const HermitianSpectrum right = hermitian_eigen(gram_right(fb, 0.0));
        const SupScan scan =
            sup_sandwich(left, t.half_recip_q() - 0.5, right, t.half_recip_r() - 0.5,
                         sum, s, inst.grid, tol.abs);
        r = make_report("weighted_cs_sup", scan.max_value, core, tol);
        r.pass = r.pass && scan.monotone;
        r.params["monotone"] = scan.monotone ? 1.0 : 0.0;
        r.params["worst_step"] = scan.worst_step;
        if (!scan.monotone) r.notes += "sandwich norm not monotone along the grid; ";
    }
    stamp_triple(r, t);
    return r;
}

SchattenTriple reduced_case_triple(ReducedCsCase c, double s) {
    const bool low = (c == ReducedCsCase::low_left || c == ReducedCsCase::low_right);
    if (low && !(s >= 1.0 && s <= 2.0))
        throw CaseExponentMismatch("low-s case requires 1 <= s <= 2");
    if (!low && !(s >= 2.0))
        throw CaseExponentMismatch("high-s case requires s >= 2");
    const auto edge = [&] {
        return (s == 2.0) ? Exponent::infinity() : Exponent::finite(s / (2.0 - s));
    };
    switch (c) {
        case ReducedCsCase::low_left:
            return SchattenTriple::from_qr(edge(), Exponent::finite(1.0));
        case ReducedCsCase::low_right:
            return SchattenTriple::from_qr(Exponent::finite(1.0), edge());
        case ReducedCsCase::high_left:
            return SchattenTriple::from_qr(Exponent::finite(s / 2.0), Exponent::infinity());
        case ReducedCsCase::high_right:
            return SchattenTriple::from_qr(Exponent::infinity(), Exponent::finite(s / 2.0));
    }
    throw VariantUnknown("unknown reduced case");
}

InequalityReport check_reduced_cs(ReducedCsCase c, const ReducedCsInstance& inst,
                                  const Tolerance& tol) {
    const WeightedFamily& fa = inst.fam_a;
    const WeightedFamily& fb = inst.fam_b;
    const double s = inst.s;
    const Exponent se = Exponent::finite(s);

    double lhs = 0.0, rhs = 0.0;
    switch (c) {
        case ReducedCsCase::low_left: {
            const CMatrix sum =
                apply(TransformerSpec(fa, fb, 1.0 - 1.0 / s, 0.5), inst.x);
            lhs = schatten_norm(sum, se);
            rhs = std::pow(operator_norm(gram_left(fa, 1.0)), 1.0 - 1.0 / s) *
                  schatten_norm(frac_power(gram_right(fa, 0.0), 1.0 / s - 0.5) * inst.x *
                                    frac_power(gram_left(fb, 1.0), 0.5),
                                se);
            break;
        }
        case ReducedCsCase::low_right: {
            const CMatrix sum =
                apply(TransformerSpec(fa, fb, 0.0, 1.0 / s - 0.5), inst.x);
            lhs = schatten_norm(sum, se);
            rhs = std::pow(operator_norm(gram_right(fb, 0.0)), 1.0 - 1.0 / s) *
                  schatten_norm(frac_power(gram_right(fa, 0.0), 0.5) * inst.x *
                                    frac_power(gram_left(fb, 1.0), 1.0 / s - 0.5),
                                se);
            break;
        }
        case ReducedCsCase::high_left: {
            const CMatrix sum = apply(TransformerSpec(fa, fb, 0.5 - 1.0 / s, 0.0), inst.x);
            lhs = schatten_norm(sum, se);
            rhs = std::pow(operator_norm(gram_left(fa, 1.0)), 0.5 - 1.0 / s) *
                  std::pow(operator_norm(gram_right(fb, 0.0)), 0.5) *
                  schatten_norm(frac_power(gram_right(fa, 0.0), 1.0 / s) * inst.x, se);
            break;
        }
        case ReducedCsCase::high_right: {
            const CMatrix sum = apply(TransformerSpec(fa, fb, 0.5, 1.0 / s), inst.x);
            lhs = schatten_norm(sum, se);
            rhs = std::pow(operator_norm(gram_left(fa, 1.0)), 0.5) *
                  std::pow(operator_norm(gram_right(fb, 0.0)), 0.5 - 1.0 / s) *
                  schatten_norm(inst.x * frac_power(gram_left(fb, 1.0), 1.0 / s), se);
            break;
        }
    }

    // re-derive the bound through the general inequality at the mapped exponents
    const SchattenTriple mapped = reduced_case_triple(c, s);
    const WeightedCsInstance general{fa, fb, mapped, inst.x, default_shift_grid()};
    const InequalityReport gen = check_weighted_cs(WeightedCsForm::plain, general, tol);
    const bool cross_ok = agree(rhs, gen.rhs);

    InequalityReport r = make_report(reduced_case_name(c), lhs, rhs, tol);
    r.pass = r.pass && cross_ok;
    r.params["s"] = s;
    r.params["mapped_q"] = mapped.q.is_inf() ? INFINITY : mapped.q.value();
    r.params["mapped_r"] = mapped.r.is_inf() ? INFINITY : mapped.r.value();
    r.params["general_rhs"] = gen.rhs;
    if (!cross_ok)
        r.notes += "bound disagrees with the mapped general inequality; ";
    return r;
}

InequalityReport check_rebalanced_cs(RebalancedForm f, const RebalancedCsInstance& inst,
                                     const Tolerance& tol) {
    const WeightedFamily& fa = inst.fam_a;
    const WeightedFamily& fb = inst.fam_b;
    const SchattenTriple& t = inst.triple;
    t.validate();
    const Exponent s = Exponent::finite(t.s);
    const double rq = t.q.reciprocal();
    const double rr = t.r.reciprocal();

    const bool substituted =
        (f == RebalancedForm::substituted_sup || f == RebalancedForm::substituted_plain);
    const bool sup_form =
        (f == RebalancedForm::rebalanced_sup || f == RebalancedForm::substituted_sup);

    double lhs = 0.0, rhs = 0.0;
    SupScan scan;
    WeightedCsInstance general{fa, fb, t, inst.x, inst.grid};

    if (!substituted) {
        // weights move into the Gram sums; the transformer sum is coefficient-free
        const CMatrix sum = apply(TransformerSpec(fa, fb, 0.0, 0.0), inst.x);
        const CMatrix core_l = frac_power(gram_right(fa, rq - 1.0), t.half_recip_q());
        const CMatrix core_r = frac_power(gram_left(fb, 1.0 - rr), t.half_recip_r());
        const double core = schatten_norm(core_l * inst.x * core_r, s);
        if (sup_form) {
            const HermitianSpectrum left = hermitian_eigen(gram_left(fa, rq));
            const HermitianSpectrum right = hermitian_eigen(gram_right(fb, -rr));
            scan = sup_sandwich(left, t.half_recip_q() - 0.5, right,
                                t.half_recip_r() - 0.5, sum, s, inst.grid, tol.abs);
            lhs = scan.max_value;
            rhs = core;
        } else {
            lhs = schatten_norm(sum, s);
            rhs = std::pow(operator_norm(gram_left(fa, rq)), t.half_minus_half_recip_q()) *
                  std::pow(operator_norm(gram_right(fb, -rr)),
                           t.half_minus_half_recip_r()) *
                  core;
        }
        // the general inequality on the scaled members, same weights
        std::vector<CMatrix> ma, mb;
        for (int n = 0; n < fa.length(); ++n) {
            ma.push_back(fa.member(n) * std::pow(fa.primary(n), t.half_recip_q() - 0.5));
            mb.push_back(fb.member(n) * std::pow(fb.primary(n), -t.half_recip_r()));
        }
        general.fam_a = WeightedFamily(std::move(ma), fa.primary_weights());
        general.fam_b = WeightedFamily(std::move(mb), fb.primary_weights());
    } else {
        // power substitution lam = gamma^(2q/(q-1)), w = rho^(2r)
        if (!t.q.is_inf() && t.q.value() == 1.0)
            throw BadSubstitution("substituted form requires q > 1");
        if (t.r.is_inf())
            throw BadSubstitution("substituted form requires finite r");
        const double e_gamma = 2.0 / (1.0 - rq);  // 2q/(q-1)
        const double e_rho = 2.0 * t.r.value();
        std::vector<double> lam(fa.primary_weights()), w(fb.primary_weights());
        for (double& v : lam) v = std::pow(v, e_gamma);
        for (double& v : w) v = std::pow(v, e_rho);

        const CMatrix sum = apply(TransformerSpec(fa, fb, 1.0, 1.0), inst.x);
        const WeightedFamily fb_w = fb.reweighted(w);
        const CMatrix core_l = frac_power(gram_right(fa, 0.0), t.half_recip_q());
        const CMatrix core_r = frac_power(gram_left(fb_w, 1.0), t.half_recip_r());
        const double core = schatten_norm(core_l * inst.x * core_r, s);
        const WeightedFamily fa_lam = fa.reweighted(lam);
        if (sup_form) {
            const HermitianSpectrum left = hermitian_eigen(gram_left(fa_lam, 1.0));
            const HermitianSpectrum right = hermitian_eigen(gram_right(fb, 0.0));
            scan = sup_sandwich(left, t.half_recip_q() - 0.5, right,
                                t.half_recip_r() - 0.5, sum, s, inst.grid, tol.abs);
            lhs = scan.max_value;
            rhs = core;
        } else {
            lhs = schatten_norm(sum, s);
            rhs = std::pow(operator_norm(gram_left(fa_lam, 1.0)),
                           t.half_minus_half_recip_q()) *
                  std::pow(operator_norm(gram_right(fb, 0.0)),
                           t.half_minus_half_recip_r()) *
                  core;
        }
        general.fam_a = fa_lam;
        general.fam_b = fb_w;
    }

    const InequalityReport gen = check_weighted_cs(
        sup_form ? WeightedCsForm::sup : WeightedCsForm::plain, general, tol);
    const bool cross_ok = agree(lhs, gen.lhs) && agree(rhs, gen.rhs);

    InequalityReport r = make_report(rebalanced_form_name(f), lhs, rhs, tol);
    r.pass = r.pass && cross_ok;
    if (sup_form) {
        r.pass = r.pass && scan.monotone;
        r.params["monotone"] = scan.monotone ? 1.0 : 0.0;
        r.params["worst_step"] = scan.worst_step;
    }
    r.params["general_lhs"] = gen.lhs;
    r.params["general_rhs"] = gen.rhs;
    if (!cross_ok)
        r.notes += "sides disagree with the general inequality on transformed families; ";
    stamp_triple(r, t);
    return r;
}

}  // namespace schatten::verify
