#include <cmath>

#include "schatten/verify.hpp"

namespace schatten::verify {

namespace {

double max_norm(const WeightedFamily& f) {
    double m = 0.0;
    for (int n = 0; n < f.length(); ++n) m = std::max(m, operator_norm(f.member(n)));
    return m;
}

// max_n ||F_n|| ||G_n|| (joint maximum over the index)
double max_norm_product(const WeightedFamily& f, const WeightedFamily& g) {
    double m = 0.0;
    for (int n = 0; n < f.length(); ++n)
        m = std::max(m, operator_norm(f.member(n)) * operator_norm(g.member(n)));
    return m;
}

WeightedFamily composed(const WeightedFamily& outer, const WeightedFamily& inner,
                        const std::vector<double>& weights) {
    std::vector<CMatrix> members;
    members.reserve(std::size_t(outer.length()));
    for (int n = 0; n < outer.length(); ++n)
        members.push_back(outer.member(n) * inner.member(n));
    return WeightedFamily(std::move(members), weights);
}

}  // namespace

InequalityReport check_double_monotonicity(const DoubleMonoInstance& inst,
                                           const Tolerance& tol) {
    const CMatrix cc = (inst.c.adjoint() * inst.c).symmetrized();
    const CMatrix aa = (inst.a.adjoint() * inst.a).symmetrized();
    const CMatrix dd = (inst.d * inst.d.adjoint()).symmetrized();
    const CMatrix bb = (inst.b * inst.b.adjoint()).symmetrized();
    const double scale_l = 1e-9 * (1.0 + operator_norm(cc));
    const double scale_r = 1e-9 * (1.0 + operator_norm(dd));
    if (!loewner_leq(aa, cc, scale_l))
        throw PreconditionUnmet("double monotonicity: A*A <= C*C fails");
    if (!loewner_leq(bb, dd, scale_r))
        throw PreconditionUnmet("double monotonicity: B B* <= D D* fails");

    const double lhs = schatten_norm(inst.a * inst.x * inst.b, inst.s);
    const double rhs = schatten_norm(inst.c * inst.x * inst.d, inst.s);
    InequalityReport r = make_report("double_monotonicity", lhs, rhs, tol);
    r.params["s"] = inst.s.is_inf() ? INFINITY : inst.s.value();
    return r;
}

InequalityReport check_endpoint(EndpointVariant v, const EndpointInstance& inst,
                                const Tolerance& tol) {
    const WeightedFamily& fa = inst.fam_a;
    const WeightedFamily& fb = inst.fam_b;
    const WeightedFamily& fc = inst.fam_c;
    const WeightedFamily& fd = inst.fam_d;
    const CMatrix& x = inst.x;
    if (fa.length() != fb.length() || fa.length() != fc.length() ||
        fa.length() != fd.length())
        throw DimensionMismatch("endpoint: family lengths differ");
    if (fc.dim() != fa.dim() || fd.dim() != fb.dim())
        throw DimensionMismatch("endpoint: factor family dimensions differ");
    if (x.rows() != fa.dim() || x.cols() != fb.dim())
        throw DimensionMismatch("endpoint: X must be dim(A) x dim(B)");

    const Exponent hs = Exponent::finite(2.0);
    const Exponent tr = Exponent::finite(1.0);

    // composite families A_n C_n (lambda weights) and D_n B_n (w weights)
    const WeightedFamily fam_ac = composed(fa, fc, fa.primary_weights());
    const WeightedFamily fam_db = composed(fd, fb, fb.primary_weights());

    double lhs = 0.0, rhs = 0.0;
    switch (v) {
        case EndpointVariant::op_reg: {
            const RegularizedGram areg(fa, GramSide::left, 1.0, inst.eta);
            const RegularizedGram breg(fb, GramSide::right, 0.0, inst.zeta);
            const CMatrix t = apply(TransformerSpec(fam_ac, fam_db, 0.5, 0.0), x);
            lhs = operator_norm(areg.inverse() * t * breg.inverse());
            rhs = max_norm_product(fc, fd) * operator_norm(x);
            break;
        }
        case EndpointVariant::hs_right_reg: {
            const RegularizedGram creg(fc, GramSide::right, 0.0, inst.eta);
            const RegularizedGram breg(fb, GramSide::right, 0.0, inst.zeta);
            const CMatrix t =
                apply(TransformerSpec(fam_ac, fam_db, 0.0, 0.0), creg.inverse() * x);
            lhs = schatten_norm(t * breg.inverse(), hs);
            rhs = max_norm(fa) * max_norm(fd) * schatten_norm(x, hs);
            break;
        }
        case EndpointVariant::hs_left_reg: {
            const RegularizedGram areg(fa, GramSide::left, 1.0, inst.eta);
            const RegularizedGram dreg(fd, GramSide::left, 1.0, inst.theta);
            const CMatrix t =
                apply(TransformerSpec(fam_ac, fam_db, 0.5, 0.5), x * dreg.inverse());
            lhs = schatten_norm(areg.inverse() * t, hs);
            rhs = max_norm(fb) * max_norm(fc) * schatten_norm(x, hs);
            break;
        }
        case EndpointVariant::tr_reg: {
            const RegularizedGram creg(fc, GramSide::right, 0.0, inst.eta);
            const RegularizedGram dreg(fd, GramSide::left, 1.0, inst.theta);
            const CMatrix t = apply(TransformerSpec(fam_ac, fam_db, 0.0, 0.5),
                                    creg.inverse() * x * dreg.inverse());
            lhs = schatten_norm(t, tr);
            rhs = max_norm_product(fa, fb) * schatten_norm(x, tr);
            break;
        }
        case EndpointVariant::op_plain: {
            const CMatrix t = apply(TransformerSpec(fam_ac, fam_db, 0.5, 0.0), x);
            lhs = operator_norm(t);
            rhs = max_norm_product(fc, fd) * std::sqrt(operator_norm(gram_left(fa, 1.0))) *
                  std::sqrt(operator_norm(gram_right(fb, 0.0))) * operator_norm(x);
            break;
        }
        case EndpointVariant::hs_right_plain: {
            const CMatrix t = apply(TransformerSpec(fam_ac, fam_db, 0.0, 0.0), x);
            lhs = schatten_norm(t, hs);
            rhs = max_norm(fa) * max_norm(fd) *
                  std::sqrt(operator_norm(gram_right(fb, 0.0))) *
                  schatten_norm(frac_power(gram_right(fc, 0.0), 0.5) * x, hs);
            break;
        }
        case EndpointVariant::hs_left_plain: {
            const CMatrix t = apply(TransformerSpec(fam_ac, fam_db, 0.5, 0.5), x);
            lhs = schatten_norm(t, hs);
            rhs = max_norm(fb) * max_norm(fc) *
                  std::sqrt(operator_norm(gram_left(fa, 1.0))) *
                  schatten_norm(x * frac_power(gram_left(fd, 1.0), 0.5), hs);
            break;
        }
        case EndpointVariant::tr_plain: {
            const CMatrix t = apply(TransformerSpec(fam_ac, fam_db, 0.0, 0.5), x);
            lhs = schatten_norm(t, tr);
            rhs = max_norm_product(fa, fb) *
                  schatten_norm(frac_power(gram_right(fc, 0.0), 0.5) * x *
                                    frac_power(gram_left(fd, 1.0), 0.5),
                                tr);
            break;
        }
        case EndpointVariant::op_reduced: {
            const RegularizedGram areg(fa, GramSide::left, 1.0, inst.eta);
            const RegularizedGram breg(fb, GramSide::right, 0.0, inst.zeta);
            const CMatrix t = apply(TransformerSpec(fa, fb, 0.5, 0.0), x);
            lhs = operator_norm(areg.inverse() * t * breg.inverse());
            rhs = operator_norm(x);
            break;
        }
        case EndpointVariant::hs_right_reduced: {
            const RegularizedGram aeps(fa, GramSide::right, 0.0, inst.eps);
            const RegularizedGram breg(fb, GramSide::right, 0.0, inst.zeta);
            const CMatrix t =
                apply(TransformerSpec(fa, fb, 0.0, 0.0), aeps.inverse() * x);
            lhs = schatten_norm(t * breg.inverse(), hs);
            rhs = schatten_norm(x, hs);
            break;
        }
        case EndpointVariant::hs_left_reduced: {
            const RegularizedGram areg(fa, GramSide::left, 1.0, inst.eta);
            const RegularizedGram btheta(fb, GramSide::left, 1.0, inst.theta);
            const CMatrix t =
                apply(TransformerSpec(fa, fb, 0.5, 0.5), x * btheta.inverse());
            lhs = schatten_norm(areg.inverse() * t, hs);
            rhs = schatten_norm(x, hs);
            break;
        }
        case EndpointVariant::tr_reduced: {
            const RegularizedGram aeps(fa, GramSide::right, 0.0, inst.eps);
            const RegularizedGram btheta(fb, GramSide::left, 1.0, inst.theta);
            const CMatrix t = apply(TransformerSpec(fa, fb, 0.0, 0.5),
                                    aeps.inverse() * x * btheta.inverse());
            lhs = schatten_norm(t, tr);
            rhs = schatten_norm(x, tr);
            break;
        }
        default:
            throw VariantUnknown("check_endpoint: unknown variant");
    }

    InequalityReport r = make_report(endpoint_variant_name(v), lhs, rhs, tol);
    r.params["eta"] = inst.eta;
    r.params["eps"] = inst.eps;
    r.params["zeta"] = inst.zeta;
    r.params["theta"] = inst.theta;
    return r;
}

}  // namespace schatten::verify
