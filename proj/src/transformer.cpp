#include "schatten/transformer.hpp"

#include <cmath>
#include <stdexcept>

namespace schatten {

TransformerSpec::TransformerSpec(WeightedFamily family_a, WeightedFamily family_b,
                                 double exponent_a, double exponent_b)
    : a_(std::move(family_a)), b_(std::move(family_b)), ea_(exponent_a), eb_(exponent_b) {
    if (a_.length() != b_.length())
        throw DimensionMismatch("transformer families must have equal length");
}

CMatrix apply(const TransformerSpec& spec, const CMatrix& x) {
    const WeightedFamily& fa = spec.family_a();
    const WeightedFamily& fb = spec.family_b();
    if (x.rows() != fa.dim() || x.cols() != fb.dim())
        throw DimensionMismatch("apply: X must be dim(A) x dim(B)");
    CMatrix acc(x.rows(), x.cols());
    for (int n = 0; n < spec.length(); ++n) {
        const double c = std::pow(fa.primary(n), spec.exponent_a()) *
                         std::pow(fb.primary(n), spec.exponent_b());
        acc.add_scaled(c, fa.member(n) * x * fb.member(n));
    }
    return acc;
}

RegularizedGram::RegularizedGram(const WeightedFamily& f, GramSide side,
                                 double weight_exponent, double shift)
    : side_(side), weight_exponent_(weight_exponent), shift_(shift) {
    if (!(shift > 0.0)) throw SingularGram("regularized gram requires shift > 0");
    spectrum_ = hermitian_eigen(gram(f, side, weight_exponent), 1e-8);
    value_ = spectrum_.shifted_power(shift_, 0.5);
}

CMatrix RegularizedGram::inverse() const { return spectrum_.shifted_power(shift_, -0.5); }

CMatrix RegularizedGram::power(double t) const { return spectrum_.shifted_power(shift_, t); }

CMatrix RegularizedGram::gram_sum() const { return spectrum_.reconstruct(); }

double normalized_contraction_check(const WeightedFamily& f, const RegularizedGram& g,
                                    GramSide side) {
    if (side != g.side())
        throw std::invalid_argument("normalized_contraction_check: side disagrees with G");
    if (f.dim() != g.dim())
        throw DimensionMismatch("normalized_contraction_check: dimension mismatch");
    const CMatrix inv = g.inverse();
    const CMatrix sum = gram(f, side, g.weight_exponent());
    return operator_norm(inv * sum * inv);
}

}  // namespace schatten
