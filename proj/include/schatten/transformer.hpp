#pragma once

#include "schatten/opfamily.hpp"

namespace schatten {

// A weighted transformer instance X -> sum_n lam_n^a w_n^b A_n X B_n, where
// lam is family_a's primary weight sequence and w is family_b's. The exponent
// pattern is data, not a code path: every inequality checker configures (a, b).
class TransformerSpec {
public:
    TransformerSpec(WeightedFamily family_a, WeightedFamily family_b,
                    double exponent_a, double exponent_b);

    const WeightedFamily& family_a() const noexcept { return a_; }
    const WeightedFamily& family_b() const noexcept { return b_; }
    double exponent_a() const noexcept { return ea_; }
    double exponent_b() const noexcept { return eb_; }
    int length() const noexcept { return a_.length(); }

private:
    WeightedFamily a_, b_;
    double ea_, eb_;
};

// Direct summation; X must be dim(A) x dim(B). Throws DimensionMismatch.
CMatrix apply(const TransformerSpec& spec, const CMatrix& x);

// Regularized Gram square root (shift*I + sum weight_n^e M-side-product)^(1/2),
// positive definite for any shift > 0. The spectrum of the plain Gram sum is
// retained so the inverse and real powers come from reciprocal eigenvalues,
// never from a linear solve.
class RegularizedGram {
public:
    RegularizedGram(const WeightedFamily& f, GramSide side, double weight_exponent,
                    double shift);

    GramSide side() const noexcept { return side_; }
    double weight_exponent() const noexcept { return weight_exponent_; }
    double shift() const noexcept { return shift_; }
    int dim() const noexcept { return spectrum_.eigenvectors.rows(); }

    const CMatrix& value() const noexcept { return value_; }  // (shift*I + Gram)^(1/2)
    CMatrix inverse() const;                                   // value()^-1
    CMatrix power(double t) const;                             // (shift*I + Gram)^t
    CMatrix gram_sum() const;          // the unshifted weighted Gram sum

private:
    GramSide side_;
    double weight_exponent_;
    double shift_;
    HermitianSpectrum spectrum_;  // of the unshifted Gram sum, clamped at 0
    CMatrix value_;
};

// ||G^-1 * (Gram sum) * G^-1||, <= 1 by construction for any shift > 0.
// Throws SingularGram if the stored spectrum cannot be inverted and
// std::invalid_argument if `side` disagrees with how G was built.
double normalized_contraction_check(const WeightedFamily& f, const RegularizedGram& g,
                                    GramSide side);

}  // namespace schatten
