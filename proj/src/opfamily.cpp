#include "schatten/opfamily.hpp"

#include <cmath>

namespace schatten {

WeightedFamily::WeightedFamily(std::vector<CMatrix> members,
                               std::vector<double> primary_weights,
                               std::optional<std::vector<double>> secondary_weights)
    : members_(std::move(members)),
      primary_(std::move(primary_weights)),
      secondary_(secondary_weights ? std::move(*secondary_weights)
                                   : std::vector<double>(members_.size(), 1.0)) {
    if (members_.empty()) throw DimensionMismatch("family must not be empty");
    dim_ = members_.front().rows();
    for (const CMatrix& m : members_)
        if (!m.is_square() || m.rows() != dim_)
            throw DimensionMismatch("family members must share one square dimension");
    if (primary_.size() != members_.size() || secondary_.size() != members_.size())
        throw DimensionMismatch("weight vectors must match the family length");
    for (double w : primary_)
        if (!(w > 0.0)) throw DimensionMismatch("primary weights must be > 0");
    for (double w : secondary_)
        if (!(w > 0.0)) throw DimensionMismatch("secondary weights must be > 0");
}

WeightedFamily WeightedFamily::with_unit_weights(std::vector<CMatrix> members) {
    const std::size_t n = members.size();
    return WeightedFamily(std::move(members), std::vector<double>(n, 1.0));
}

WeightedFamily WeightedFamily::reweighted(
    std::vector<double> primary, std::optional<std::vector<double>> secondary) const {
    return WeightedFamily(members_, std::move(primary), std::move(secondary));
}

CMatrix gram_right(const WeightedFamily& f, double weight_exponent) {
    CMatrix acc(f.dim(), f.dim());
    for (int n = 0; n < f.length(); ++n) {
        const CMatrix& a = f.member(n);
        acc.add_scaled(std::pow(f.primary(n), weight_exponent), a.adjoint() * a);
    }
    return acc.symmetrized();
}

CMatrix gram_left(const WeightedFamily& f, double weight_exponent) {
    CMatrix acc(f.dim(), f.dim());
    for (int n = 0; n < f.length(); ++n) {
        const CMatrix& a = f.member(n);
        acc.add_scaled(std::pow(f.primary(n), weight_exponent), a * a.adjoint());
    }
    return acc.symmetrized();
}

CMatrix gram(const WeightedFamily& f, GramSide side, double weight_exponent) {
    return side == GramSide::left ? gram_left(f, weight_exponent)
                                  : gram_right(f, weight_exponent);
}

double row_norm(const WeightedFamily& f) {
    return std::sqrt(operator_norm(gram_left(f, 0.0)));
}

double column_norm(const WeightedFamily& f) {
    return std::sqrt(operator_norm(gram_right(f, 0.0)));
}

double module_max_norm(const WeightedFamily& f, const std::vector<double>& lam,
                       const std::vector<double>& rho, WeightPower power) {
    if (lam.size() != std::size_t(f.length()) || rho.size() != std::size_t(f.length()))
        throw DimensionMismatch("module_max_norm: weight length mismatch");
    for (double w : lam)
        if (!(w > 0.0)) throw DimensionMismatch("module_max_norm: weights must be > 0");
    for (double w : rho)
        if (!(w > 0.0)) throw DimensionMismatch("module_max_norm: weights must be > 0");
    const double p = power == WeightPower::linear ? 1.0 : 0.5;
    CMatrix right(f.dim(), f.dim()), left(f.dim(), f.dim());
    for (int n = 0; n < f.length(); ++n) {
        const CMatrix& a = f.member(n);
        right.add_scaled(std::pow(lam[std::size_t(n)], p), a.adjoint() * a);
        left.add_scaled(std::pow(rho[std::size_t(n)], p), a * a.adjoint());
    }
    return std::max(std::sqrt(operator_norm(right.symmetrized())),
                    std::sqrt(operator_norm(left.symmetrized())));
}

std::pair<WeightedFamily, WeightedFamily> rank_one_family(const CMatrix& e_basis,
                                                          const CMatrix& f_basis,
                                                          int count) {
    if (!e_basis.is_square() || !f_basis.is_square() ||
        e_basis.rows() != f_basis.rows())
        throw DimensionMismatch("rank_one_family: bases must be square and equal size");
    if (count < 1 || count > e_basis.rows())
        throw CountTooLarge("rank_one_family: count must lie in [1, d]");
    std::vector<CMatrix> a, b;
    a.reserve(std::size_t(count));
    b.reserve(std::size_t(count));
    const std::vector<cplx> e1 = column(e_basis, 0);
    const std::vector<cplx> f1 = column(f_basis, 0);
    for (int n = 0; n < count; ++n) {
        a.push_back(rank_one(column(e_basis, n), e1));  // e_n (x) e_1
        b.push_back(rank_one(column(f_basis, n), f1));  // f_n (x) f_1
    }
    return {WeightedFamily::with_unit_weights(std::move(a)),
            WeightedFamily::with_unit_weights(std::move(b))};
}

double tail_norm(const WeightedFamily& f, int from, GramSide side,
                 double weight_exponent) {
    if (from < 1 || from > f.length() + 1)
        throw IndexOutOfRange("tail_norm: from must lie in [1, length+1]");
    CMatrix acc(f.dim(), f.dim());
    for (int n = from - 1; n < f.length(); ++n) {
        const CMatrix& a = f.member(n);
        const double w = std::pow(f.primary(n), weight_exponent);
        acc.add_scaled(w, side == GramSide::left ? a * a.adjoint() : a.adjoint() * a);
    }
    return operator_norm(acc.symmetrized());
}

}  // namespace schatten
