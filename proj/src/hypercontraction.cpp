#include "schatten/hypercontraction.hpp"

#include <cmath>
#include <string>

namespace schatten {

namespace {

// C^0..C^n by repeated multiplication
std::vector<CMatrix> power_table(const CMatrix& c, int n) {
    std::vector<CMatrix> p;
    p.reserve(std::size_t(n) + 1);
    p.push_back(CMatrix::identity(c.rows()));
    for (int k = 1; k <= n; ++k) p.push_back(p.back() * c);
    return p;
}

uint64_t binom_exact(int n, int k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    unsigned __int128 r = 1;
    for (int i = 1; i <= k; ++i) {
        r = r * unsigned(n - k + i) / unsigned(i);  // integral at every step
        if (r > UINT64_MAX) throw Overflow("binomial exceeds 64-bit");
    }
    return uint64_t(r);
}

}  // namespace

DefectOperator defect(const CMatrix& c, int n, DefectSide side) {
    if (!c.is_square()) throw DimensionMismatch("defect: square matrix required");
    if (n < 1 || n > 60) throw OrderTooLarge("defect order must lie in [1, 60]");
    const std::vector<CMatrix> pow = power_table(c, n);
    CMatrix acc(c.rows(), c.rows());
    for (int k = 0; k <= n; ++k) {
        const double coef = (k % 2 == 0 ? 1.0 : -1.0) * double(binom_exact(n, k));
        const CMatrix term = side == DefectSide::hyper
                                 ? pow[std::size_t(k)].adjoint() * pow[std::size_t(k)]
                                 : pow[std::size_t(k)] * pow[std::size_t(k)].adjoint();
        acc.add_scaled(coef, term);
    }
    return DefectOperator{c, n, side, acc.symmetrized()};
}

ContractivityReport is_hypercontractive(const CMatrix& c, int n_max, double tol,
                                        DefectSide side) {
    ContractivityReport rep{true, {}, 0};
    rep.margins.reserve(std::size_t(n_max));
    for (int n = 1; n <= n_max; ++n) {
        const DefectOperator d = defect(c, n, side);
        const double m = hermitian_eigen(d.value, 1e-8).min_eigenvalue();
        rep.margins.push_back(m);
        if (m < -tol && rep.ok) {
            rep.ok = false;
            rep.first_failure = n;
        }
    }
    return rep;
}

ContractivityReport is_cohypercontractive(const CMatrix& c, int n_max, double tol) {
    return is_hypercontractive(c, n_max, tol, DefectSide::cohyper);
}

CMatrix asymptotic_limit(const CMatrix& c, double tol, int max_iter) {
    if (!c.is_square()) throw DimensionMismatch("asymptotic_limit: square matrix required");
    if (operator_norm(c) > 1.0 + tol)
        throw NotContraction("asymptotic_limit: ||C|| > 1 + tol");
    const CMatrix cadj = c.adjoint();
    CMatrix p = CMatrix::identity(c.rows());
    double residual = 0.0;
    for (int it = 0; it < max_iter; ++it) {
        CMatrix next = cadj * p * c;
        residual = operator_norm(next - p);
        p = std::move(next);
        if (residual < tol) return p;
    }
    throw NoConvergence("asymptotic_limit: no fixed point after " +
                            std::to_string(max_iter) + " iterations, residual " +
                            std::to_string(residual),
                        residual);
}

std::vector<double> binomial_weights(int order, int length) {
    if (order < 1) throw OrderTooLarge("binomial_weights: order must be >= 1");
    std::vector<double> w;
    w.reserve(std::size_t(length));
    for (int n = 0; n < length; ++n)
        w.push_back(double(binom_exact(n + order - 1, order - 1)));
    return w;
}

namespace {

CMatrix defect_sqrt(const CMatrix& c, int order, DefectSide side, double tol) {
    return frac_power(defect(c, order, side).value, 0.5, tol);
}

void require(const ContractivityReport& rep, const char* what) {
    if (!rep.ok)
        throw NotHypercontractive(
            std::string(what) + ": predicate fails at order " +
                std::to_string(rep.first_failure) + " with margin " +
                std::to_string(rep.margins[std::size_t(rep.first_failure - 1)]),
            rep.first_failure, rep.margins[std::size_t(rep.first_failure - 1)]);
}

}  // namespace

WeightedFamily cohyper_family(const CMatrix& c, int n_cohyper, int length, double tol) {
    require(is_cohypercontractive(c, n_cohyper, tol), "cohyper_family");
    const CMatrix left = defect_sqrt(c, 1, DefectSide::hyper, tol);
    const CMatrix right = defect_sqrt(c, n_cohyper, DefectSide::cohyper, tol);
    const std::vector<CMatrix> pow = power_table(c, length - 1);
    std::vector<CMatrix> members;
    members.reserve(std::size_t(length));
    for (int n = 0; n < length; ++n) members.push_back(left * pow[std::size_t(n)] * right);
    return WeightedFamily(std::move(members), binomial_weights(n_cohyper, length));
}

WeightedFamily hyper_cohyper_family(const CMatrix& c, int n_hyper, int m_cohyper,
                                    int length, double tol) {
    require(is_hypercontractive(c, n_hyper, tol, DefectSide::hyper),
            "hyper_cohyper_family (hyper side)");
    require(is_cohypercontractive(c, m_cohyper, tol),
            "hyper_cohyper_family (cohyper side)");
    const CMatrix left = defect_sqrt(c, n_hyper, DefectSide::hyper, tol);
    const CMatrix right = defect_sqrt(c, m_cohyper, DefectSide::cohyper, tol);
    const std::vector<CMatrix> pow = power_table(c, length - 1);
    std::vector<CMatrix> members;
    members.reserve(std::size_t(length));
    for (int n = 0; n < length; ++n) members.push_back(left * pow[std::size_t(n)] * right);
    return WeightedFamily(std::move(members), binomial_weights(n_hyper, length),
                          binomial_weights(m_cohyper, length));
}

}  // namespace schatten
