#pragma once

#include <cstdint>
#include <vector>

#include "schatten/opfamily.hpp"

namespace schatten {

enum class DefectSide { hyper, cohyper };  // hyper: C^{*k}C^k, cohyper: C^k C^{*k}

// Alternating binomial defect of a square matrix C at order n:
//   sum_{k=0..n} (-1)^k binom(n,k) C^{*k} C^k   (hyper)
//   sum_{k=0..n} (-1)^k binom(n,k) C^k C^{*k}   (cohyper)
struct DefectOperator {
    CMatrix base;
    int order;
    DefectSide side;
    CMatrix value;  // Hermitian by construction
};

// Powers C^k are memoized per call. n must lie in [1, 60] (exact binomials
// in 64-bit). Throws OrderTooLarge.
DefectOperator defect(const CMatrix& c, int n, DefectSide side);

// Margins are the minimal defect eigenvalues for n = 1..N; the predicate
// holds when all of them are >= -tol.
struct ContractivityReport {
    bool ok;
    std::vector<double> margins;
    int first_failure;  // failing order, or 0
};
ContractivityReport is_hypercontractive(const CMatrix& c, int n_max, double tol,
                                        DefectSide side = DefectSide::hyper);
ContractivityReport is_cohypercontractive(const CMatrix& c, int n_max, double tol);

// Fixed point of P -> C* P C from P_0 = I, the limit of C^{*n} C^n.
// Throws NotContraction if ||C|| > 1 + tol, NoConvergence past max_iter.
CMatrix asymptotic_limit(const CMatrix& c, double tol = 1e-12, int max_iter = 10000);

// binom(n + order - 1, order - 1) for n = 0..length-1, exact in 64-bit.
// Throws Overflow.
std::vector<double> binomial_weights(int order, int length);

// Family (sqrt(defect(C,1,hyper)) C^n sqrt(defect(C,N,cohyper)))_{n<length}
// with primary weights binomial_weights(N, length). Requires C to be
// N-cohypercontractive. Throws NotHypercontractive.
WeightedFamily cohyper_family(const CMatrix& c, int n_cohyper, int length,
                              double tol = 1e-9);

// Two-order variant (sqrt(defect(C,N,hyper)) C^n sqrt(defect(C,M,cohyper)));
// primary weights binomial_weights(N), secondary binomial_weights(M).
// Requires C N-hypercontractive and M-cohypercontractive.
WeightedFamily hyper_cohyper_family(const CMatrix& c, int n_hyper, int m_cohyper,
                                    int length, double tol = 1e-9);

}  // namespace schatten
