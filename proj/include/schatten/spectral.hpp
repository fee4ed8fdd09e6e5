#pragma once

#include <vector>

#include "schatten/cmatrix.hpp"
#include "schatten/exponent.hpp"

namespace schatten {

// Relative tolerance for spectral reconstruction checks (U diag(mu) U* ~ H).
inline constexpr double kReconTol = 1e-10;

// Eigendecomposition of a Hermitian matrix: eigenvalues descending,
// eigenvectors as the columns of a unitary.
struct HermitianSpectrum {
    std::vector<double> eigenvalues;  // descending
    CMatrix eigenvectors;             // unitary, columns are eigenvectors

    CMatrix reconstruct() const;  // U diag(mu) U*
    // U f(mu) U* with f(mu) = (shift + clamp(mu, floor))^t; t = 0 gives I.
    CMatrix shifted_power(double shift, double t, double clamp_floor = 0.0) const;
    double min_eigenvalue() const { return eigenvalues.back(); }
    double max_eigenvalue() const { return eigenvalues.front(); }
};

// Cyclic complex Jacobi. Input must be Hermitian within tol (max-entry
// distance to its own adjoint); it is symmetrized to (M+M*)/2 first.
// Throws NotHermitian / ConvergenceFailure.
HermitianSpectrum hermitian_eigen(const CMatrix& m, double tol = 1e-8);

// Compact SVD, M = U diag(sigma) V*; sigma descending, U: rows x p,
// V: cols x p with p = min(rows, cols).
struct Svd {
    CMatrix u;
    std::vector<double> sigma;
    CMatrix v;
};
Svd svd(const CMatrix& m);

// Singular values only (descending), via one-sided Jacobi.
std::vector<double> singular_values(const CMatrix& m);

// (sum sigma_i^s)^(1/s), max sigma for s = inf. Throws BadExponent.
double schatten_norm(const CMatrix& m, Exponent s);
inline double schatten_norm(const CMatrix& m, double s) {
    return schatten_norm(m, Exponent::finite(s));
}
double operator_norm(const CMatrix& m);  // schatten_norm(m, inf)

// U max(mu,0)^t U* for Hermitian PSD input (within tol). Negative round-off
// eigenvalues in [-tol, 0) are clamped to zero before powering; t = 0 returns
// the identity. Throws NotPSD / SingularPower / NotHermitian.
CMatrix frac_power(const CMatrix& p, double t, double tol = 1e-8);

// Loewner order: A <= B iff min eig(B - A) >= -tol.
// Throws NotHermitian / DimensionMismatch.
bool loewner_leq(const CMatrix& a, const CMatrix& b, double tol = 1e-9);

// min eigenvalue of the symmetrized difference B - A (the Loewner margin).
double loewner_margin(const CMatrix& a, const CMatrix& b);

}  // namespace schatten
