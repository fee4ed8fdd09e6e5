#include "schatten/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace schatten {

namespace {

constexpr int kMaxSweeps = 64;

// One Jacobi rotation zeroing H(p,q). The 2x2 block [[app, b],[conj(b), aqq]]
// is reduced to the real case by the phase of b, then rotated.
struct Rotation {
    double c;      // cosine (real)
    cplx s;        // sine carrying the phase, applied as in J below
};

// J is identity except J(p,p)=c, J(p,q)=s_c, J(q,p)=-conj(s_c)... we use the
// explicit column update form; see apply_right/apply_similarity.
Rotation make_rotation(double app, double aqq, cplx b) {
    const double ab = std::abs(b);
    const cplx phase = b / ab;  // caller guarantees ab > 0
    const double tau = (aqq - app) / (2.0 * ab);
    const double t = (tau >= 0.0) ? 1.0 / (tau + std::sqrt(1.0 + tau * tau))
                                  : 1.0 / (tau - std::sqrt(1.0 + tau * tau));
    const double c = 1.0 / std::sqrt(1.0 + t * t);
    return Rotation{c, t * c * phase};
}

// Columns p, q of M are replaced by the mixes
//   col_p' = c*col_p - conj(s)*col_q
//   col_q' = s*col_p + c*col_q
// i.e. right-multiplication by the unitary [[c, s],[-conj(s), c]] acting on
// the (p,q) plane... with the phase convention of make_rotation this
// orthogonalizes the implicit 2x2 Gram.
void apply_right(CMatrix& m, int p, int q, const Rotation& r) {
    for (int i = 0; i < m.rows(); ++i) {
        const cplx mp = m(i, p), mq = m(i, q);
        m(i, p) = r.c * mp - std::conj(r.s) * mq;
        m(i, q) = r.s * mp + r.c * mq;
    }
}

// Rows p, q get the adjoint action (left multiplication by J*).
void apply_left_adjoint(CMatrix& m, int p, int q, const Rotation& r) {
    for (int j = 0; j < m.cols(); ++j) {
        const cplx mp = m(p, j), mq = m(q, j);
        m(p, j) = r.c * mp - r.s * mq;
        m(q, j) = std::conj(r.s) * mp + r.c * mq;
    }
}

double offdiag_sq(const CMatrix& h) {
    double s = 0.0;
    for (int i = 0; i < h.rows(); ++i)
        for (int j = i + 1; j < h.cols(); ++j) s += 2.0 * std::norm(h(i, j));
    return s;
}

}  // namespace

CMatrix HermitianSpectrum::reconstruct() const {
    const CMatrix& u = eigenvectors;
    return u * CMatrix::diagonal(eigenvalues) * u.adjoint();
}

CMatrix HermitianSpectrum::shifted_power(double shift, double t, double clamp_floor) const {
    const int d = eigenvectors.rows();
    if (t == 0.0) return CMatrix::identity(d);
    std::vector<double> f(eigenvalues.size());
    for (std::size_t i = 0; i < f.size(); ++i) {
        const double mu = std::max(eigenvalues[i], clamp_floor) + shift;
        f[i] = std::pow(mu, t);
    }
    return eigenvectors * CMatrix::diagonal(f) * eigenvectors.adjoint();
}

HermitianSpectrum hermitian_eigen(const CMatrix& m, double tol) {
    if (!m.is_square()) throw NotHermitian("hermitian_eigen: square matrix required");
    if (m.hermiticity_defect() > tol)
        throw NotHermitian("hermitian_eigen: input is not Hermitian within tolerance");

    CMatrix h = m.symmetrized();
    const int d = h.rows();
    CMatrix u = CMatrix::identity(d);

    // off-diagonal noise after convergence sits near d*eps*||H||_F
    const double scale = std::sqrt(h.frobenius_sq());
    const double thr = 4e-16 * d * scale;
    const double stop = thr * thr;

    int sweep = 0;
    while (offdiag_sq(h) > stop && sweep < kMaxSweeps) {
        for (int p = 0; p < d - 1; ++p) {
            for (int q = p + 1; q < d; ++q) {
                const cplx b = h(p, q);
                if (std::abs(b) == 0.0) continue;
                // skip rotations that cannot change anything at double precision
                const double app = h(p, p).real(), aqq = h(q, q).real();
                if (std::abs(b) < 1e-18 * (std::abs(app) + std::abs(aqq) + 1e-300))
                    continue;
                const Rotation r = make_rotation(app, aqq, b);
                apply_right(h, p, q, r);
                apply_left_adjoint(h, p, q, r);
                apply_right(u, p, q, r);
                // clean the rotated pair: exact Hermitian form
                h(p, q) = cplx{0.0, 0.0};
                h(q, p) = cplx{0.0, 0.0};
                h(p, p) = cplx{h(p, p).real(), 0.0};
                h(q, q) = cplx{h(q, q).real(), 0.0};
            }
        }
        ++sweep;
    }
    if (sweep >= kMaxSweeps && offdiag_sq(h) > stop)
        throw ConvergenceFailure("hermitian_eigen: Jacobi sweeps exhausted");

    std::vector<int> order(static_cast<std::size_t>(d));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int i, int j) { return h(i, i).real() > h(j, j).real(); });

    HermitianSpectrum out;
    out.eigenvalues.resize(std::size_t(d));
    out.eigenvectors = CMatrix(d, d);
    for (int k = 0; k < d; ++k) {
        out.eigenvalues[std::size_t(k)] = h(order[std::size_t(k)], order[std::size_t(k)]).real();
        for (int i = 0; i < d; ++i) out.eigenvectors(i, k) = u(i, order[std::size_t(k)]);
    }
    return out;
}

namespace {

// One-sided Hestenes Jacobi on the columns of a (rows >= cols assumed by the
// caller). On return the columns of a are mutually orthogonal and v holds the
// accumulated right rotations.
void hestenes(CMatrix& a, CMatrix& v) {
    const int n = a.cols();
    int sweep = 0;
    bool changed = true;
    while (changed && sweep < kMaxSweeps) {
        changed = false;
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                double app = 0.0, aqq = 0.0;
                cplx apq{0.0, 0.0};
                for (int i = 0; i < a.rows(); ++i) {
                    app += std::norm(a(i, p));
                    aqq += std::norm(a(i, q));
                    apq += std::conj(a(i, p)) * a(i, q);
                }
                const double ab = std::abs(apq);
                // the computed inner product of numerically orthogonal columns
                // carries ~rows*eps relative noise; stop well above that
                if (ab <= 1e-13 * std::sqrt(app * aqq) || ab == 0.0) continue;
                changed = true;
                const Rotation r = make_rotation(app, aqq, apq);
                apply_right(a, p, q, r);
                apply_right(v, p, q, r);
            }
        }
        ++sweep;
    }
    if (changed) throw ConvergenceFailure("svd: Jacobi sweeps exhausted");
}

Svd svd_tall(const CMatrix& m) {
    CMatrix a = m;
    CMatrix v = CMatrix::identity(m.cols());
    hestenes(a, v);

    const int n = a.cols();
    std::vector<double> sig(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) {
        double s = 0.0;
        for (int i = 0; i < a.rows(); ++i) s += std::norm(a(i, j));
        sig[std::size_t(j)] = std::sqrt(s);
    }

    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int i, int j) { return sig[std::size_t(i)] > sig[std::size_t(j)]; });

    Svd out;
    out.sigma.resize(std::size_t(n));
    out.u = CMatrix(m.rows(), n);
    out.v = CMatrix(m.cols(), n);
    const double smax = sig[std::size_t(order[0])];
    for (int k = 0; k < n; ++k) {
        const int j = order[std::size_t(k)];
        out.sigma[std::size_t(k)] = sig[std::size_t(j)];
        for (int i = 0; i < m.cols(); ++i) out.v(i, k) = v(i, j);
        if (sig[std::size_t(j)] > 1e-300 && sig[std::size_t(j)] > 1e-16 * smax) {
            for (int i = 0; i < m.rows(); ++i)
                out.u(i, k) = a(i, j) / sig[std::size_t(j)];
        } else {
            // null direction: complete with a unit vector orthogonal to the
            // previous columns (Gram-Schmidt over the standard basis)
            for (int e = 0; e < m.rows(); ++e) {
                std::vector<cplx> cand(std::size_t(m.rows()), cplx{0.0, 0.0});
                cand[std::size_t(e)] = cplx{1.0, 0.0};
                for (int kk = 0; kk < k; ++kk) {
                    cplx proj{0.0, 0.0};
                    for (int i = 0; i < m.rows(); ++i)
                        proj += std::conj(out.u(i, kk)) * cand[std::size_t(i)];
                    for (int i = 0; i < m.rows(); ++i)
                        cand[std::size_t(i)] -= proj * out.u(i, kk);
                }
                const double nrm = vec_norm(cand);
                if (nrm > 0.5) {
                    for (int i = 0; i < m.rows(); ++i) out.u(i, k) = cand[std::size_t(i)] / nrm;
                    break;
                }
            }
        }
    }
    return out;
}

}  // namespace

Svd svd(const CMatrix& m) {
    if (m.rows() >= m.cols()) return svd_tall(m);
    Svd t = svd_tall(m.adjoint());
    return Svd{t.v, t.sigma, t.u};
}

std::vector<double> singular_values(const CMatrix& m) {
    CMatrix a = (m.rows() >= m.cols()) ? m : m.adjoint();
    CMatrix v = CMatrix::identity(a.cols());
    hestenes(a, v);
    std::vector<double> sig(static_cast<std::size_t>(a.cols()));
    for (int j = 0; j < a.cols(); ++j) {
        double s = 0.0;
        for (int i = 0; i < a.rows(); ++i) s += std::norm(a(i, j));
        sig[std::size_t(j)] = std::sqrt(s);
    }
    std::sort(sig.begin(), sig.end(), std::greater<double>());
    return sig;
}

double schatten_norm(const CMatrix& m, Exponent s) {
    const std::vector<double> sig = singular_values(m);
    if (s.is_inf()) return sig.front();
    const double p = s.value();
    const double smax = sig.front();
    if (smax == 0.0) return 0.0;
    if (p == 1.0) {
        double acc = 0.0;
        for (double x : sig) acc += x;
        return acc;
    }
    if (p == 2.0) {
        double acc = 0.0;
        for (double x : sig) acc += x * x;
        return std::sqrt(acc);
    }
    double acc = 0.0;
    for (double x : sig) acc += std::pow(x / smax, p);
    return smax * std::pow(acc, 1.0 / p);
}

double operator_norm(const CMatrix& m) { return schatten_norm(m, Exponent::infinity()); }

CMatrix frac_power(const CMatrix& p, double t, double tol) {
    const HermitianSpectrum es = hermitian_eigen(p, tol);
    if (es.min_eigenvalue() < -tol)
        throw NotPSD("frac_power: eigenvalue below -tol");
    if (t == 0.0) return CMatrix::identity(p.rows());
    if (t < 0.0 && es.min_eigenvalue() < tol)
        throw SingularPower("frac_power: negative power of a singular matrix");
    // Round-off of an exact zero eigenvalue sits below ~d*eps*mu_max; raised
    // to a small positive power it would stop being negligible
    // (1e-16^(1/8) ~ 1e-2), so everything under that band is treated as zero.
    // The band must stay narrow: genuinely small eigenvalues of heavy-tailed
    // Gram spectra live right above it.
    const double zero_floor =
        (t > 0.0) ? 4.0 * p.rows() * 2.220446049250313e-16 *
                        std::max(es.max_eigenvalue(), 0.0)
                  : 0.0;
    std::vector<double> f(es.eigenvalues.size());
    for (std::size_t i = 0; i < f.size(); ++i) {
        const double mu = std::max(es.eigenvalues[i], 0.0);
        f[i] = (mu <= zero_floor && t > 0.0) ? 0.0 : std::pow(mu, t);
    }
    return es.eigenvectors * CMatrix::diagonal(f) * es.eigenvectors.adjoint();
}

double loewner_margin(const CMatrix& a, const CMatrix& b) {
    if (!a.same_shape(b)) throw DimensionMismatch("loewner: shape mismatch");
    const HermitianSpectrum es = hermitian_eigen(b - a, 1e300);
    return es.min_eigenvalue();
}

bool loewner_leq(const CMatrix& a, const CMatrix& b, double tol) {
    if (!a.same_shape(b)) throw DimensionMismatch("loewner_leq: shape mismatch");
    if (!a.is_hermitian(tol) || !b.is_hermitian(tol))
        throw NotHermitian("loewner_leq: Hermitian inputs required");
    return loewner_margin(a, b) >= -tol;
}

}  // namespace schatten
