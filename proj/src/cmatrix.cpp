#include "schatten/cmatrix.hpp"

#include <cmath>
#include <limits>

#include "schatten/kernels.hpp"

namespace schatten {

CMatrix CMatrix::identity(int d) {
    CMatrix m(d, d);
    for (int i = 0; i < d; ++i) m(i, i) = cplx{1.0, 0.0};
    return m;
}

CMatrix CMatrix::diagonal(const std::vector<double>& d) {
    CMatrix m(int(d.size()), int(d.size()));
    for (int i = 0; i < int(d.size()); ++i) m(i, i) = cplx{d[std::size_t(i)], 0.0};
    return m;
}

CMatrix CMatrix::diagonal(const std::vector<cplx>& d) {
    CMatrix m(int(d.size()), int(d.size()));
    for (int i = 0; i < int(d.size()); ++i) m(i, i) = d[std::size_t(i)];
    return m;
}

CMatrix CMatrix::operator+(const CMatrix& o) const {
    if (!same_shape(o)) throw DimensionMismatch("operator+: shape mismatch");
    CMatrix r(rows_, cols_);
    for (std::size_t t = 0; t < a_.size(); ++t) r.a_[t] = a_[t] + o.a_[t];
    return r;
}

CMatrix CMatrix::operator-(const CMatrix& o) const {
    if (!same_shape(o)) throw DimensionMismatch("operator-: shape mismatch");
    CMatrix r(rows_, cols_);
    for (std::size_t t = 0; t < a_.size(); ++t) r.a_[t] = a_[t] - o.a_[t];
    return r;
}

CMatrix CMatrix::operator*(const CMatrix& o) const {
    if (cols_ != o.rows_) throw DimensionMismatch("operator*: inner dimension mismatch");
    CMatrix r(rows_, o.cols_);
    kernels::active().gemm(a_.data(), o.a_.data(), r.a_.data(), rows_, cols_, o.cols_,
                           false);
    return r;
}

CMatrix CMatrix::operator*(cplx s) const {
    CMatrix r(rows_, cols_);
    for (std::size_t t = 0; t < a_.size(); ++t) r.a_[t] = s * a_[t];
    return r;
}

CMatrix CMatrix::operator*(double s) const { return (*this) * cplx{s, 0.0}; }

CMatrix& CMatrix::add_scaled(double w, const CMatrix& o) {
    if (!same_shape(o)) throw DimensionMismatch("add_scaled: shape mismatch");
    kernels::active().axpy_real(w, o.a_.data(), a_.data(), a_.size());
    return *this;
}

CMatrix CMatrix::adjoint() const {
    CMatrix r(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r(j, i) = std::conj((*this)(i, j));
    return r;
}

cplx CMatrix::trace() const {
    cplx t{0.0, 0.0};
    const int d = rows_ < cols_ ? rows_ : cols_;
    for (int i = 0; i < d; ++i) t += (*this)(i, i);
    return t;
}

double CMatrix::frobenius_sq() const {
    return kernels::active().abs2_sum(a_.data(), a_.size());
}

double CMatrix::frobenius() const { return std::sqrt(frobenius_sq()); }

double CMatrix::max_abs_entry() const {
    double m = 0.0;
    for (const cplx& v : a_) m = std::max(m, std::abs(v));
    return m;
}

bool CMatrix::equal_entrywise(const CMatrix& o) const {
    if (!same_shape(o)) return false;
    for (std::size_t t = 0; t < a_.size(); ++t)
        if (a_[t] != o.a_[t]) return false;
    return true;
}

double CMatrix::hermiticity_defect() const {
    if (!is_square()) return std::numeric_limits<double>::infinity();
    double m = 0.0;
    for (int i = 0; i < rows_; ++i)
        for (int j = i; j < cols_; ++j)
            m = std::max(m, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
    return m;
}

CMatrix CMatrix::symmetrized() const {
    if (!is_square()) throw DimensionMismatch("symmetrized: square matrix required");
    CMatrix r(rows_, cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            r(i, j) = 0.5 * ((*this)(i, j) + std::conj((*this)(j, i)));
    return r;
}

CMatrix operator*(cplx s, const CMatrix& m) { return m * s; }
CMatrix operator*(double s, const CMatrix& m) { return m * s; }

CMatrix rank_one(const std::vector<cplx>& g, const std::vector<cplx>& f) {
    CMatrix r(int(f.size()), int(g.size()));
    for (int i = 0; i < r.rows(); ++i)
        for (int j = 0; j < r.cols(); ++j)
            r(i, j) = f[std::size_t(i)] * std::conj(g[std::size_t(j)]);
    return r;
}

std::vector<cplx> column(const CMatrix& m, int j) {
    std::vector<cplx> v(static_cast<std::size_t>(m.rows()));
    for (int i = 0; i < m.rows(); ++i) v[std::size_t(i)] = m(i, j);
    return v;
}

double vec_norm(const std::vector<cplx>& x) {
    double s = 0.0;
    for (const cplx& v : x) s += std::norm(v);
    return std::sqrt(s);
}

cplx inner(const std::vector<cplx>& x, const std::vector<cplx>& y) {
    cplx s{0.0, 0.0};
    for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * std::conj(y[i]);
    return s;
}

std::vector<cplx> mat_vec(const CMatrix& m, const std::vector<cplx>& x) {
    if (x.size() != std::size_t(m.cols()))
        throw DimensionMismatch("mat_vec: size mismatch");
    std::vector<cplx> y(std::size_t(m.rows()), cplx{0.0, 0.0});
    for (int i = 0; i < m.rows(); ++i) {
        cplx s{0.0, 0.0};
        for (int j = 0; j < m.cols(); ++j) s += m(i, j) * x[std::size_t(j)];
        y[std::size_t(i)] = s;
    }
    return y;
}

}  // namespace schatten
