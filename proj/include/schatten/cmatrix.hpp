#pragma once

#include <complex>
#include <vector>

#include "schatten/errors.hpp"

namespace schatten {

using cplx = std::complex<double>;

// Dense complex matrix, row-major. Immutable by convention once built;
// every operation returns a fresh value.
class CMatrix {
public:
    CMatrix() : rows_(0), cols_(0) {}
    CMatrix(int rows, int cols)
        : rows_(rows), cols_(cols), a_(std::size_t(rows) * cols, cplx{0.0, 0.0}) {
        if (rows <= 0 || cols <= 0)
            throw DimensionMismatch("matrix dimensions must be positive");
    }
    CMatrix(int rows, int cols, std::vector<cplx> entries)
        : rows_(rows), cols_(cols), a_(std::move(entries)) {
        if (rows <= 0 || cols <= 0)
            throw DimensionMismatch("matrix dimensions must be positive");
        if (a_.size() != std::size_t(rows) * cols)
            throw DimensionMismatch("entry count does not match rows*cols");
    }

    static CMatrix identity(int d);
    static CMatrix diagonal(const std::vector<double>& d);
    static CMatrix diagonal(const std::vector<cplx>& d);

    int rows() const noexcept { return rows_; }
    int cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }

    cplx& operator()(int i, int j) { return a_[std::size_t(i) * cols_ + j]; }
    const cplx& operator()(int i, int j) const { return a_[std::size_t(i) * cols_ + j]; }

    const cplx* data() const noexcept { return a_.data(); }
    cplx* data() noexcept { return a_.data(); }
    const std::vector<cplx>& entries() const noexcept { return a_; }

    CMatrix operator+(const CMatrix& o) const;
    CMatrix operator-(const CMatrix& o) const;
    CMatrix operator*(const CMatrix& o) const;   // kernel-dispatched gemm
    CMatrix operator*(cplx s) const;
    CMatrix operator*(double s) const;
    CMatrix& add_scaled(double w, const CMatrix& o);  // *this += w*o, in place

    CMatrix adjoint() const;  // conjugate transpose
    cplx trace() const;

    double frobenius_sq() const;                 // sum of |entries|^2
    double frobenius() const;
    double max_abs_entry() const;

    bool same_shape(const CMatrix& o) const noexcept {
        return rows_ == o.rows_ && cols_ == o.cols_;
    }
    bool equal_entrywise(const CMatrix& o) const;

    // max-entry distance to the own adjoint; 0 for exactly Hermitian input
    double hermiticity_defect() const;
    bool is_hermitian(double tol) const { return is_square() && hermiticity_defect() <= tol; }

    // (M + M*)/2
    CMatrix symmetrized() const;

private:
    int rows_, cols_;
    std::vector<cplx> a_;
};

CMatrix operator*(cplx s, const CMatrix& m);
CMatrix operator*(double s, const CMatrix& m);

// Rank-one operator g (x) f: h -> <h, g> f; as a matrix, f * g^H.
CMatrix rank_one(const std::vector<cplx>& g, const std::vector<cplx>& f);

// column j of m as a vector
std::vector<cplx> column(const CMatrix& m, int j);

// Euclidean norm and inner product <x, y> = y^H x ... conventions:
// inner(x, y) = sum_i x_i * conj(y_i)  (linear in the first slot)
double vec_norm(const std::vector<cplx>& x);
cplx inner(const std::vector<cplx>& x, const std::vector<cplx>& y);

// y = M x
std::vector<cplx> mat_vec(const CMatrix& m, const std::vector<cplx>& x);

}  // namespace schatten
