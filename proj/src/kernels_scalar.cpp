#include "schatten/kernels.hpp"

#include <cmath>

// Scalar reference kernels. These define the arithmetic contract: per output
// element the FMA sequence is
//   re = fma(ar, br, re); re = fma(-ai, bi, re);
//   im = fma(ar, bi, im); im = fma(ai, br, im);
// in k-order. The SIMD variants must reproduce it exactly.

namespace schatten::kernels {
namespace {

void gemm_scalar(const cplx* A, const cplx* B, cplx* C, int m, int k, int n,
                 bool accumulate) {
    const double* a = reinterpret_cast<const double*>(A);
    const double* b = reinterpret_cast<const double*>(B);
    double* c = reinterpret_cast<double*>(C);
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < n; ++j) {
            double re = 0.0, im = 0.0;
            if (accumulate) {
                re = c[2 * (std::size_t(i) * n + j)];
                im = c[2 * (std::size_t(i) * n + j) + 1];
            }
            for (int l = 0; l < k; ++l) {
                const double ar = a[2 * (std::size_t(i) * k + l)];
                const double ai = a[2 * (std::size_t(i) * k + l) + 1];
                const double br = b[2 * (std::size_t(l) * n + j)];
                const double bi = b[2 * (std::size_t(l) * n + j) + 1];
                re = std::fma(ar, br, re);
                re = std::fma(-ai, bi, re);
                im = std::fma(ar, bi, im);
                im = std::fma(ai, br, im);
            }
            c[2 * (std::size_t(i) * n + j)] = re;
            c[2 * (std::size_t(i) * n + j) + 1] = im;
        }
    }
}

void axpy_real_scalar(double w, const cplx* x, cplx* y, std::size_t n) {
    const double* xd = reinterpret_cast<const double*>(x);
    double* yd = reinterpret_cast<double*>(y);
    const std::size_t nd = 2 * n;
    for (std::size_t t = 0; t < nd; ++t) yd[t] = std::fma(w, xd[t], yd[t]);
}

// Four stride-4 accumulators combined as (a0+a2)+(a1+a3), then a scalar tail;
// matches the AVX2 lane layout and its horizontal reduction order.
double abs2_sum_scalar(const cplx* x, std::size_t n) {
    const double* xd = reinterpret_cast<const double*>(x);
    const std::size_t nd = 2 * n;
    double acc0 = 0.0, acc1 = 0.0, acc2 = 0.0, acc3 = 0.0;
    std::size_t t = 0;
    for (; t + 4 <= nd; t += 4) {
        acc0 = std::fma(xd[t], xd[t], acc0);
        acc1 = std::fma(xd[t + 1], xd[t + 1], acc1);
        acc2 = std::fma(xd[t + 2], xd[t + 2], acc2);
        acc3 = std::fma(xd[t + 3], xd[t + 3], acc3);
    }
    double total = (acc0 + acc2) + (acc1 + acc3);
    for (; t < nd; ++t) total = std::fma(xd[t], xd[t], total);
    return total;
}

}  // namespace

const Ops scalar_ops = {gemm_scalar, axpy_real_scalar, abs2_sum_scalar, "scalar"};

}  // namespace schatten::kernels
