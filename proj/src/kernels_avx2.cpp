#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

#include <cmath>

#include "schatten/kernels.hpp"

// AVX2+FMA kernels. One __m256d holds two interleaved complex numbers
// [re0, im0, re1, im1]; vectorization runs across output columns so the
// per-element FMA chain is the one fixed by the scalar reference.
// This translation unit is compiled with -mavx2 -mfma and only ever entered
// after a runtime cpuid check.

namespace schatten::kernels {
namespace {

inline void gemm_cell(const double* a, const double* b, double* c, int k, int n,
                      int i, int j, bool accumulate) {
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

void gemm_avx2(const cplx* A, const cplx* B, cplx* C, int m, int k, int n,
               bool accumulate) {
    const double* a = reinterpret_cast<const double*>(A);
    const double* b = reinterpret_cast<const double*>(B);
    double* c = reinterpret_cast<double*>(C);
    // flips the sign of the re lanes: (x0,x1,x2,x3) -> (-x0,x1,-x2,x3)
    const __m256d re_sign = _mm256_set_pd(0.0, -0.0, 0.0, -0.0);
    for (int i = 0; i < m; ++i) {
        int j = 0;
        for (; j + 2 <= n; j += 2) {
            __m256d acc = accumulate
                              ? _mm256_loadu_pd(c + 2 * (std::size_t(i) * n + j))
                              : _mm256_setzero_pd();
            for (int l = 0; l < k; ++l) {
                const __m256d ar = _mm256_set1_pd(a[2 * (std::size_t(i) * k + l)]);
                const __m256d ai = _mm256_set1_pd(a[2 * (std::size_t(i) * k + l) + 1]);
                const __m256d bv = _mm256_loadu_pd(b + 2 * (std::size_t(l) * n + j));
                acc = _mm256_fmadd_pd(ar, bv, acc);
                const __m256d bswap = _mm256_permute_pd(bv, 0x5);
                const __m256d ai_alt = _mm256_xor_pd(ai, re_sign);
                acc = _mm256_fmadd_pd(ai_alt, bswap, acc);
            }
            _mm256_storeu_pd(c + 2 * (std::size_t(i) * n + j), acc);
        }
        for (; j < n; ++j) gemm_cell(a, b, c, k, n, i, j, accumulate);
    }
}

void axpy_real_avx2(double w, const cplx* x, cplx* y, std::size_t n) {
    const double* xd = reinterpret_cast<const double*>(x);
    double* yd = reinterpret_cast<double*>(y);
    const std::size_t nd = 2 * n;
    const __m256d wv = _mm256_set1_pd(w);
    std::size_t t = 0;
    for (; t + 4 <= nd; t += 4) {
        const __m256d xv = _mm256_loadu_pd(xd + t);
        const __m256d yv = _mm256_loadu_pd(yd + t);
        _mm256_storeu_pd(yd + t, _mm256_fmadd_pd(wv, xv, yv));
    }
    for (; t < nd; ++t) yd[t] = std::fma(w, xd[t], yd[t]);
}

double abs2_sum_avx2(const cplx* x, std::size_t n) {
    const double* xd = reinterpret_cast<const double*>(x);
    const std::size_t nd = 2 * n;
    __m256d acc = _mm256_setzero_pd();
    std::size_t t = 0;
    for (; t + 4 <= nd; t += 4) {
        const __m256d xv = _mm256_loadu_pd(xd + t);
        acc = _mm256_fmadd_pd(xv, xv, acc);
    }
    const __m128d lo = _mm256_castpd256_pd128(acc);
    const __m128d hi = _mm256_extractf128_pd(acc, 1);
    const __m128d pair = _mm_add_pd(lo, hi);  // (a0+a2, a1+a3)
    double total = _mm_cvtsd_f64(pair) + _mm_cvtsd_f64(_mm_unpackhi_pd(pair, pair));
    for (; t < nd; ++t) total = std::fma(xd[t], xd[t], total);
    return total;
}

}  // namespace

const Ops avx2_ops = {gemm_avx2, axpy_real_avx2, abs2_sum_avx2, "avx2"};

}  // namespace schatten::kernels

#endif  // x86-64
