#pragma once

#include <complex>
#include <cstddef>

namespace schatten::kernels {

using cplx = std::complex<double>;

// Low-level array kernels behind all dense matrix arithmetic. Each entry point
// has a scalar reference implementation and (on x86-64) an AVX2+FMA variant.
// The two are bit-identical by construction: the reference fixes the exact
// FMA sequence per output element and the vector variants only widen across
// independent output elements, never across a reduction.
struct Ops {
    // C = A*B (accumulate = false) or C += A*B (true).
    // Row-major; A is m x k, B is k x n, C is m x n.
    void (*gemm)(const cplx* a, const cplx* b, cplx* c, int m, int k, int n,
                 bool accumulate);
    // y += w * x over n complex entries, real weight w.
    void (*axpy_real)(double w, const cplx* x, cplx* y, std::size_t n);
    // sum of |x_i|^2 (4-lane accumulation order, see kernels_scalar.cpp).
    double (*abs2_sum)(const cplx* x, std::size_t n);
    const char* name;
};

enum class Backend { automatic, scalar, avx2 };

// Active backend: AVX2 when the CPU supports it, otherwise scalar.
// Overridable via SCHATTEN_KERNELS=scalar|avx2|auto (read once).
const Ops& active();

// Explicit backend access for equivalence tests. Throws std::runtime_error
// if the requested backend cannot run on this machine.
const Ops& backend(Backend b);

bool avx2_available() noexcept;

extern const Ops scalar_ops;
#if defined(__x86_64__) || defined(_M_X64)
extern const Ops avx2_ops;
#endif

}  // namespace schatten::kernels
