#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstring>

#include "schatten/kernels.hpp"
#include "schatten/rng.hpp"

using namespace schatten;
namespace kern = schatten::kernels;

namespace {

// naive oracle: textbook triple loop, no fma, independent of the kernels
void gemm_naive(const cplx* a, const cplx* b, cplx* c, int m, int k, int n,
                bool accumulate) {
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < n; ++j) {
            cplx acc = accumulate ? c[std::size_t(i) * n + j] : cplx{0.0, 0.0};
            for (int l = 0; l < k; ++l)
                acc += a[std::size_t(i) * k + l] * b[std::size_t(l) * n + j];
            c[std::size_t(i) * n + j] = acc;
        }
    }
}

std::vector<cplx> random_buffer(Rng& rng, std::size_t n) {
    std::vector<cplx> v(n);
    for (auto& z : v) z = rng.complex_gaussian();
    return v;
}

bool bitwise_equal(const std::vector<cplx>& x, const std::vector<cplx>& y) {
    return x.size() == y.size() &&
           std::memcmp(x.data(), y.data(), x.size() * sizeof(cplx)) == 0;
}

}  // namespace

TEST_CASE("scalar gemm matches the naive triple loop") {
    Rng rng(11);
    for (int trial = 0; trial < 40; ++trial) {
        const int m = rng.uniform_int(1, 9);
        const int k = rng.uniform_int(1, 9);
        const int n = rng.uniform_int(1, 9);
        const auto a = random_buffer(rng, std::size_t(m) * k);
        const auto b = random_buffer(rng, std::size_t(k) * n);
        std::vector<cplx> got(std::size_t(m) * n), want(std::size_t(m) * n);
        kern::scalar_ops.gemm(a.data(), b.data(), got.data(), m, k, n, false);
        gemm_naive(a.data(), b.data(), want.data(), m, k, n, false);
        for (std::size_t t = 0; t < got.size(); ++t)
            CHECK(std::abs(got[t] - want[t]) <= 1e-13 * (1.0 + std::abs(want[t])));
    }
}

TEST_CASE("avx2 kernels are bit-identical to the scalar reference") {
    if (!kern::avx2_available()) {
        MESSAGE("avx2 not available on this machine; skipping");
        return;
    }
    const kern::Ops& scalar = kern::backend(kern::Backend::scalar);
    const kern::Ops& avx2 = kern::backend(kern::Backend::avx2);
    Rng rng(12);

    SUBCASE("gemm, including odd tails and accumulation") {
        for (int trial = 0; trial < 60; ++trial) {
            const int m = rng.uniform_int(1, 11);
            const int k = rng.uniform_int(1, 11);
            const int n = rng.uniform_int(1, 11);
            const bool acc = rng.uniform01() < 0.5;
            const auto a = random_buffer(rng, std::size_t(m) * k);
            const auto b = random_buffer(rng, std::size_t(k) * n);
            auto c0 = random_buffer(rng, std::size_t(m) * n);
            auto c1 = c0;
            scalar.gemm(a.data(), b.data(), c0.data(), m, k, n, acc);
            avx2.gemm(a.data(), b.data(), c1.data(), m, k, n, acc);
            CHECK(bitwise_equal(c0, c1));
        }
    }

    SUBCASE("axpy_real") {
        for (int trial = 0; trial < 40; ++trial) {
            const std::size_t n = std::size_t(rng.uniform_int(1, 73));
            const double w = rng.gaussian();
            const auto x = random_buffer(rng, n);
            auto y0 = random_buffer(rng, n);
            auto y1 = y0;
            scalar.axpy_real(w, x.data(), y0.data(), n);
            avx2.axpy_real(w, x.data(), y1.data(), n);
            CHECK(bitwise_equal(y0, y1));
        }
    }

    SUBCASE("abs2_sum") {
        for (int trial = 0; trial < 40; ++trial) {
            const std::size_t n = std::size_t(rng.uniform_int(1, 73));
            const auto x = random_buffer(rng, n);
            const double s0 = scalar.abs2_sum(x.data(), n);
            const double s1 = avx2.abs2_sum(x.data(), n);
            CHECK(s0 == s1);
        }
    }
}

TEST_CASE("abs2_sum agrees with a plain summation oracle") {
    Rng rng(13);
    for (int trial = 0; trial < 30; ++trial) {
        const std::size_t n = std::size_t(rng.uniform_int(1, 50));
        const auto x = random_buffer(rng, n);
        double want = 0.0;
        for (const cplx& z : x) want += z.real() * z.real() + z.imag() * z.imag();
        const double got = kern::active().abs2_sum(x.data(), n);
        CHECK(std::abs(got - want) <= 1e-12 * (1.0 + want));
    }
}
