#include "schatten/rng.hpp"

#include <cmath>

namespace schatten {

namespace {
constexpr uint64_t kGolden = 0x9E3779B97F4A7C15ull;

inline uint64_t rotl(uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }
}  // namespace

uint64_t splitmix64(uint64_t& state) {
    uint64_t z = (state += kGolden);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

uint64_t derive_trial_seed(uint64_t base_seed, uint64_t trial_index) {
    uint64_t state = base_seed + (trial_index + 1) * kGolden;
    return splitmix64(state);
}

Rng::Rng(uint64_t seed) {
    uint64_t state = seed;
    for (auto& s : s_) s = splitmix64(state);
}

uint64_t Rng::next_u64() {
    // xoshiro256**
    const uint64_t result = rotl(s_[1] * 5, 7) * 9;
    const uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
}

double Rng::uniform01() { return double(next_u64() >> 11) * 0x1.0p-53; }

double Rng::uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

double Rng::log_uniform(double lo, double hi) {
    return std::exp(uniform(std::log(lo), std::log(hi)));
}

double Rng::gaussian() {
    if (have_spare_) {
        have_spare_ = false;
        return spare_;
    }
    // Box-Muller; u1 in (0,1] avoids log(0)
    const double u1 = 1.0 - uniform01();
    const double u2 = uniform01();
    const double radius = std::sqrt(-2.0 * std::log(u1));
    const double angle = 2.0 * M_PI * u2;
    spare_ = radius * std::sin(angle);
    have_spare_ = true;
    return radius * std::cos(angle);
}

cplx Rng::complex_gaussian() {
    return cplx{gaussian() * M_SQRT1_2, gaussian() * M_SQRT1_2};
}

int Rng::uniform_int(int lo, int hi) {
    return lo + int(next_u64() % uint64_t(hi - lo + 1));
}

CMatrix Rng::gaussian_matrix(int rows, int cols) {
    CMatrix m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m(i, j) = complex_gaussian();
    return m;
}

CMatrix Rng::haar_unitary(int d) {
    // Modified Gram-Schmidt QR of a Ginibre matrix; absorbing the phases of
    // diag(R) into Q makes the distribution Haar.
    CMatrix g = gaussian_matrix(d, d);
    CMatrix q(d, d);
    for (int j = 0; j < d; ++j) {
        std::vector<cplx> v = column(g, j);
        for (int pass = 0; pass < 2; ++pass) {  // re-orthogonalize once
            for (int k = 0; k < j; ++k) {
                const std::vector<cplx> qk = column(q, k);
                const cplx proj = inner(v, qk);
                for (int i = 0; i < d; ++i) v[std::size_t(i)] -= proj * qk[std::size_t(i)];
            }
        }
        const double nrm = vec_norm(v);
        for (int i = 0; i < d; ++i) q(i, j) = v[std::size_t(i)] / nrm;
        const cplx rdiag = inner(column(g, j), column(q, j));  // R(j,j)
        const cplx phase = rdiag / std::abs(rdiag);
        for (int i = 0; i < d; ++i) q(i, j) *= phase;
    }
    return q;
}

CMatrix Rng::random_contraction(int d, double radius) {
    const CMatrix u = haar_unitary(d);
    const CMatrix v = haar_unitary(d);
    std::vector<double> diag(static_cast<std::size_t>(d));
    for (auto& x : diag) x = uniform01();
    return (u * CMatrix::diagonal(diag) * v) * radius;
}

CMatrix Rng::random_psd(int d) {
    const CMatrix g = gaussian_matrix(d, d);
    return (g.adjoint() * g).symmetrized();
}

std::vector<double> Rng::log_uniform_weights(int n, double lo, double hi) {
    std::vector<double> w(static_cast<std::size_t>(n));
    for (auto& x : w) x = log_uniform(lo, hi);
    return w;
}

std::vector<cplx> Rng::gaussian_vector(int d) {
    std::vector<cplx> v(static_cast<std::size_t>(d));
    for (auto& x : v) x = complex_gaussian();
    return v;
}

}  // namespace schatten
