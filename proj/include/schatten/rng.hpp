#pragma once

#include <cstdint>
#include <vector>

#include "schatten/cmatrix.hpp"

namespace schatten {

// Deterministic, platform-independent randomness.
//
// Per-trial seeds derive as trial_seed = splitmix64(base_seed + (i+1)*GOLDEN),
// i the trial index, so parallel execution cannot reorder the streams. Each
// trial runs its own xoshiro256** generator seeded from four successive
// splitmix64 outputs of its trial seed. Gaussians come from an explicit
// Box-Muller transform (std:: distributions are implementation-defined and
// would break bit-exact replay across standard libraries).
uint64_t splitmix64(uint64_t& state);
uint64_t derive_trial_seed(uint64_t base_seed, uint64_t trial_index);

class Rng {
public:
    explicit Rng(uint64_t seed);

    uint64_t next_u64();
    double uniform01();                       // [0, 1), 53-bit
    double uniform(double lo, double hi);     // [lo, hi)
    double log_uniform(double lo, double hi); // log-uniform on [lo, hi], lo > 0
    double gaussian();                        // standard normal
    cplx complex_gaussian();                  // E|z|^2 = 1
    int uniform_int(int lo, int hi);          // inclusive bounds

    CMatrix gaussian_matrix(int rows, int cols);
    CMatrix haar_unitary(int d);              // QR of a Ginibre matrix, phases fixed
    // ||C|| <= radius: radius * haar * diag(uniform[0,1]) * haar
    CMatrix random_contraction(int d, double radius);
    CMatrix random_psd(int d);                // G* G from a Gaussian G
    std::vector<double> log_uniform_weights(int n, double lo, double hi);
    std::vector<cplx> gaussian_vector(int d);

private:
    uint64_t s_[4];
    bool have_spare_ = false;
    double spare_ = 0.0;
};

}  // namespace schatten
