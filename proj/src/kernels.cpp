#include "schatten/kernels.hpp"

#include <cstdlib>
#include <cstring>
#include <stdexcept>

namespace schatten::kernels {

bool avx2_available() noexcept {
#if defined(__x86_64__) || defined(_M_X64)
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
    return false;
#endif
}

const Ops& backend(Backend b) {
    switch (b) {
        case Backend::scalar:
            return scalar_ops;
        case Backend::avx2:
#if defined(__x86_64__) || defined(_M_X64)
            if (avx2_available()) return avx2_ops;
#endif
            throw std::runtime_error("avx2 kernels not available on this machine");
        case Backend::automatic:
        default:
#if defined(__x86_64__) || defined(_M_X64)
            if (avx2_available()) return avx2_ops;
#endif
            return scalar_ops;
    }
}

namespace {
const Ops& select_from_env() {
    const char* env = std::getenv("SCHATTEN_KERNELS");
    if (env != nullptr) {
        if (std::strcmp(env, "scalar") == 0) return backend(Backend::scalar);
        if (std::strcmp(env, "avx2") == 0) return backend(Backend::avx2);
    }
    return backend(Backend::automatic);
}
}  // namespace

const Ops& active() {
    static const Ops& ops = select_from_env();
    return ops;
}

}  // namespace schatten::kernels
