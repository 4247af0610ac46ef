#include "dynamap/kernels.hpp"

#include "dynamap/errors.hpp"

#include <cstdlib>
#include <string>
#include <string_view>

namespace dynamap::kernels {

#if defined(__x86_64__) || defined(_M_X64)
bool avx2_supported() {
#if defined(__GNUC__) || defined(__clang__)
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
    return false;
#endif
}
#endif

namespace {

const Backend& select() {
    if (const char* env = std::getenv("DYNAMAP_KERNELS")) {
        const std::string_view requested{env};
        if (requested == "scalar") {
            return scalar_backend();
        }
#if defined(__x86_64__) || defined(_M_X64)
        if (requested == "avx2") {
            if (!avx2_supported()) {
                throw InvalidArgument("DYNAMAP_KERNELS=avx2 but this CPU lacks AVX2/FMA");
            }
            return avx2_backend();
        }
#endif
        throw InvalidArgument("unknown DYNAMAP_KERNELS value: " + std::string(requested));
    }
#if defined(__x86_64__) || defined(_M_X64)
    if (avx2_supported()) {
        return avx2_backend();
    }
#endif
    return scalar_backend();
}

} // namespace

const Backend& active() {
    static const Backend& chosen = select();
    return chosen;
}

} // namespace dynamap::kernels
