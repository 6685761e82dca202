#include <stdexcept>
#include <string>

#include "hexcr/kernels.hpp"

namespace hexcr::kernels {

std::string_view to_string(Isa isa) {
    switch (isa) {
        case Isa::Scalar: return "scalar";
        case Isa::Avx2: return "avx2";
    }
    return "?";
}

namespace {

constexpr KernelSet kScalar{Isa::Scalar, &scalar::support, &scalar::prune, &scalar::profile};
#if defined(HEXCR_HAVE_AVX2)
constexpr KernelSet kAvx2{Isa::Avx2, &avx2::support, &avx2::prune, &avx2::profile};
#endif

}  // namespace

bool isa_available(Isa isa) {
    switch (isa) {
        case Isa::Scalar: return true;
        case Isa::Avx2:
#if defined(HEXCR_HAVE_AVX2)
            return __builtin_cpu_supports("avx2");
#else
            return false;
#endif
    }
    return false;
}

const KernelSet& kernel_set(Isa isa) {
    if (!isa_available(isa)) throw std::runtime_error("kernel set not available: " + std::string(to_string(isa)));
#if defined(HEXCR_HAVE_AVX2)
    if (isa == Isa::Avx2) return kAvx2;
#endif
    return kScalar;
}

const KernelSet& active_kernels() {
    static const KernelSet& chosen = kernel_set(isa_available(Isa::Avx2) ? Isa::Avx2 : Isa::Scalar);
    return chosen;
}

}  // namespace hexcr::kernels
