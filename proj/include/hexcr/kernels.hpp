#pragma once

// Data-parallel inner loops shared by the colouring checks and the search
// engines. Each kernel has a scalar reference and, on x86-64, an AVX2
// variant; active_kernels() picks one at runtime.
//
// A Board is a finite cubic multigraph in structure-of-arrays form: cell v
// has neighbours nbr[0][v], nbr[1][v], nbr[2][v]. Sizes are padded to a
// multiple of kLanes; padding cells are unconstrained and point at
// themselves.

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

namespace hexcr::kernels {

inline constexpr std::size_t kLanes = 8;

enum class Isa { Scalar, Avx2 };

std::string_view to_string(Isa isa);

/// Non-owning view of a board's topology.
struct BoardView {
    std::size_t n = 0;  // padded cell count, multiple of kLanes
    const std::int32_t* nbr[3] = {nullptr, nullptr, nullptr};
    // back[t][v] indexes the support array (see SupportFn) at the slot where
    // neighbour nbr[t][v] sees v.
    const std::int32_t* back[3] = {nullptr, nullptr, nullptr};
    const std::uint32_t* constrained = nullptr;  // 0 or ~0u per cell
};

/// Every ordered way a node of some colour can see its three neighbour
/// colours, as single-bit masks. Built from an intersection array.
struct StarTable {
    std::uint32_t all = 0;  // mask of every colour
    std::vector<std::uint32_t> center, slot0, slot1, slot2;

    [[nodiscard]] std::size_t size() const { return center.size(); }
};

struct PruneResult {
    bool changed = false;
    bool wiped_out = false;  // some constrained cell lost its last colour
};

/// For each cell u with domain mask d(u): support[u] = colours of u that
/// some row permutation supports; support[n + t*n + u] = colours of
/// nbr[t][u] that appear in such a support. Unconstrained cells support
/// everything.
using SupportFn = void (*)(const StarTable&, const BoardView&, const std::uint32_t* domain, std::uint32_t* support);

/// domain[v] &= support[v] & support[back[0][v]] & support[back[1][v]] & support[back[2][v]].
using PruneFn = PruneResult (*)(const BoardView&, const std::uint32_t* support, std::uint32_t* domain);

/// profile[v] = sum over the three neighbours of 1 << (2 * colour); counts
/// stay below 4 so each colour owns two bits.
using ProfileFn = void (*)(const BoardView&, const std::uint32_t* colour, std::uint32_t* profile);

struct KernelSet {
    Isa isa;
    SupportFn support;
    PruneFn prune;
    ProfileFn profile;
};

[[nodiscard]] bool isa_available(Isa isa);
/// Throws std::runtime_error when the ISA is not available on this CPU/build.
[[nodiscard]] const KernelSet& kernel_set(Isa isa);
/// Best available kernel set, detected once.
[[nodiscard]] const KernelSet& active_kernels();

namespace scalar {
void support(const StarTable&, const BoardView&, const std::uint32_t* domain, std::uint32_t* support);
PruneResult prune(const BoardView&, const std::uint32_t* support, std::uint32_t* domain);
void profile(const BoardView&, const std::uint32_t* colour, std::uint32_t* profile);
}  // namespace scalar

#if defined(HEXCR_HAVE_AVX2)
namespace avx2 {
void support(const StarTable&, const BoardView&, const std::uint32_t* domain, std::uint32_t* support);
PruneResult prune(const BoardView&, const std::uint32_t* support, std::uint32_t* domain);
void profile(const BoardView&, const std::uint32_t* colour, std::uint32_t* profile);
}  // namespace avx2
#endif

}  // namespace hexcr::kernels
