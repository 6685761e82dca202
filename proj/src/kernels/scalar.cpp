#include "hexcr/kernels.hpp"

namespace hexcr::kernels::scalar {

void support(const StarTable& table, const BoardView& board, const std::uint32_t* domain, std::uint32_t* support) {
    const std::size_t n = board.n;
    const std::size_t tuples = table.size();
    for (std::size_t u = 0; u < n; ++u) {
        if (!board.constrained[u]) {
            support[u] = support[n + u] = support[2 * n + u] = support[3 * n + u] = table.all;
            continue;
        }
        const std::uint32_t d0 = domain[u];
        const std::uint32_t d1 = domain[board.nbr[0][u]];
        const std::uint32_t d2 = domain[board.nbr[1][u]];
        const std::uint32_t d3 = domain[board.nbr[2][u]];
        std::uint32_t s0 = 0, s1 = 0, s2 = 0, s3 = 0;
        for (std::size_t t = 0; t < tuples; ++t) {
            if ((d0 & table.center[t]) && (d1 & table.slot0[t]) && (d2 & table.slot1[t]) && (d3 & table.slot2[t])) {
                s0 |= table.center[t];
                s1 |= table.slot0[t];
                s2 |= table.slot1[t];
                s3 |= table.slot2[t];
            }
        }
        support[u] = s0;
        support[n + u] = s1;
        support[2 * n + u] = s2;
        support[3 * n + u] = s3;
    }
}

PruneResult prune(const BoardView& board, const std::uint32_t* support, std::uint32_t* domain) {
    PruneResult result;
    for (std::size_t v = 0; v < board.n; ++v) {
        const std::uint32_t before = domain[v];
        const std::uint32_t after = before & support[v] & support[board.back[0][v]] & support[board.back[1][v]] &
                                    support[board.back[2][v]];
        result.changed |= after != before;
        result.wiped_out |= (after == 0) && board.constrained[v];
        domain[v] = after;
    }
    return result;
}

void profile(const BoardView& board, const std::uint32_t* colour, std::uint32_t* profile) {
    for (std::size_t v = 0; v < board.n; ++v) {
        profile[v] = (1u << (2 * colour[board.nbr[0][v]])) + (1u << (2 * colour[board.nbr[1][v]])) +
                     (1u << (2 * colour[board.nbr[2][v]]));
    }
}

}  // namespace hexcr::kernels::scalar
