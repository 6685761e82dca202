// Compiled with -mavx2; only called after a runtime CPU check.
#include <immintrin.h>

#include "hexcr/kernels.hpp"

namespace hexcr::kernels::avx2 {

namespace {

inline __m256i load(const void* p) { return _mm256_loadu_si256(static_cast<const __m256i*>(p)); }
inline void store(void* p, __m256i v) { _mm256_storeu_si256(static_cast<__m256i*>(p), v); }

inline __m256i gather(const std::uint32_t* base, const std::int32_t* idx) {
    return _mm256_i32gather_epi32(reinterpret_cast<const int*>(base), load(idx), 4);
}

// all-ones lanes where (x & bit) == 0
inline __m256i misses(__m256i x, __m256i bit) { return _mm256_cmpeq_epi32(_mm256_and_si256(x, bit), _mm256_setzero_si256()); }

}  // namespace

void support(const StarTable& table, const BoardView& board, const std::uint32_t* domain, std::uint32_t* support) {
    const std::size_t n = board.n;
    const std::size_t tuples = table.size();
    const __m256i all = _mm256_set1_epi32(static_cast<int>(table.all));
    for (std::size_t u = 0; u < n; u += kLanes) {
        const __m256i cons = load(board.constrained + u);
        const __m256i d0 = load(domain + u);
        const __m256i d1 = gather(domain, board.nbr[0] + u);
        const __m256i d2 = gather(domain, board.nbr[1] + u);
        const __m256i d3 = gather(domain, board.nbr[2] + u);
        __m256i s0 = _mm256_setzero_si256(), s1 = s0, s2 = s0, s3 = s0;
        for (std::size_t t = 0; t < tuples; ++t) {
            const __m256i bc = _mm256_set1_epi32(static_cast<int>(table.center[t]));
            const __m256i b0 = _mm256_set1_epi32(static_cast<int>(table.slot0[t]));
            const __m256i b1 = _mm256_set1_epi32(static_cast<int>(table.slot1[t]));
            const __m256i b2 = _mm256_set1_epi32(static_cast<int>(table.slot2[t]));
            const __m256i fail = _mm256_or_si256(_mm256_or_si256(misses(d0, bc), misses(d1, b0)),
                                                 _mm256_or_si256(misses(d2, b1), misses(d3, b2)));
            s0 = _mm256_or_si256(s0, _mm256_andnot_si256(fail, bc));
            s1 = _mm256_or_si256(s1, _mm256_andnot_si256(fail, b0));
            s2 = _mm256_or_si256(s2, _mm256_andnot_si256(fail, b1));
            s3 = _mm256_or_si256(s3, _mm256_andnot_si256(fail, b2));
        }
        store(support + u, _mm256_blendv_epi8(all, s0, cons));
        store(support + n + u, _mm256_blendv_epi8(all, s1, cons));
        store(support + 2 * n + u, _mm256_blendv_epi8(all, s2, cons));
        store(support + 3 * n + u, _mm256_blendv_epi8(all, s3, cons));
    }
}

PruneResult prune(const BoardView& board, const std::uint32_t* support, std::uint32_t* domain) {
    __m256i changed = _mm256_setzero_si256();
    __m256i wiped = _mm256_setzero_si256();
    const __m256i zero = _mm256_setzero_si256();
    for (std::size_t v = 0; v < board.n; v += kLanes) {
        const __m256i before = load(domain + v);
        __m256i after = _mm256_and_si256(before, load(support + v));
        after = _mm256_and_si256(after, gather(support, board.back[0] + v));
        after = _mm256_and_si256(after, gather(support, board.back[1] + v));
        after = _mm256_and_si256(after, gather(support, board.back[2] + v));
        changed = _mm256_or_si256(changed, _mm256_xor_si256(after, before));
        wiped = _mm256_or_si256(wiped, _mm256_and_si256(_mm256_cmpeq_epi32(after, zero), load(board.constrained + v)));
        store(domain + v, after);
    }
    return {!_mm256_testz_si256(changed, changed), !_mm256_testz_si256(wiped, wiped)};
}

void profile(const BoardView& board, const std::uint32_t* colour, std::uint32_t* profile) {
    const __m256i one = _mm256_set1_epi32(1);
    for (std::size_t v = 0; v < board.n; v += kLanes) {
        __m256i acc = _mm256_setzero_si256();
        for (int t = 0; t < 3; ++t) {
            const __m256i c = gather(colour, board.nbr[t] + v);
            acc = _mm256_add_epi32(acc, _mm256_sllv_epi32(one, _mm256_add_epi32(c, c)));
        }
        store(profile + v, acc);
    }
}

}  // namespace hexcr::kernels::avx2
