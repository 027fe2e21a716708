#pragma once

// GF(2^64) with reduction polynomial x^64 + x^4 + x^3 + x + 1.
// Elements are 64-bit words, bit i = coefficient of x^i.

#include <cstdint>
#include <span>

#if defined(__PCLMUL__) && defined(__SSE2__)
#include <emmintrin.h>
#include <wmmintrin.h>
#define LRS_HAVE_CLMUL 1
#else
#define LRS_HAVE_CLMUL 0
#endif

namespace lrs {

using FieldElem = std::uint64_t;

namespace gf2 {

/// Low word of the reduction polynomial (the x^64 term is implicit).
inline constexpr std::uint64_t reduction_low = 0x1B;
inline constexpr const char* reduction_name = "x^64+x^4+x^3+x+1";

struct Wide {
    std::uint64_t lo;
    std::uint64_t hi;
};

inline Wide clmul_portable(std::uint64_t a, std::uint64_t b) noexcept {
    // 4-bit windowed carry-free multiply.
    std::uint64_t table_lo[16];
    std::uint64_t table_hi[16];
    table_lo[0] = table_hi[0] = 0;
    for (int w = 1; w < 16; ++w) {
        std::uint64_t lo = 0, hi = 0;
        for (int bit = 0; bit < 4; ++bit) {
            if (w & (1 << bit)) {
                lo ^= a << bit;
                hi ^= bit ? a >> (64 - bit) : 0;
            }
        }
        table_lo[w] = lo;
        table_hi[w] = hi;
    }
    std::uint64_t lo = 0, hi = 0;
    for (int shift = 60; shift >= 0; shift -= 4) {
        hi = (hi << 4) | (lo >> 60);
        lo <<= 4;
        const auto w = (b >> shift) & 0xF;
        lo ^= table_lo[w];
        hi ^= table_hi[w];
    }
    return {lo, hi};
}

inline Wide clmul(std::uint64_t a, std::uint64_t b) noexcept {
#if LRS_HAVE_CLMUL
    const __m128i p = _mm_clmulepi64_si128(_mm_cvtsi64_si128(static_cast<long long>(a)),
                                           _mm_cvtsi64_si128(static_cast<long long>(b)), 0x00);
    return {static_cast<std::uint64_t>(_mm_cvtsi128_si64(p)),
            static_cast<std::uint64_t>(_mm_cvtsi128_si64(_mm_unpackhi_epi64(p, p)))};
#else
    return clmul_portable(a, b);
#endif
}

/// Folds a 128-bit carry-free product back below x^64.
constexpr std::uint64_t reduce(Wide w) noexcept {
    // hi * x^64 == hi * (x^4 + x^3 + x + 1); the spill above bit 63 is at most 4 bits.
    const std::uint64_t hi = w.hi;
    const std::uint64_t spill = (hi >> 63) ^ (hi >> 61) ^ (hi >> 60);
    std::uint64_t lo = w.lo ^ hi ^ (hi << 1) ^ (hi << 3) ^ (hi << 4);
    lo ^= spill ^ (spill << 1) ^ (spill << 3) ^ (spill << 4);
    return lo;
}

} // namespace gf2

inline FieldElem gf_add(FieldElem x, FieldElem y) noexcept { return x ^ y; }

inline FieldElem gf_mul(FieldElem x, FieldElem y) noexcept { return gf2::reduce(gf2::clmul(x, y)); }

/// acc[g] += c * src[g] for every g.
inline void gf_axpy(std::span<FieldElem> acc, FieldElem c, std::span<const FieldElem> src) noexcept {
    for (std::size_t g = 0; g < acc.size(); ++g) {
        acc[g] ^= gf_mul(c, src[g]);
    }
}

} // namespace lrs
