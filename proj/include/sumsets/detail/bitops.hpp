#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace sumsets::detail {

inline void set_bit(std::vector<std::uint64_t>& words, std::size_t i) {
    words[i >> 6] |= std::uint64_t(1) << (i & 63);
}

inline bool test_bit(const std::vector<std::uint64_t>& words, std::size_t i) {
    return (words[i >> 6] >> (i & 63)) & 1;
}

inline bool any_bit(const std::vector<std::uint64_t>& words) {
    for (std::uint64_t w : words)
        if (w) return true;
    return false;
}

inline std::size_t popcount(const std::vector<std::uint64_t>& words) {
    std::size_t c = 0;
    for (std::uint64_t w : words) c += std::size_t(std::popcount(w));
    return c;
}

// dst |= (src << shift), negative shift moves right. Bits pushed past either
// end are dropped; callers size frames so only zero bits can fall off.
inline void or_shifted(std::vector<std::uint64_t>& dst,
                       const std::vector<std::uint64_t>& src,
                       std::int64_t shift) {
    const std::size_t nwords = dst.size();
    if (shift >= 0) {
        const std::size_t q = std::size_t(shift) >> 6;
        const unsigned r = unsigned(shift) & 63;
        if (q >= nwords) return;
        if (r == 0) {
            for (std::size_t i = nwords; i-- > q;) dst[i] |= src[i - q];
        } else {
            for (std::size_t i = nwords; i-- > q;) {
                std::uint64_t v = src[i - q] << r;
                if (i > q) v |= src[i - q - 1] >> (64 - r);
                dst[i] |= v;
            }
        }
    } else {
        const std::uint64_t a = std::uint64_t(-shift);
        const std::size_t q = std::size_t(a >> 6);
        const unsigned r = unsigned(a) & 63;
        if (q >= nwords) return;
        if (r == 0) {
            for (std::size_t i = 0; i + q < nwords; ++i) dst[i] |= src[i + q];
        } else {
            for (std::size_t i = 0; i + q < nwords; ++i) {
                std::uint64_t v = src[i + q] >> r;
                if (i + q + 1 < nwords) v |= src[i + q + 1] << (64 - r);
                dst[i] |= v;
            }
        }
    }
}

} // namespace sumsets::detail
