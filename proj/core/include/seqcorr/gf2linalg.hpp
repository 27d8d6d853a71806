#pragma once
// Dense linear algebra over GF(2) for maps on at most 64 basis vectors.
// Rows are bit-packed into std::uint64_t.

#include <bit>
#include <cstdint>
#include <optional>
#include <vector>

namespace seqcorr {

inline int gf2_rank(const std::vector<std::uint64_t>& rows) {
    std::uint64_t pivot[64] = {};
    int rank = 0;
    for (std::uint64_t r : rows) {
        while (r) {
            const int b = 63 - std::countl_zero(r);
            if (pivot[b] == 0) {
                pivot[b] = r;
                ++rank;
                break;
            }
            r ^= pivot[b];
        }
    }
    return rank;
}

// Kernel of the GF(2)-linear map sending basis vector j to images[j].
// Returns combination masks c (bit j set <=> basis j participates) spanning
// { c : XOR of images[j] over set bits of c == 0 }.  images.size() <= 64.
inline std::vector<std::uint64_t> gf2_kernel(const std::vector<std::uint64_t>& images) {
    struct Row {
        std::uint64_t value = 0;
        std::uint64_t combo = 0;
    };
    Row pivot[64] = {};
    std::vector<std::uint64_t> kernel;
    for (std::size_t j = 0; j < images.size(); ++j) {
        std::uint64_t v = images[j];
        std::uint64_t c = std::uint64_t{1} << j;
        while (v) {
            const int b = 63 - std::countl_zero(v);
            if (pivot[b].value == 0) break;
            v ^= pivot[b].value;
            c ^= pivot[b].combo;
        }
        if (v) {
            pivot[63 - std::countl_zero(v)] = Row{v, c};
        } else {
            kernel.push_back(c);
        }
    }
    return kernel;
}

// Solves XOR over set bits j of combo of images[j] == target; returns one
// combination mask, or nullopt when target is outside the span.
inline std::optional<std::uint64_t> gf2_solve(const std::vector<std::uint64_t>& images,
                                              std::uint64_t target) {
    struct Row {
        std::uint64_t value = 0;
        std::uint64_t combo = 0;
    };
    Row pivot[64] = {};
    for (std::size_t j = 0; j < images.size(); ++j) {
        std::uint64_t v = images[j];
        std::uint64_t c = std::uint64_t{1} << j;
        while (v) {
            const int b = 63 - std::countl_zero(v);
            if (pivot[b].value == 0) {
                pivot[b] = Row{v, c};
                break;
            }
            v ^= pivot[b].value;
            c ^= pivot[b].combo;
        }
    }
    std::uint64_t combo = 0;
    while (target) {
        const int b = 63 - std::countl_zero(target);
        if (pivot[b].value == 0) return std::nullopt;
        target ^= pivot[b].value;
        combo ^= pivot[b].combo;
    }
    return combo;
}

}  // namespace seqcorr
