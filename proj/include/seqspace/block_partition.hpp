#pragma once

#include <bit>
#include <cstdint>
#include <limits>
#include <stdexcept>

#include "seqspace/errors.hpp"

namespace seqspace {

using Index = std::uint64_t;

/// Row/inner coordinates of the block partition of N.
struct BlockCoord {
    Index i = 0; // block (row) number, >= 1
    Index j = 0; // position within the block, >= 1

    friend bool operator==(const BlockCoord&, const BlockCoord&) = default;
};

/// The fixed bijection (i, j) |-> 2^{i-1} * (2j - 1) realizing the partition
/// of N into countably many infinite pairwise disjoint subsets
/// N_i = { block_index(i, 1) < block_index(i, 2) < ... }.
///
/// Throws OverflowError when the result leaves the 64-bit index range, which
/// signals that the requested truncation depth is too large.
inline Index block_index(Index i, Index j) {
    if (i < 1 || j < 1) throw std::invalid_argument("block_index: i, j must be >= 1");
    if (i > 64) throw OverflowError("block_index: 2^{i-1} exceeds the index range");
    Index odd;
    if (__builtin_mul_overflow(j, Index{2}, &odd))
        throw OverflowError("block_index: 2j - 1 exceeds the index range");
    odd -= 1;
    const unsigned shift = static_cast<unsigned>(i - 1);
    if (shift > 0 && odd > (std::numeric_limits<Index>::max() >> shift))
        throw OverflowError("block_index: 2^{i-1} * (2j-1) exceeds the index range");
    return odd << shift;
}

/// Inverse of block_index: factor out the largest power of two.
inline BlockCoord block_of(Index n) {
    if (n < 1) throw std::invalid_argument("block_of: n must be >= 1");
    const unsigned tz = static_cast<unsigned>(std::countr_zero(n));
    const Index odd = n >> tz;
    return BlockCoord{static_cast<Index>(tz) + 1, (odd + 1) / 2};
}

} // namespace seqspace
