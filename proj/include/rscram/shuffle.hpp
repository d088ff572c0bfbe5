#ifndef RSCRAM_SHUFFLE_HPP_
#define RSCRAM_SHUFFLE_HPP_

#include <cstdint>
#include <span>

#include "rscram/hash_function.hpp"
#include "rscram/permutation.hpp"

namespace rscram {

struct ShuffleResult {
  Permutation permutation;
  std::uint32_t rounds = 0;
};

// One coin flip of the shuffle: the most significant bit of byte 0 of
// H(salt || LE64(card) || LE64(round)). `card` is the 1-based deck position.
bool shuffle_bit(const HashFunction& h, std::span<const std::uint8_t> salt,
                 std::uint64_t card, std::uint64_t round);

// Inverse riffle shuffle driven by H(salt, ., .), run until the per-card bit
// sequences are pairwise distinct.  At that stopping time the deck is an
// exactly uniform permutation (in the random-oracle model), so the result is
// a deterministic function of (H, n, salt) with uniform distribution over
// salts.  Throws InternalError if the round cap 64*ceil(log2 n) + 512 is hit,
// which only a degenerate H can cause.
ShuffleResult inverse_riffle_shuffle(const HashFunction& h, std::size_t n,
                                     std::span<const std::uint8_t> salt);

}  // namespace rscram

#endif  // RSCRAM_SHUFFLE_HPP_
