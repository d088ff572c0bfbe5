#ifndef RSCRAM_HASHER_HPP_
#define RSCRAM_HASHER_HPP_

#include <cstdint>
#include <span>
#include <vector>

#include "rscram/hash_function.hpp"

namespace rscram {

struct HashParams {
  std::uint32_t garlic;
  std::uint32_t lambda;
  std::vector<std::uint8_t> salt;
  std::uint32_t version = 1;

  // Salt may be empty only as a request for a random one at hashing time;
  // evaluation itself requires at least 8 bytes.
  HashParams(std::uint32_t g, std::uint32_t l, std::vector<std::uint8_t> s,
             std::uint32_t v = 1);
};

inline constexpr std::uint32_t kMinGarlic = 1;
inline constexpr std::uint32_t kMaxGarlic = 24;
inline constexpr std::uint32_t kMinLambda = 1;
inline constexpr std::uint32_t kMaxLambda = 64;
inline constexpr std::size_t kMinSaltBytes = 8;
inline constexpr std::size_t kDefaultSaltBytes = 16;

struct EvalStats {
  std::uint64_t seeding_calls = 0;
  std::uint64_t evaluation_calls = 0;
  std::uint64_t shuffle_calls = 0;
  std::uint64_t shuffle_rounds = 0;
  std::size_t row_buffer_bytes = 0;  // digest storage actually allocated
  std::size_t word_bits = 0;         // graph words held during evaluation
};

// Sequence of memory accesses, encoded (kind << 63) | (row << 32) | col with
// kind 0 = read, 1 = write and rows counted across rounds.  A pure function
// of (salt, g, lambda) -- never of the password.
using MemoryTrace = std::vector<std::uint64_t>;

inline std::uint64_t trace_read(std::uint64_t row, std::uint64_t col) {
  return (row << 32) | col;
}
inline std::uint64_t trace_write(std::uint64_t row, std::uint64_t col) {
  return (std::uint64_t{1} << 63) | (row << 32) | col;
}

// Full evaluation: salt-derived shuffle, traced layer words, hash chain over
// the stacked graph, two-row sliding window.  Returns the value at the last
// node of the final round.
Digest evaluate(const HashFunction& h, std::span<const std::uint8_t> password,
                const HashParams& params, EvalStats* stats = nullptr,
                MemoryTrace* trace = nullptr);

struct HashCallCount {
  std::uint64_t seeding = 0;      // 1 + (2^g - 1) row-0 calls
  std::uint64_t evaluation = 0;   // one call per folded parent, all rounds
  std::uint64_t shuffle = 0;      // one call per card per shuffle round
  std::uint64_t shuffle_rounds = 0;

  std::uint64_t total() const { return seeding + evaluation + shuffle; }
};

// Predicts, exactly, the H invocations evaluate() will make for these
// parameters (shuffle phase reported separately).
HashCallCount hash_call_count(const HashFunction& h, const HashParams& params);

}  // namespace rscram

#endif  // RSCRAM_HASHER_HPP_
