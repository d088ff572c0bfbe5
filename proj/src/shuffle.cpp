#include "rscram/shuffle.hpp"

#include <bit>
#include <cstring>
#include <numeric>
#include <vector>

#include "rscram/errors.hpp"

namespace rscram {

namespace {

// Encodes H(salt || LE64(card) || LE64(round)) with a reusable buffer.
class CoinStream {
 public:
  CoinStream(const HashFunction& h, std::span<const std::uint8_t> salt)
      : h_(h), buf_(salt.size() + 16, 0) {
    std::memcpy(buf_.data(), salt.data(), salt.size());
  }

  bool bit(std::uint64_t card, std::uint64_t round) {
    std::uint8_t* tail = buf_.data() + buf_.size() - 16;
    for (int i = 0; i < 8; ++i) tail[i] = (card >> (8 * i)) & 0xff;
    for (int i = 0; i < 8; ++i) tail[8 + i] = (round >> (8 * i)) & 0xff;
    return (h_.digest(buf_)[0] & 0x80) != 0;
  }

 private:
  const HashFunction& h_;
  std::vector<std::uint8_t> buf_;
};

std::uint64_t round_cap(std::size_t n) {
  return 64 * std::bit_width(n - 1) + 512;
}

}  // namespace

bool shuffle_bit(const HashFunction& h, std::span<const std::uint8_t> salt,
                 std::uint64_t card, std::uint64_t round) {
  return CoinStream(h, salt).bit(card, round);
}

ShuffleResult inverse_riffle_shuffle(const HashFunction& h, std::size_t n,
                                     std::span<const std::uint8_t> salt) {
  if (n == 0) throw UsageError("inverse_riffle_shuffle: n must be >= 1");

  std::vector<std::uint32_t> deck(n);
  std::iota(deck.begin(), deck.end(), 0);

  // starts[pos] == 1 iff the accumulated bit sequence of deck[pos] differs
  // from that of deck[pos-1] (starts[0] is always 1).  Each round is a stable
  // partition by the fresh bit, so cards with equal sequences stay adjacent;
  // all sequences are pairwise distinct exactly when every flag is set.  This
  // is the same stopping time as the all-pairs separation matrix, tracked in
  // O(n) space instead of O(n^2).
  std::vector<std::uint8_t> starts(n, 0);
  starts[0] = 1;
  std::size_t groups = 1;

  CoinStream coins(h, salt);
  std::vector<std::uint32_t> pile0, pile1;
  std::vector<std::uint8_t> flags0, flags1;
  pile0.reserve(n);
  pile1.reserve(n);
  flags0.reserve(n);
  flags1.reserve(n);

  const std::uint64_t cap = round_cap(n);
  std::uint32_t round = 0;
  while (groups < n) {
    if (round >= cap)
      throw InternalError("inverse_riffle_shuffle: round cap exceeded");
    pile0.clear();
    pile1.clear();
    flags0.clear();
    flags1.clear();
    bool pending0 = true, pending1 = true;
    for (std::size_t pos = 0; pos < n; ++pos) {
      pending0 |= starts[pos] != 0;
      pending1 |= starts[pos] != 0;
      if (coins.bit(pos + 1, round)) {
        pile1.push_back(deck[pos]);
        flags1.push_back(pending1 ? 1 : 0);
        pending1 = false;
      } else {
        pile0.push_back(deck[pos]);
        flags0.push_back(pending0 ? 1 : 0);
        pending0 = false;
      }
    }
    std::copy(pile1.begin(), pile1.end(),
              std::copy(pile0.begin(), pile0.end(), deck.begin()));
    std::copy(flags1.begin(), flags1.end(),
              std::copy(flags0.begin(), flags0.end(), starts.begin()));
    groups = std::accumulate(starts.begin(), starts.end(), std::size_t{0});
    ++round;
  }

  return ShuffleResult{Permutation(std::move(deck)), round};
}

}  // namespace rscram
