#ifndef RSCRAM_BITWORD_HPP_
#define RSCRAM_BITWORD_HPP_

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace rscram {

// Fixed-length bit sequence b_0 .. b_{n-1}, packed 64 bits per block
// (bit i lives in blocks_[i/64] at position i%64).
class BitWord {
 public:
  BitWord() = default;
  explicit BitWord(std::size_t n) : size_(n), blocks_((n + 63) / 64, 0) {}

  static BitWord from_string(std::string_view s);

  std::size_t size() const { return size_; }

  bool bit(std::size_t i) const {
    return (blocks_[i >> 6] >> (i & 63)) & 1;
  }

  void set_bit(std::size_t i, bool v) {
    std::uint64_t mask = std::uint64_t{1} << (i & 63);
    if (v)
      blocks_[i >> 6] |= mask;
    else
      blocks_[i >> 6] &= ~mask;
  }

  BitWord complemented() const;
  std::size_t hamming_weight() const;
  std::string to_string() const;

  bool operator==(const BitWord&) const = default;

 private:
  std::size_t size_ = 0;
  std::vector<std::uint64_t> blocks_;
};

// Number of positions j < i carrying the same bit value as position i.
std::size_t rank(const BitWord& word, std::size_t i);

}  // namespace rscram

#endif  // RSCRAM_BITWORD_HPP_
