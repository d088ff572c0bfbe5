#include "rscram/bitword.hpp"

#include <bit>

#include "rscram/errors.hpp"

namespace rscram {

BitWord BitWord::from_string(std::string_view s) {
  BitWord w(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '1')
      w.set_bit(i, true);
    else if (s[i] != '0')
      throw UsageError("bit word string must contain only '0' and '1'");
  }
  return w;
}

BitWord BitWord::complemented() const {
  BitWord w(size_);
  for (std::size_t b = 0; b < blocks_.size(); ++b) w.blocks_[b] = ~blocks_[b];
  // Clear the padding bits of the last block so equality stays well defined.
  if (size_ & 63) w.blocks_.back() &= (std::uint64_t{1} << (size_ & 63)) - 1;
  return w;
}

std::size_t BitWord::hamming_weight() const {
  std::size_t total = 0;
  for (std::uint64_t b : blocks_) total += std::popcount(b);
  return total;
}

std::string BitWord::to_string() const {
  std::string s(size_, '0');
  for (std::size_t i = 0; i < size_; ++i)
    if (bit(i)) s[i] = '1';
  return s;
}

std::size_t rank(const BitWord& word, std::size_t i) {
  if (i >= word.size()) throw UsageError("rank: bit index out of range");
  std::size_t same = 0;
  bool value = word.bit(i);
  for (std::size_t j = 0; j < i; ++j)
    if (word.bit(j) == value) ++same;
  return same;
}

}  // namespace rscram
