#ifndef RSCRAM_PERMUTATION_HPP_
#define RSCRAM_PERMUTATION_HPP_

#include <cstdint>
#include <span>
#include <vector>

#include "rscram/bitword.hpp"

namespace rscram {

// Bijection on [0, n); mapping_[i] is the image of i.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<std::uint32_t> mapping);

  static Permutation identity(std::size_t n);

  std::size_t size() const { return mapping_.size(); }
  std::uint32_t operator()(std::size_t i) const { return mapping_[i]; }
  std::span<const std::uint32_t> mapping() const { return mapping_; }

  Permutation inverted() const;

  // (compose(p, q))(i) = p(q(i)).
  static Permutation compose(const Permutation& p, const Permutation& q);

  // Moves the element at position i to position p(i): result[p(i)] = seq[i].
  BitWord apply(const BitWord& seq) const;
  std::vector<std::uint32_t> apply(std::span<const std::uint32_t> seq) const;

  bool operator==(const Permutation&) const = default;

 private:
  std::vector<std::uint32_t> mapping_;
};

// Permutation induced by a bit word: 0-labelled positions keep their relative
// order at the front, 1-labelled positions follow, offset by the zero count.
Permutation riffle_permutation(const BitWord& word);

}  // namespace rscram

#endif  // RSCRAM_PERMUTATION_HPP_
