#include "rscram/permutation.hpp"

#include <numeric>

#include "rscram/errors.hpp"

namespace rscram {

Permutation::Permutation(std::vector<std::uint32_t> mapping)
    : mapping_(std::move(mapping)) {
  std::vector<bool> seen(mapping_.size(), false);
  for (std::uint32_t v : mapping_) {
    if (v >= mapping_.size() || seen[v])
      throw UsageError("permutation mapping is not a bijection on [0, n)");
    seen[v] = true;
  }
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<std::uint32_t> m(n);
  std::iota(m.begin(), m.end(), 0);
  Permutation p;
  p.mapping_ = std::move(m);
  return p;
}

Permutation Permutation::inverted() const {
  std::vector<std::uint32_t> inv(mapping_.size());
  for (std::size_t i = 0; i < mapping_.size(); ++i)
    inv[mapping_[i]] = static_cast<std::uint32_t>(i);
  Permutation p;
  p.mapping_ = std::move(inv);
  return p;
}

Permutation Permutation::compose(const Permutation& p, const Permutation& q) {
  if (p.size() != q.size())
    throw UsageError("compose: permutation sizes differ");
  std::vector<std::uint32_t> m(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) m[i] = p(q(i));
  Permutation r;
  r.mapping_ = std::move(m);
  return r;
}

BitWord Permutation::apply(const BitWord& seq) const {
  if (seq.size() != mapping_.size())
    throw UsageError("apply: sequence length does not match permutation");
  BitWord out(seq.size());
  for (std::size_t i = 0; i < seq.size(); ++i)
    if (seq.bit(i)) out.set_bit(mapping_[i], true);
  return out;
}

std::vector<std::uint32_t> Permutation::apply(
    std::span<const std::uint32_t> seq) const {
  if (seq.size() != mapping_.size())
    throw UsageError("apply: sequence length does not match permutation");
  std::vector<std::uint32_t> out(seq.size());
  for (std::size_t i = 0; i < seq.size(); ++i) out[mapping_[i]] = seq[i];
  return out;
}

Permutation riffle_permutation(const BitWord& word) {
  std::size_t n = word.size();
  std::size_t zeros_total = n - word.hamming_weight();
  std::vector<std::uint32_t> m(n);
  std::size_t zeros = 0, ones = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (word.bit(i))
      m[i] = static_cast<std::uint32_t>(zeros_total + ones++);
    else
      m[i] = static_cast<std::uint32_t>(zeros++);
  }
  return Permutation(std::move(m));
}

}  // namespace rscram
