#ifndef RSCRAM_TRAJECTORY_HPP_
#define RSCRAM_TRAJECTORY_HPP_

#include <cstddef>
#include <vector>

#include "rscram/bitword.hpp"
#include "rscram/permutation.hpp"

namespace rscram {

// g columns of 2^g bits each.  Row j (bits column(0)[j] .. column(g-1)[j])
// is the MSB-first binary encoding of the j-th entry when the matrix is a
// binary representation of a permutation.
class BitMatrix {
 public:
  explicit BitMatrix(std::vector<BitWord> columns);

  std::size_t garlic() const { return columns_.size(); }
  std::size_t rows() const { return columns_.empty() ? 0 : columns_[0].size(); }
  const BitWord& column(std::size_t i) const { return columns_[i]; }
  const std::vector<BitWord>& columns() const { return columns_; }

  bool operator==(const BitMatrix&) const = default;

 private:
  std::vector<BitWord> columns_;
};

// Rows enumerate sigma(0) .. sigma(2^g - 1) in g-bit MSB-first binary;
// column 0 holds the most significant bits.
BitMatrix binary_representation(const Permutation& sigma, std::size_t g);

// Column recurrence: out_0 = in_0, out_i = riffle_permutation(out_{i-1})
// applied to in_i.  The outputs are the per-layer words of the graph.
BitMatrix trace_trajectories(const BitMatrix& b);

// Index whose g-bit binary representation is the reversal of row j, i.e. the
// column of the middle row reached from input j by following the layer edges
// selected by row j's bits.
std::size_t trajectory_endpoint(const BitMatrix& traj, std::size_t j);

}  // namespace rscram

#endif  // RSCRAM_TRAJECTORY_HPP_
