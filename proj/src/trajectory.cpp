#include "rscram/trajectory.hpp"

#include "rscram/errors.hpp"

namespace rscram {

BitMatrix::BitMatrix(std::vector<BitWord> columns) : columns_(std::move(columns)) {
  if (columns_.empty()) throw UsageError("bit matrix needs at least one column");
  std::size_t g = columns_.size();
  std::size_t expect = std::size_t{1} << g;
  for (const BitWord& c : columns_)
    if (c.size() != expect)
      throw UsageError("bit matrix columns must all have length 2^g");
}

BitMatrix binary_representation(const Permutation& sigma, std::size_t g) {
  if (g == 0 || g >= 32) throw UsageError("binary_representation: bad garlic");
  std::size_t n = std::size_t{1} << g;
  if (sigma.size() != n)
    throw UsageError("binary_representation: permutation size is not 2^g");
  std::vector<BitWord> cols(g, BitWord(n));
  for (std::size_t j = 0; j < n; ++j) {
    std::uint32_t v = sigma(j);
    for (std::size_t i = 0; i < g; ++i)
      if ((v >> (g - 1 - i)) & 1) cols[i].set_bit(j, true);
  }
  return BitMatrix(std::move(cols));
}

BitMatrix trace_trajectories(const BitMatrix& b) {
  std::vector<BitWord> out;
  out.reserve(b.garlic());
  out.push_back(b.column(0));
  for (std::size_t i = 1; i < b.garlic(); ++i)
    out.push_back(riffle_permutation(out.back()).apply(b.column(i)));
  return BitMatrix(std::move(out));
}

std::size_t trajectory_endpoint(const BitMatrix& traj, std::size_t j) {
  if (j >= traj.rows()) throw UsageError("trajectory_endpoint: row out of range");
  std::size_t k = 0;
  for (std::size_t i = 0; i < traj.garlic(); ++i)
    if (traj.column(i).bit(j)) k |= std::size_t{1} << i;
  return k;
}

}  // namespace rscram
