#ifndef RSCRAM_LAYER_STREAM_HPP_
#define RSCRAM_LAYER_STREAM_HPP_

#include <cstdint>
#include <span>

#include "rscram/bitword.hpp"

namespace rscram {

// Streams the inter-layer parents (wrap edge plus the two permutation-edge
// preimages) of target columns 0, 1, 2, ... of one layer, in O(1) working
// memory.  For an upper layer the permutation parents of column c are
// pi^-1(c) and pibar^-1(c), read off with four monotone scans of the word;
// for a mirrored layer they are pi(c) and pibar(c), read off with running
// rank counters.  Results are sorted ascending and deduplicated, matching
// the canonical parent order of the materialized graph.
class LayerParentStream {
 public:
  LayerParentStream(const BitWord& word, bool mirrored);

  // Parents of the next target column; valid until the following call.
  std::span<const std::uint32_t> next();

 private:
  std::uint32_t scan(std::size_t& cursor, bool value);

  const BitWord& word_;
  bool mirrored_;
  std::size_t n_;
  std::size_t ones_total_;
  std::size_t zeros_total_;
  std::uint32_t col_ = 0;
  // Upper layers: independent scan cursors for the four preimage sequences.
  std::size_t zero_scan_a_ = 0, one_scan_a_ = 0;
  std::size_t zero_scan_b_ = 0, one_scan_b_ = 0;
  // Mirrored layers: running ranks.
  std::size_t zeros_seen_ = 0, ones_seen_ = 0;
  std::uint32_t out_[3];
  std::uint32_t count_ = 0;
};

}  // namespace rscram

#endif  // RSCRAM_LAYER_STREAM_HPP_
