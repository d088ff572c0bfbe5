#ifndef RSCRAM_TESTS_ORACLES_HPP_
#define RSCRAM_TESTS_ORACLES_HPP_

#include <algorithm>
#include <cstring>
#include <numeric>
#include <vector>

#include "rscram/analysis.hpp"
#include "rscram/graph.hpp"
#include "rscram/hash_function.hpp"
#include "rscram/hasher.hpp"
#include "rscram/shuffle.hpp"
#include "rscram/trajectory.hpp"

// Independent reference implementations, deliberately written in the most
// literal way possible; they exist only to cross-check the library.
namespace oracles {

// Inverse riffle shuffle with the quadratic all-pairs separation matrix.
inline rscram::ShuffleResult shuffle_pair_matrix(
    const rscram::HashFunction& h, std::size_t n,
    std::span<const std::uint8_t> salt) {
  std::vector<std::uint32_t> deck(n);
  std::iota(deck.begin(), deck.end(), 0);
  std::vector<std::vector<bool>> separated(n, std::vector<bool>(n, false));
  auto all_separated = [&] {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < i; ++j)
        if (!separated[i][j]) return false;
    return true;
  };
  std::uint32_t round = 0;
  while (!all_separated()) {
    std::vector<std::uint32_t> s0, s1;
    for (std::size_t pos = 0; pos < n; ++pos) {
      if (rscram::shuffle_bit(h, salt, pos + 1, round))
        s1.push_back(deck[pos]);
      else
        s0.push_back(deck[pos]);
    }
    for (std::uint32_t i : s0)
      for (std::uint32_t j : s1)
        separated[std::max(i, j)][std::min(i, j)] = true;
    deck.clear();
    deck.insert(deck.end(), s0.begin(), s0.end());
    deck.insert(deck.end(), s1.begin(), s1.end());
    ++round;
  }
  return {rscram::Permutation(std::move(deck)), round};
}

// Straight-line transcript of the 6-node evaluation (g=1, lambda=1), written
// out parent by parent.  The two columns of every layer are joined by all
// four permutation edges, so the transcript does not depend on the salt's
// shuffle outcome; the library result must still match byte for byte.
inline rscram::Digest transcript_g1(const rscram::HashFunction& h,
                                    std::span<const std::uint8_t> password) {
  using rscram::Digest;
  auto fold = [&](Digest v, const Digest& p) {
    std::uint8_t buf[64];
    std::memcpy(buf, v.data(), 32);
    std::memcpy(buf + 32, p.data(), 32);
    return h.digest(buf);
  };
  Digest zero{};
  Digest r0c0 = h.digest(password);
  Digest r0c1 = h.digest(r0c0);
  // Row 1: col 0 parents (0,0), (0,1); col 1 parents (1,0), (0,0), (0,1).
  Digest r1c0 = fold(fold(zero, r0c0), r0c1);
  Digest r1c1 = fold(fold(fold(zero, r1c0), r0c0), r0c1);
  // Row 2 mirrors row 1.
  Digest r2c0 = fold(fold(zero, r1c0), r1c1);
  Digest r2c1 = fold(fold(fold(zero, r2c0), r1c0), r1c1);
  return r2c1;
}

// Exact maximum set of vertex-disjoint paths by exhaustive backtracking.
class DisjointPathSearch {
 public:
  DisjointPathSearch(const rscram::RiffleGraph& graph, rscram::EdgeFilter filter)
      : node_count_(graph.node_count()), children_(node_count_) {
    for (std::size_t idx = 0; idx < node_count_; ++idx) {
      rscram::NodeId child = graph.node_at(idx);
      for (const rscram::ParentRef& p : graph.parents(child)) {
        if (filter == rscram::EdgeFilter::kInterLayerOnly &&
            !(p.kinds & rscram::kEdgePermutation))
          continue;
        children_[graph.node_index(p.node)].push_back(
            static_cast<std::uint32_t>(idx));
      }
    }
    // Descending order lets the search drop toward the sink row first,
    // which finds full routings quickly on graphs that admit them.
    for (auto& c : children_) std::sort(c.rbegin(), c.rend());
  }

  std::size_t max_disjoint(const std::vector<std::uint32_t>& sources,
                           const std::vector<std::uint32_t>& sinks) {
    sources_ = sources;
    is_sink_.assign(node_count_, false);
    for (std::uint32_t t : sinks) is_sink_[t] = true;
    used_.assign(node_count_, false);
    best_ = 0;
    done_ = false;
    extend(0, 0);
    return best_;
  }

 private:
  void extend(std::size_t src_index, std::size_t routed) {
    if (routed > best_) {
      best_ = routed;
      if (best_ == sources_.size()) done_ = true;  // cannot improve further
    }
    if (done_ || src_index == sources_.size()) return;
    if (routed + (sources_.size() - src_index) <= best_) return;  // bound
    std::uint32_t s = sources_[src_index];
    if (!used_[s]) walk(s, src_index, routed);
    if (done_) return;
    extend(src_index + 1, routed);  // leaving this source unrouted
  }

  // Depth-first over all simple paths from v; on reaching a free sink,
  // commits the path and recurses into the next source.
  void walk(std::uint32_t v, std::size_t src_index, std::size_t routed) {
    used_[v] = true;
    if (is_sink_[v]) {
      is_sink_[v] = false;  // a sink carries at most one path
      extend(src_index + 1, routed + 1);
      is_sink_[v] = true;
      // A longer path through this node may still be needed.
    }
    if (!done_)
      for (std::uint32_t next : children_[v]) {
        if (done_) break;
        if (!used_[next]) walk(next, src_index, routed);
      }
    used_[v] = false;
  }

  std::size_t node_count_;
  std::vector<std::vector<std::uint32_t>> children_;
  std::vector<std::uint32_t> sources_;
  std::vector<bool> is_sink_;
  std::vector<bool> used_;
  std::size_t best_ = 0;
  bool done_ = false;
};

// Walks the upper layers from input j, at layer i taking whichever
// permutation edge corresponds to bit i of row j of the traced matrix.
inline std::size_t walk_endpoint(const rscram::BitMatrix& traj, std::size_t j) {
  std::size_t pos = j;
  for (std::size_t i = 0; i < traj.garlic(); ++i) {
    const rscram::BitWord& word = traj.column(i);
    bool choice = word.bit(j);
    const rscram::Permutation pi = rscram::riffle_permutation(word);
    const rscram::Permutation pibar =
        rscram::riffle_permutation(word.complemented());
    pos = word.bit(pos) == choice ? pi(pos) : pibar(pos);
  }
  return pos;
}

}  // namespace oracles

#endif  // RSCRAM_TESTS_ORACLES_HPP_
