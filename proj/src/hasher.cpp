#include "rscram/hasher.hpp"

#include <algorithm>
#include <cstring>
#include <new>

#include "rscram/errors.hpp"
#include "rscram/layer_stream.hpp"
#include "rscram/shuffle.hpp"
#include "rscram/trajectory.hpp"

namespace rscram {

LayerParentStream::LayerParentStream(const BitWord& word, bool mirrored)
    : word_(word),
      mirrored_(mirrored),
      n_(word.size()),
      ones_total_(word.hamming_weight()),
      zeros_total_(n_ - ones_total_) {}

std::uint32_t LayerParentStream::scan(std::size_t& cursor, bool value) {
  while (word_.bit(cursor) != value) ++cursor;
  return static_cast<std::uint32_t>(cursor++);
}

std::span<const std::uint32_t> LayerParentStream::next() {
  if (col_ >= n_)
    throw InternalError("LayerParentStream: advanced past the layer width");
  std::uint32_t c = col_++;
  count_ = 0;
  if (c == 0) out_[count_++] = static_cast<std::uint32_t>(n_ - 1);  // wrap
  std::uint32_t p, q;
  if (mirrored_) {
    // Forward application: parents are pi(c) and pibar(c).
    if (word_.bit(c)) {
      p = static_cast<std::uint32_t>(zeros_total_ + ones_seen_);  // pi
      q = static_cast<std::uint32_t>(ones_seen_);                 // pibar
      ++ones_seen_;
    } else {
      p = static_cast<std::uint32_t>(zeros_seen_);
      q = static_cast<std::uint32_t>(ones_total_ + zeros_seen_);
      ++zeros_seen_;
    }
  } else {
    // Preimages: pi^-1 walks zeros then ones, pibar^-1 ones then zeros.
    p = c < zeros_total_ ? scan(zero_scan_a_, false) : scan(one_scan_a_, true);
    q = c < ones_total_ ? scan(one_scan_b_, true) : scan(zero_scan_b_, false);
  }
  out_[count_++] = p;
  if (q != p) out_[count_++] = q;
  std::sort(out_, out_ + count_);
  std::uint32_t unique =
      static_cast<std::uint32_t>(std::unique(out_, out_ + count_) - out_);
  return {out_, unique};
}

HashParams::HashParams(std::uint32_t g, std::uint32_t l,
                       std::vector<std::uint8_t> s, std::uint32_t v)
    : garlic(g), lambda(l), salt(std::move(s)), version(v) {
  if (garlic < kMinGarlic || garlic > kMaxGarlic)
    throw UsageError("garlic must be in [1, 24]");
  if (lambda < kMinLambda || lambda > kMaxLambda)
    throw UsageError("lambda must be in [1, 64]");
  if (!salt.empty() && salt.size() < kMinSaltBytes)
    throw UsageError("salt must be at least 8 bytes");
  if (version != 1) throw UsageError("unknown format version");
}

namespace {

std::vector<BitWord> layer_words_for(const HashFunction& h,
                                     const HashParams& params,
                                     std::uint32_t* rounds) {
  std::size_t n = std::size_t{1} << params.garlic;
  ShuffleResult sr = inverse_riffle_shuffle(h, n, params.salt);
  if (rounds) *rounds = sr.rounds;
  return trace_trajectories(
             binary_representation(sr.permutation, params.garlic))
      .columns();
}

const BitWord& word_for(const std::vector<BitWord>& words, std::size_t g,
                        std::size_t layer) {
  return layer < g ? words[layer] : words[2 * g - 1 - layer];
}

}  // namespace

Digest evaluate(const HashFunction& h, std::span<const std::uint8_t> password,
                const HashParams& params, EvalStats* stats,
                MemoryTrace* trace) {
  if (params.salt.empty())
    throw UsageError("evaluate: salt is required");

  std::size_t g = params.garlic;
  std::size_t n = std::size_t{1} << g;
  std::size_t two_g = 2 * g;

  std::uint32_t shuffle_rounds = 0;
  std::vector<BitWord> words = layer_words_for(h, params, &shuffle_rounds);

  std::vector<Digest> prev, cur;
  try {
    prev.resize(n);
    cur.resize(n);
  } catch (const std::bad_alloc&) {
    throw ResourceError("evaluate: cannot allocate two row buffers");
  }

  // Row 0: hash chain seeded from the password.
  prev[0] = h.digest(password);
  if (trace) trace->push_back(trace_write(0, 0));
  for (std::size_t i = 1; i < n; ++i) {
    prev[i] = h.digest(prev[i - 1]);
    if (trace) {
      trace->push_back(trace_read(0, i - 1));
      trace->push_back(trace_write(0, i));
    }
  }

  std::uint64_t eval_calls = 0;
  std::uint8_t buf[2 * kDigestBytes];
  auto fold = [&](Digest& v, const Digest& parent) {
    std::memcpy(buf, v.data(), kDigestBytes);
    std::memcpy(buf + kDigestBytes, parent.data(), kDigestBytes);
    v = h.digest(buf);
    ++eval_calls;
  };

  for (std::uint32_t round = 1; round <= params.lambda; ++round) {
    for (std::size_t layer = 0; layer < two_g; ++layer) {
      std::uint64_t row_above = (round - 1) * two_g + layer;
      LayerParentStream stream(word_for(words, g, layer), layer >= g);
      for (std::size_t col = 0; col < n; ++col) {
        Digest v{};
        if (col > 0) {
          fold(v, cur[col - 1]);
          if (trace) trace->push_back(trace_read(row_above + 1, col - 1));
        }
        for (std::uint32_t pc : stream.next()) {
          fold(v, prev[pc]);
          if (trace) trace->push_back(trace_read(row_above, pc));
        }
        cur[col] = v;
        if (trace) trace->push_back(trace_write(row_above + 1, col));
      }
      std::swap(prev, cur);
    }
    // Row 2g of this round is row 0 of the next; prev already holds it.
  }

  if (stats) {
    stats->seeding_calls = n;
    stats->evaluation_calls = eval_calls;
    stats->shuffle_calls = std::uint64_t{shuffle_rounds} * n;
    stats->shuffle_rounds = shuffle_rounds;
    stats->row_buffer_bytes = (prev.capacity() + cur.capacity()) * kDigestBytes;
    stats->word_bits = words.size() * n;
  }
  return prev[n - 1];
}

HashCallCount hash_call_count(const HashFunction& h, const HashParams& params) {
  if (params.salt.empty())
    throw UsageError("hash_call_count: salt is required");
  std::size_t g = params.garlic;
  std::size_t n = std::size_t{1} << g;

  HashCallCount counts;
  std::uint32_t rounds = 0;
  std::vector<BitWord> words = layer_words_for(h, params, &rounds);
  counts.shuffle_rounds = rounds;
  counts.shuffle = std::uint64_t{rounds} * n;
  counts.seeding = n;

  std::uint64_t per_round = 0;
  for (std::size_t layer = 0; layer < 2 * g; ++layer) {
    LayerParentStream stream(word_for(words, g, layer), layer >= g);
    for (std::size_t col = 0; col < n; ++col)
      per_round += (col > 0 ? 1 : 0) + stream.next().size();
  }
  counts.evaluation = per_round * params.lambda;
  return counts;
}

}  // namespace rscram
