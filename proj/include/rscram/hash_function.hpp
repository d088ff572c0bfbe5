#ifndef RSCRAM_HASH_FUNCTION_HPP_
#define RSCRAM_HASH_FUNCTION_HPP_

#include <array>
#include <atomic>
#include <cstdint>
#include <span>
#include <string_view>

namespace rscram {

inline constexpr std::size_t kDigestBytes = 32;
using Digest = std::array<std::uint8_t, kDigestBytes>;

class HashFunction {
 public:
  virtual ~HashFunction() = default;
  virtual Digest digest(std::span<const std::uint8_t> data) const = 0;
  virtual std::string_view name() const = 0;
};

class Sha256 final : public HashFunction {
 public:
  Digest digest(std::span<const std::uint8_t> data) const override;
  std::string_view name() const override { return "sha256"; }

  static const Sha256& instance();
};

// Pass-through wrapper that counts invocations; used to cross-check the
// predicted call counts against what an evaluation actually performs.
class CountingHash final : public HashFunction {
 public:
  explicit CountingHash(const HashFunction& inner) : inner_(inner) {}

  Digest digest(std::span<const std::uint8_t> data) const override {
    calls_.fetch_add(1, std::memory_order_relaxed);
    return inner_.digest(data);
  }
  std::string_view name() const override { return inner_.name(); }

  std::uint64_t calls() const { return calls_.load(std::memory_order_relaxed); }
  void reset() { calls_.store(0, std::memory_order_relaxed); }

 private:
  const HashFunction& inner_;
  mutable std::atomic<std::uint64_t> calls_{0};
};

}  // namespace rscram

#endif  // RSCRAM_HASH_FUNCTION_HPP_
