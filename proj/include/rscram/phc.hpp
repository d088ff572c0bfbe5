#ifndef RSCRAM_PHC_HPP_
#define RSCRAM_PHC_HPP_

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "rscram/hash_function.hpp"
#include "rscram/hasher.hpp"

namespace rscram {

// $rscram$v=1$g=<int>,l=<int>$<base64 salt>$<base64 digest>
// Base64 uses the standard alphabet without padding.
struct PhcString {
  std::uint32_t version = 1;
  std::uint32_t garlic = 0;
  std::uint32_t lambda = 0;
  std::vector<std::uint8_t> salt;
  Digest digest{};

  std::string encode() const;
  static PhcString decode(std::string_view text);  // DecodeError if malformed

  bool operator==(const PhcString&) const = default;
};

std::string base64_encode(std::span<const std::uint8_t> data);
std::vector<std::uint8_t> base64_decode(std::string_view text);

std::vector<std::uint8_t> random_salt(std::size_t bytes = kDefaultSaltBytes);

// Evaluates the password under params and packages the result; draws a
// random 16-byte salt when params.salt is empty.
std::string hash_password(const HashFunction& h, HashParams params,
                          std::span<const std::uint8_t> password);

// True iff the recomputed digest matches (constant-time comparison).
// Malformed input raises DecodeError rather than returning false.
bool verify_password(const HashFunction& h, std::string_view encoded,
                     std::span<const std::uint8_t> password);

}  // namespace rscram

#endif  // RSCRAM_PHC_HPP_
