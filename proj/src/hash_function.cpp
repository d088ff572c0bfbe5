#include "rscram/hash_function.hpp"

#include <openssl/sha.h>

namespace rscram {

Digest Sha256::digest(std::span<const std::uint8_t> data) const {
  Digest out;
  SHA256(data.data(), data.size(), out.data());
  return out;
}

const Sha256& Sha256::instance() {
  static const Sha256 h;
  return h;
}

}  // namespace rscram
