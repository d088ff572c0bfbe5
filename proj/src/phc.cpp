#include "rscram/phc.hpp"

#include <openssl/crypto.h>
#include <openssl/rand.h>

#include <array>
#include <charconv>

#include "rscram/errors.hpp"

namespace rscram {

namespace {

constexpr char kAlphabet[] =
    "ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz0123456789+/";

std::array<std::int8_t, 256> decode_table() {
  std::array<std::int8_t, 256> t;
  t.fill(-1);
  for (int i = 0; i < 64; ++i) t[static_cast<unsigned char>(kAlphabet[i])] = i;
  return t;
}

std::uint32_t parse_uint(std::string_view s) {
  std::uint32_t value = 0;
  if (s.empty() || s.size() > 9)
    throw DecodeError("phc: bad integer field");
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size())
    throw DecodeError("phc: bad integer field");
  return value;
}

std::string_view take_field(std::string_view& rest) {
  std::size_t pos = rest.find('$');
  std::string_view field = rest.substr(0, pos);
  rest = pos == std::string_view::npos ? std::string_view{} : rest.substr(pos + 1);
  return field;
}

}  // namespace

std::string base64_encode(std::span<const std::uint8_t> data) {
  std::string out;
  out.reserve((data.size() + 2) / 3 * 4);
  std::size_t i = 0;
  for (; i + 3 <= data.size(); i += 3) {
    std::uint32_t v = (data[i] << 16) | (data[i + 1] << 8) | data[i + 2];
    out += kAlphabet[(v >> 18) & 63];
    out += kAlphabet[(v >> 12) & 63];
    out += kAlphabet[(v >> 6) & 63];
    out += kAlphabet[v & 63];
  }
  std::size_t left = data.size() - i;
  if (left == 1) {
    std::uint32_t v = data[i] << 16;
    out += kAlphabet[(v >> 18) & 63];
    out += kAlphabet[(v >> 12) & 63];
  } else if (left == 2) {
    std::uint32_t v = (data[i] << 16) | (data[i + 1] << 8);
    out += kAlphabet[(v >> 18) & 63];
    out += kAlphabet[(v >> 12) & 63];
    out += kAlphabet[(v >> 6) & 63];
  }
  return out;
}

std::vector<std::uint8_t> base64_decode(std::string_view text) {
  static const std::array<std::int8_t, 256> table = decode_table();
  if (text.size() % 4 == 1) throw DecodeError("base64: impossible length");
  std::vector<std::uint8_t> out;
  out.reserve(text.size() / 4 * 3 + 2);
  std::uint32_t acc = 0;
  int bits = 0;
  for (char ch : text) {
    std::int8_t v = table[static_cast<unsigned char>(ch)];
    if (v < 0) throw DecodeError("base64: invalid character");
    acc = (acc << 6) | static_cast<std::uint32_t>(v);
    bits += 6;
    if (bits >= 8) {
      bits -= 8;
      out.push_back(static_cast<std::uint8_t>((acc >> bits) & 0xff));
    }
  }
  if (bits > 0 && (acc & ((1u << bits) - 1)) != 0)
    throw DecodeError("base64: nonzero trailing bits");
  return out;
}

std::string PhcString::encode() const {
  std::string out = "$rscram$v=";
  out += std::to_string(version);
  out += "$g=";
  out += std::to_string(garlic);
  out += ",l=";
  out += std::to_string(lambda);
  out += '$';
  out += base64_encode(salt);
  out += '$';
  out += base64_encode(digest);
  return out;
}

PhcString PhcString::decode(std::string_view text) {
  if (text.empty() || text[0] != '$') throw DecodeError("phc: missing prefix");
  std::string_view rest = text.substr(1);
  if (take_field(rest) != "rscram") throw DecodeError("phc: wrong identifier");

  std::string_view vfield = take_field(rest);
  if (!vfield.starts_with("v=")) throw DecodeError("phc: missing version");
  PhcString parsed;
  parsed.version = parse_uint(vfield.substr(2));
  if (parsed.version != 1) throw DecodeError("phc: unsupported version");

  std::string_view params = take_field(rest);
  std::size_t comma = params.find(',');
  if (comma == std::string_view::npos) throw DecodeError("phc: missing params");
  std::string_view gfield = params.substr(0, comma);
  std::string_view lfield = params.substr(comma + 1);
  if (!gfield.starts_with("g=") || !lfield.starts_with("l="))
    throw DecodeError("phc: bad param names");
  parsed.garlic = parse_uint(gfield.substr(2));
  parsed.lambda = parse_uint(lfield.substr(2));

  std::string_view saltfield = take_field(rest);
  std::string_view hashfield = take_field(rest);
  if (!rest.empty()) throw DecodeError("phc: trailing fields");
  parsed.salt = base64_decode(saltfield);
  std::vector<std::uint8_t> digest = base64_decode(hashfield);
  if (digest.size() != kDigestBytes)
    throw DecodeError("phc: digest must be 32 bytes");
  std::copy(digest.begin(), digest.end(), parsed.digest.begin());

  if (parsed.garlic < kMinGarlic || parsed.garlic > kMaxGarlic ||
      parsed.lambda < kMinLambda || parsed.lambda > kMaxLambda ||
      parsed.salt.size() < kMinSaltBytes)
    throw DecodeError("phc: parameters out of range");
  return parsed;
}

std::vector<std::uint8_t> random_salt(std::size_t bytes) {
  std::vector<std::uint8_t> salt(bytes);
  if (RAND_bytes(salt.data(), static_cast<int>(salt.size())) != 1)
    throw ResourceError("entropy source failure");
  return salt;
}

std::string hash_password(const HashFunction& h, HashParams params,
                          std::span<const std::uint8_t> password) {
  if (params.salt.empty()) params.salt = random_salt();
  PhcString out;
  out.version = params.version;
  out.garlic = params.garlic;
  out.lambda = params.lambda;
  out.salt = params.salt;
  out.digest = evaluate(h, password, params);
  return out.encode();
}

bool verify_password(const HashFunction& h, std::string_view encoded,
                     std::span<const std::uint8_t> password) {
  PhcString parsed = PhcString::decode(encoded);
  HashParams params(parsed.garlic, parsed.lambda, parsed.salt, parsed.version);
  Digest fresh = evaluate(h, password, params);
  return CRYPTO_memcmp(fresh.data(), parsed.digest.data(), kDigestBytes) == 0;
}

}  // namespace rscram
