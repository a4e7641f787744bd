#include "gw/bitstring.hpp"

#include "gw/error.hpp"

namespace gw {

BitString::BitString(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
  for (auto b : bits_)
    if (b > 1) throw InvalidArgument("bit values must be 0 or 1");
}

BitString BitString::parse(std::string_view text) {
  std::vector<std::uint8_t> bits;
  bits.reserve(text.size());
  for (char c : text) {
    if (c != '0' && c != '1') throw InvalidArgument("bit string may only contain 0 and 1: '" + std::string(text) + "'");
    bits.push_back(static_cast<std::uint8_t>(c - '0'));
  }
  return BitString(std::move(bits));
}

BitString BitString::from_index(std::uint64_t value, std::size_t length) {
  if (length > 63) throw InvalidArgument("bit string index length above 63");
  std::vector<std::uint8_t> bits(length);
  for (std::size_t i = 0; i < length; ++i) bits[i] = (value >> (length - 1 - i)) & 1u;
  return BitString(std::move(bits));
}

std::vector<BitString> BitString::all(std::size_t length) {
  if (length > 20) throw InvalidArgument("refusing to enumerate more than 2^20 bit strings");
  std::vector<BitString> out;
  out.reserve(std::size_t{1} << length);
  for (std::uint64_t v = 0; v < (std::uint64_t{1} << length); ++v) out.push_back(from_index(v, length));
  return out;
}

void BitString::push_back(int bit) {
  if (bit != 0 && bit != 1) throw InvalidArgument("bit values must be 0 or 1");
  bits_.push_back(static_cast<std::uint8_t>(bit));
}

std::string BitString::str() const {
  std::string out;
  out.reserve(bits_.size());
  for (auto b : bits_) out += static_cast<char>('0' + b);
  return out;
}

}  // namespace gw
