#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace gw {

/// Finite 0/1 prefix of an infinite index sequence.
class BitString {
 public:
  BitString() = default;
  explicit BitString(std::vector<std::uint8_t> bits);

  /// Accepts only '0' and '1'; the empty string is valid.
  static BitString parse(std::string_view text);
  /// The `length` low bits of `value`, most significant first.
  static BitString from_index(std::uint64_t value, std::size_t length);
  /// All 2^length strings in index order.
  static std::vector<BitString> all(std::size_t length);

  std::size_t size() const noexcept { return bits_.size(); }
  bool empty() const noexcept { return bits_.empty(); }
  int operator[](std::size_t i) const { return bits_.at(i); }
  void push_back(int bit);

  std::string str() const;

  friend bool operator==(const BitString&, const BitString&) = default;
  friend auto operator<=>(const BitString&, const BitString&) = default;

 private:
  std::vector<std::uint8_t> bits_;
};

}  // namespace gw
