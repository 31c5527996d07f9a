#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace xtr {

/// Fixed-length bit sequence. Bit 0 is the first (most significant) bit;
/// storage packs bits MSB-first into 64-bit words so that comparing words
/// compares strings lexicographically. Bits past size() are always zero.
class BitString {
 public:
  BitString() = default;
  explicit BitString(std::size_t length) : size_(length), words_((length + 63) / 64, 0) {}

  /// `value` read as a `length`-bit big-endian number (length <= 64).
  static BitString from_uint(std::uint64_t value, std::size_t length);
  /// Characters '0'/'1'.
  static BitString from_binary(std::string_view bits);
  /// `<length>:<hex>` with the final nibble zero padded.
  static BitString parse(std::string_view text);
  /// Packed MSB-first words; bits past `length` are cleared.
  static BitString from_words(std::vector<std::uint64_t> words, std::size_t length);

  std::size_t size() const noexcept { return size_; }
  bool empty() const noexcept { return size_ == 0; }

  bool operator[](std::size_t i) const noexcept {
    return (words_[i >> 6] >> (63 - (i & 63))) & 1u;
  }
  bool test(std::size_t i) const;
  void set(std::size_t i, bool bit = true);

  /// Big-endian value of the whole string; requires size() <= 64.
  std::uint64_t to_uint() const;

  BitString prefix(std::size_t q) const { return substr(0, q); }
  BitString substr(std::size_t pos, std::size_t len) const;
  /// Prepends zeros up to `length` bits (no-op when already that long).
  BitString pad_front(std::size_t length) const;

  std::size_t popcount() const noexcept;
  bool parity() const noexcept { return popcount() & 1u; }

  BitString& operator^=(const BitString& other);
  BitString& operator&=(const BitString& other);
  friend BitString operator^(BitString a, const BitString& b) { return a ^= b; }
  friend BitString operator&(BitString a, const BitString& b) { return a &= b; }

  /// Concatenation a‖b.
  friend BitString operator+(const BitString& a, const BitString& b);

  std::string binary() const;
  /// `<length>:<hex>` text form.
  std::string text() const;

  std::span<const std::uint64_t> words() const noexcept { return words_; }

  friend bool operator==(const BitString&, const BitString&) = default;
  friend std::strong_ordering operator<=>(const BitString& a, const BitString& b);

 private:
  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

BitString concat(std::span<const BitString> parts);

}  // namespace xtr
