#include "xtr/bitstring.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "xtr/error.hpp"

namespace xtr {

BitString BitString::from_uint(std::uint64_t value, std::size_t length) {
  if (length > 64) throw DimensionError("from_uint: length exceeds 64 bits");
  if (length < 64 && (value >> length) != 0)
    throw DimensionError("from_uint: value does not fit in " + std::to_string(length) + " bits");
  BitString s(length);
  if (length) s.words_[0] = value << (64 - length);
  return s;
}

BitString BitString::from_words(std::vector<std::uint64_t> words, std::size_t length) {
  if (words.size() != (length + 63) / 64) throw DimensionError("from_words: word count does not match length");
  BitString s;
  s.size_ = length;
  s.words_ = std::move(words);
  if (length % 64) s.words_.back() &= ~std::uint64_t{0} << (64 - length % 64);
  return s;
}

BitString BitString::from_binary(std::string_view bits) {
  BitString s(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == '1')
      s.set(i);
    else if (bits[i] != '0')
      throw ParseError(0, "bad binary digit '" + std::string(1, bits[i]) + "'");
  }
  return s;
}

namespace {

int hex_value(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

}  // namespace

BitString BitString::parse(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos || colon == 0)
    throw ParseError(0, "bitstring must look like <length>:<hex>");
  std::size_t length = 0;
  for (char c : text.substr(0, colon)) {
    if (c < '0' || c > '9') throw ParseError(0, "bad bitstring length");
    length = length * 10 + static_cast<std::size_t>(c - '0');
    if (length > (std::size_t{1} << 32)) throw ParseError(0, "bitstring length too large");
  }
  const auto hex = text.substr(colon + 1);
  if (hex.size() != (length + 3) / 4)
    throw ParseError(0, "expected " + std::to_string((length + 3) / 4) + " hex digits for " +
                            std::to_string(length) + " bits");
  BitString s(length);
  for (std::size_t j = 0; j < hex.size(); ++j) {
    const int v = hex_value(hex[j]);
    if (v < 0) throw ParseError(0, "bad hex digit '" + std::string(1, hex[j]) + "'");
    for (int b = 0; b < 4; ++b) {
      const bool bit = (v >> (3 - b)) & 1;
      const std::size_t i = 4 * j + static_cast<std::size_t>(b);
      if (i < length)
        s.set(i, bit);
      else if (bit)
        throw ParseError(0, "nonzero padding bits in final nibble");
    }
  }
  return s;
}

bool BitString::test(std::size_t i) const {
  if (i >= size_) throw std::out_of_range("BitString::test");
  return (*this)[i];
}

void BitString::set(std::size_t i, bool bit) {
  if (i >= size_) throw std::out_of_range("BitString::set");
  const std::uint64_t mask = std::uint64_t{1} << (63 - (i & 63));
  if (bit)
    words_[i >> 6] |= mask;
  else
    words_[i >> 6] &= ~mask;
}

std::uint64_t BitString::to_uint() const {
  if (size_ > 64) throw DimensionError("to_uint: more than 64 bits");
  return size_ ? words_[0] >> (64 - size_) : 0;
}

BitString BitString::substr(std::size_t pos, std::size_t len) const {
  if (pos > size_ || len > size_ - pos) throw std::out_of_range("BitString::substr");
  BitString out(len);
  const std::size_t shift = pos & 63;
  const std::size_t first = pos >> 6;
  for (std::size_t w = 0; w < out.words_.size(); ++w) {
    std::uint64_t v = words_[first + w] << shift;
    if (shift && first + w + 1 < words_.size()) v |= words_[first + w + 1] >> (64 - shift);
    out.words_[w] = v;
  }
  if (len & 63) out.words_.back() &= ~std::uint64_t{0} << (64 - (len & 63));
  return out;
}

BitString BitString::pad_front(std::size_t length) const {
  if (length < size_) throw DimensionError("pad_front: target shorter than string");
  return BitString(length - size_) + *this;
}

std::size_t BitString::popcount() const noexcept {
  std::size_t c = 0;
  for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

BitString& BitString::operator^=(const BitString& other) {
  if (other.size_ != size_) throw DimensionError("xor of bitstrings of different lengths");
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= other.words_[w];
  return *this;
}

BitString& BitString::operator&=(const BitString& other) {
  if (other.size_ != size_) throw DimensionError("and of bitstrings of different lengths");
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= other.words_[w];
  return *this;
}

BitString operator+(const BitString& a, const BitString& b) {
  BitString out(a.size_ + b.size_);
  for (std::size_t w = 0; w < a.words_.size(); ++w) out.words_[w] = a.words_[w];
  const std::size_t shift = a.size_ & 63;
  const std::size_t base = a.size_ >> 6;
  for (std::size_t w = 0; w < b.words_.size(); ++w) {
    const std::uint64_t v = b.words_[w];
    out.words_[base + w] |= v >> shift;
    if (shift && base + w + 1 < out.words_.size()) out.words_[base + w + 1] |= v << (64 - shift);
  }
  return out;
}

std::string BitString::binary() const {
  std::string s(size_, '0');
  for (std::size_t i = 0; i < size_; ++i)
    if ((*this)[i]) s[i] = '1';
  return s;
}

std::string BitString::text() const {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string s = std::to_string(size_) + ":";
  for (std::size_t j = 0; j < (size_ + 3) / 4; ++j) {
    int v = 0;
    for (std::size_t b = 0; b < 4; ++b) {
      const std::size_t i = 4 * j + b;
      v = (v << 1) | (i < size_ && (*this)[i] ? 1 : 0);
    }
    s += kDigits[v];
  }
  return s;
}

std::strong_ordering operator<=>(const BitString& a, const BitString& b) {
  const std::size_t common = std::min(a.size_, b.size_);
  const std::size_t full = common >> 6;
  for (std::size_t w = 0; w < full; ++w)
    if (a.words_[w] != b.words_[w]) return a.words_[w] <=> b.words_[w];
  if (common & 63) {
    const std::uint64_t mask = ~std::uint64_t{0} << (64 - (common & 63));
    const auto x = a.words_[full] & mask;
    const auto y = b.words_[full] & mask;
    if (x != y) return x <=> y;
  }
  return a.size_ <=> b.size_;
}

BitString concat(std::span<const BitString> parts) {
  BitString out;
  for (const auto& p : parts) out = out + p;
  return out;
}

}  // namespace xtr
