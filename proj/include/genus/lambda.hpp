#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace genus {

// A 0/1 sequence given by a finite word, padded with zeros. `origin` is the
// index of the first word bit: 0 for tree sequences, 1 for the chains H_{λ,i}.
class LambdaSeq {
public:
  LambdaSeq() = default;
  LambdaSeq(std::vector<bool> bits, int origin) : bits_(std::move(bits)), origin_(origin) {}

  static LambdaSeq parse(std::string_view text, int origin) {
    if (text.empty()) throw std::invalid_argument("empty bitstring");
    std::vector<bool> bits;
    for (char c : text) {
      if (c != '0' && c != '1') {
        throw std::invalid_argument("invalid bitstring '" + std::string(text) + "'");
      }
      bits.push_back(c == '1');
    }
    return LambdaSeq(std::move(bits), origin);
  }

  // Low `length` bits of `word`, least significant bit first.
  static LambdaSeq from_word(std::uint64_t word, std::size_t length, int origin) {
    std::vector<bool> bits(length);
    for (std::size_t i = 0; i < length; ++i) bits[i] = (word >> i) & 1U;
    return LambdaSeq(std::move(bits), origin);
  }

  int origin() const noexcept { return origin_; }
  std::size_t word_length() const noexcept { return bits_.size(); }
  static constexpr int pad = 0;

  int bit(std::int64_t n) const {
    std::int64_t k = n - origin_;
    if (k < 0 || k >= static_cast<std::int64_t>(bits_.size())) return pad;
    return bits_[static_cast<std::size_t>(k)] ? 1 : 0;
  }

  // Index one past the last 1 bit: bit(n) == pad for all n >= support_end().
  std::int64_t support_end() const {
    for (std::size_t k = bits_.size(); k > 0; --k) {
      if (bits_[k - 1]) return origin_ + static_cast<std::int64_t>(k);
    }
    return origin_;
  }

  LambdaSeq with_bit(std::int64_t n, int value) const {
    if (n < origin_) throw std::out_of_range("index before sequence origin");
    auto bits = bits_;
    auto k = static_cast<std::size_t>(n - origin_);
    if (k >= bits.size()) bits.resize(k + 1, false);
    bits[k] = value != 0;
    return LambdaSeq(std::move(bits), origin_);
  }

  std::string to_string() const {
    std::string s;
    for (bool b : bits_) s += b ? '1' : '0';
    return s;
  }

  // First `length` bits starting at the origin.
  std::string prefix(std::size_t length) const {
    std::string s;
    for (std::size_t i = 0; i < length; ++i) {
      s += bit(origin_ + static_cast<std::int64_t>(i)) ? '1' : '0';
    }
    return s;
  }

  // Equality as padded infinite sequences.
  friend bool operator==(const LambdaSeq& x, const LambdaSeq& y) {
    if (x.origin_ != y.origin_) return false;
    std::int64_t end = std::max(x.support_end(), y.support_end());
    for (std::int64_t n = x.origin_; n < end; ++n) {
      if (x.bit(n) != y.bit(n)) return false;
    }
    return true;
  }

private:
  std::vector<bool> bits_;
  int origin_ = 0;
};

}  // namespace genus
