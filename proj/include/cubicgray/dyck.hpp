#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cubicgray/shape.hpp"

namespace cubicgray {

// Binary tuple in which no prefix has more 0s than 1s. Stored packed.
// With equal numbers of 1s and 0s it is a Dyck word.
class PrefixWord {
 public:
  PrefixWord() = default;

  // Throws invalid_word on a symbol other than 0/1 or a prefix violation.
  static PrefixWord from_bits(std::span<const int> bits);
  static PrefixWord from_bits(std::initializer_list<int> bits) {
    return from_bits(std::span<const int>(bits.begin(), bits.size()));
  }
  // Parses "(1,0,1,0)" (spaces allowed) or a bare "1010".
  static PrefixWord parse(const std::string& text);

  std::size_t size() const { return size_; }
  bool empty() const { return size_ == 0; }
  int operator[](std::size_t i) const { return static_cast<int>((blocks_[i / 64] >> (i % 64)) & 1U); }

  std::size_t ones() const;
  std::size_t zeros() const { return size_ - ones(); }
  bool is_dyck() const { return ones() == zeros(); }

  std::vector<int> bits() const;

  // Number of differing positions. Throws invalid_argument on length mismatch.
  std::size_t hamming(const PrefixWord& other) const;

  friend bool operator==(const PrefixWord&, const PrefixWord&) = default;
  friend std::strong_ordering operator<=>(const PrefixWord& x, const PrefixWord& y);

 private:
  friend class DyckGrayStream;
  friend PrefixWord word_from_shape(const Shape&);

  void resize(std::size_t n) {
    size_ = n;
    blocks_.assign((n + 63) / 64, 0);
  }
  void set(std::size_t i, int bit) {
    const std::uint64_t mask = std::uint64_t{1} << (i % 64);
    if (bit != 0) {
      blocks_[i / 64] |= mask;
    } else {
      blocks_[i / 64] &= ~mask;
    }
  }

  std::size_t size_ = 0;
  std::vector<std::uint64_t> blocks_;
};

// Parenthesized rendering: "(1, 0, 1, 0)".
std::string format_word(const PrefixWord& w);
std::ostream& operator<<(std::ostream& os, const PrefixWord& w);

// Streams the cyclic 2-Gray list D(m,k) of prefix words with m ones and k
// zeros, defined by
//   D(m,0)   = (1)^m
//   D(m,m)   = D(m,m-1).(0)
//   D(m,k)   = D(m-1,k).(1) o reverse(D(m,k-1)).(0)      for m > k > 0
// The recursion runs on an explicit frame stack, so depth is bounded by the
// heap rather than the call stack.
class DyckGrayStream {
 public:
  // Throws invalid_argument unless 0 <= k <= m.
  DyckGrayStream(long m, long k);

  // Advances and returns the next word, or nullptr once exhausted. The
  // pointer stays valid until the next call.
  const PrefixWord* next();

  std::size_t produced() const { return produced_; }

 private:
  struct Frame {
    std::size_t m;
    std::size_t k;
    bool reversed;
    int stage;
  };

  std::vector<Frame> stack_;
  PrefixWord word_;
  std::size_t produced_ = 0;
};

// Materialized D(m,k).
std::vector<PrefixWord> dyck_gray(long m, long k);

// First and last elements of D(m,k) in closed form.
PrefixWord dyck_gray_first(std::size_t m, std::size_t k);
PrefixWord dyck_gray_last(std::size_t m, std::size_t k);

// Leftmost depth-first walk: 1 for a step down to a child, 0 for a step back.
PrefixWord word_from_shape(const Shape& s);

// Inverse of word_from_shape. Throws invalid_word unless w is a Dyck word.
Shape shape_from_word(const PrefixWord& w);

// Catalan number; exact for m <= 33.
std::uint64_t catalan(std::size_t m);

}  // namespace cubicgray
