#include "cubicgray/dyck.hpp"

#include <bit>
#include <cctype>
#include <ostream>
#include <sstream>

#include "cubicgray/errors.hpp"

namespace cubicgray {

PrefixWord PrefixWord::from_bits(std::span<const int> bits) {
  PrefixWord w;
  w.resize(bits.size());
  long balance = 0;
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] != 0 && bits[i] != 1) {
      throw invalid_word("word symbols must be 0 or 1, found " + std::to_string(bits[i]));
    }
    balance += bits[i] == 1 ? 1 : -1;
    if (balance < 0) {
      throw invalid_word("prefix of length " + std::to_string(i + 1) + " has more 0s than 1s");
    }
    w.set(i, bits[i]);
  }
  return w;
}

PrefixWord PrefixWord::parse(const std::string& text) {
  std::vector<int> bits;
  for (char c : text) {
    if (c == '0' || c == '1') {
      bits.push_back(c - '0');
    } else if (c != '(' && c != ')' && c != ',' && !std::isspace(static_cast<unsigned char>(c))) {
      throw invalid_word(std::string("unexpected character '") + c + "' in word");
    }
  }
  return from_bits(bits);
}

std::size_t PrefixWord::ones() const {
  std::size_t count = 0;
  for (std::uint64_t b : blocks_) count += static_cast<std::size_t>(std::popcount(b));
  return count;
}

std::vector<int> PrefixWord::bits() const {
  std::vector<int> out(size_);
  for (std::size_t i = 0; i < size_; ++i) out[i] = (*this)[i];
  return out;
}

std::size_t PrefixWord::hamming(const PrefixWord& other) const {
  if (size_ != other.size_) {
    throw invalid_argument("hamming distance of words with lengths " + std::to_string(size_) +
                           " and " + std::to_string(other.size_));
  }
  std::size_t d = 0;
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    d += static_cast<std::size_t>(std::popcount(blocks_[i] ^ other.blocks_[i]));
  }
  return d;
}

std::strong_ordering operator<=>(const PrefixWord& x, const PrefixWord& y) {
  if (auto c = x.size_ <=> y.size_; c != 0) return c;
  for (std::size_t i = 0; i < x.size_; ++i) {
    if (auto c = x[i] <=> y[i]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

std::string format_word(const PrefixWord& w) {
  std::string out = "(";
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i > 0) out += ", ";
    out += w[i] != 0 ? '1' : '0';
  }
  out += ')';
  return out;
}

std::ostream& operator<<(std::ostream& os, const PrefixWord& w) { return os << format_word(w); }

DyckGrayStream::DyckGrayStream(long m, long k) {
  if (m < 0 || k < 0 || k > m) {
    throw invalid_argument("D(m,k) needs 0 <= k <= m, got m=" + std::to_string(m) +
                           " k=" + std::to_string(k));
  }
  const auto um = static_cast<std::size_t>(m);
  const auto uk = static_cast<std::size_t>(k);
  word_.resize(um + uk);
  stack_.push_back({um, uk, false, 0});
}

const PrefixWord* DyckGrayStream::next() {
  while (!stack_.empty()) {
    Frame& f = stack_.back();
    const std::size_t pos = f.m + f.k - 1;  // the symbol this frame appends

    if (f.k == 0) {
      if (f.stage++ == 0) {
        for (std::size_t i = 0; i < f.m; ++i) word_.set(i, 1);
        ++produced_;
        return &word_;
      }
      stack_.pop_back();
      continue;
    }

    if (f.m == f.k) {
      if (f.stage++ == 0) {
        word_.set(pos, 0);
        const Frame child{f.m, f.k - 1, f.reversed, 0};
        stack_.push_back(child);
      } else {
        stack_.pop_back();
      }
      continue;
    }

    // m > k > 0: forward order is D(m-1,k).(1) then reverse(D(m,k-1)).(0);
    // the reversed list is D(m,k-1).(0) then reverse(D(m-1,k)).(1).
    const int stage = f.stage++;
    if (stage == 2) {
      stack_.pop_back();
      continue;
    }
    const bool take_ones_branch = (stage == 0) != f.reversed;
    Frame child{};
    if (take_ones_branch) {
      word_.set(pos, 1);
      child = {f.m - 1, f.k, f.reversed, 0};
    } else {
      word_.set(pos, 0);
      child = {f.m, f.k - 1, !f.reversed, 0};
    }
    stack_.push_back(child);
  }
  return nullptr;
}

std::vector<PrefixWord> dyck_gray(long m, long k) {
  DyckGrayStream stream(m, k);
  std::vector<PrefixWord> out;
  while (const PrefixWord* w = stream.next()) out.push_back(*w);
  return out;
}

namespace {

PrefixWord build(std::vector<int> bits) { return PrefixWord::from_bits(bits); }

void append_alternating(std::vector<int>& bits, std::size_t pairs) {
  for (std::size_t i = 0; i < pairs; ++i) {
    bits.push_back(1);
    bits.push_back(0);
  }
}

}  // namespace

PrefixWord dyck_gray_first(std::size_t m, std::size_t k) {
  if (k > m) throw invalid_argument("D(m,k) needs k <= m");
  std::vector<int> bits;
  append_alternating(bits, k);
  bits.insert(bits.end(), m - k, 1);
  return build(std::move(bits));
}

PrefixWord dyck_gray_last(std::size_t m, std::size_t k) {
  if (k > m) throw invalid_argument("D(m,k) needs k <= m");
  std::vector<int> bits;
  if (k == 0) {
    bits.assign(m, 1);
  } else if (k == m && m > 1) {
    append_alternating(bits, m - 2);
    bits.insert(bits.end(), {1, 1, 0, 0});
  } else {
    append_alternating(bits, k - 1);
    bits.insert(bits.end(), m - k + 1, 1);
    bits.push_back(0);
  }
  return build(std::move(bits));
}

PrefixWord word_from_shape(const Shape& s) {
  PrefixWord w;
  w.resize(2 * (s.size() - 1));
  std::size_t pos = 0;
  std::vector<std::pair<std::size_t, std::size_t>> stack{{0, 0}};
  while (!stack.empty()) {
    auto& [v, next_child] = stack.back();
    if (next_child < s.children(v).size()) {
      const std::size_t c = s.children(v)[next_child++];
      w.set(pos++, 1);
      stack.emplace_back(c, 0);
    } else {
      stack.pop_back();
      if (!stack.empty()) w.set(pos++, 0);
    }
  }
  return w;
}

Shape shape_from_word(const PrefixWord& w) {
  if (!w.is_dyck()) {
    throw invalid_word("shape_from_word needs a Dyck word, got " + format_word(w));
  }
  std::vector<std::vector<std::size_t>> children(1);
  std::vector<std::size_t> path{0};
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i] == 1) {
      const std::size_t v = children.size();
      children[path.back()].push_back(v);
      children.emplace_back();
      path.push_back(v);
    } else {
      path.pop_back();
    }
  }
  return Shape(std::move(children));
}

std::uint64_t catalan(std::size_t m) {
  if (m > 33) throw invalid_argument("catalan(m) overflows 64 bits for m > 33");
  __extension__ using wide = unsigned __int128;
  wide c = 1;
  for (std::size_t i = 0; i < m; ++i) {
    c = c * 2 * (2 * i + 1) / (i + 2);
  }
  return static_cast<std::uint64_t>(c);
}

}  // namespace cubicgray
