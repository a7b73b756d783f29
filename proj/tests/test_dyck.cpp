#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "cubicgray/dyck.hpp"
#include "cubicgray/errors.hpp"
#include "oracles.hpp"

using namespace cubicgray;

namespace {

std::vector<std::vector<int>> as_bits(const std::vector<PrefixWord>& words) {
  std::vector<std::vector<int>> out;
  for (const auto& w : words) out.push_back(w.bits());
  return out;
}

}  // namespace

TEST_CASE("D(4,4) gives the expected 14-word listing") {
  const std::vector<std::string> table = {
      "(1, 0, 1, 0, 1, 0, 1, 0)", "(1, 1, 0, 0, 1, 0, 1, 0)", "(1, 1, 1, 0, 0, 0, 1, 0)",
      "(1, 1, 0, 1, 0, 0, 1, 0)", "(1, 0, 1, 1, 0, 0, 1, 0)", "(1, 0, 1, 1, 1, 0, 0, 0)",
      "(1, 1, 0, 1, 1, 0, 0, 0)", "(1, 1, 1, 0, 1, 0, 0, 0)", "(1, 1, 1, 1, 0, 0, 0, 0)",
      "(1, 0, 1, 1, 0, 1, 0, 0)", "(1, 1, 0, 1, 0, 1, 0, 0)", "(1, 1, 1, 0, 0, 1, 0, 0)",
      "(1, 1, 0, 0, 1, 1, 0, 0)", "(1, 0, 1, 0, 1, 1, 0, 0)",
  };
  const auto words = dyck_gray(4, 4);
  REQUIRE(words.size() == table.size());
  for (std::size_t i = 0; i < table.size(); ++i) CHECK(format_word(words[i]) == table[i]);
}

TEST_CASE("small D(m,k) lists") {
  CHECK(as_bits(dyck_gray(3, 0)) == std::vector<std::vector<int>>{{1, 1, 1}});
  CHECK(as_bits(dyck_gray(1, 1)) == std::vector<std::vector<int>>{{1, 0}});
  CHECK(as_bits(dyck_gray(2, 2)) == std::vector<std::vector<int>>{{1, 0, 1, 0}, {1, 1, 0, 0}});
  CHECK(as_bits(dyck_gray(0, 0)) == std::vector<std::vector<int>>{{}});
}

TEST_CASE("D(m,k) rejects bad parameters") {
  CHECK_THROWS_AS(dyck_gray(2, 3), cubicgray::invalid_argument);
  CHECK_THROWS_AS(dyck_gray(-1, 0), cubicgray::invalid_argument);
  CHECK_THROWS_AS(dyck_gray(3, -1), cubicgray::invalid_argument);
}

TEST_CASE("streaming order matches the recursion with explicit reversal") {
  for (int m = 0; m <= 9; ++m) {
    for (int k = 0; k <= m; ++k) {
      CAPTURE(m);
      CAPTURE(k);
      CHECK(as_bits(dyck_gray(m, k)) == oracle::dyck_relation(m, k));
    }
  }
}

TEST_CASE("D(m,k) is exactly the set of prefix words, without repeats") {
  for (int m = 0; m <= 7; ++m) {
    for (int k = 0; k <= m; ++k) {
      const auto words = as_bits(dyck_gray(m, k));
      const std::set<std::vector<int>> unique(words.begin(), words.end());
      CHECK(unique.size() == words.size());
      CHECK(unique == oracle::prefix_words_brute(m, k));
    }
  }
}

TEST_CASE("cyclic 2-Gray property and boundary words") {
  for (int m = 0; m <= 10; ++m) {
    for (int k = 0; k <= m; ++k) {
      CAPTURE(m);
      CAPTURE(k);
      const auto words = dyck_gray(m, k);
      CHECK(words.front() == dyck_gray_first(m, k));
      CHECK(words.back() == dyck_gray_last(m, k));
      if (words.size() < 2) continue;
      for (std::size_t i = 0; i < words.size(); ++i) {
        CHECK(words[i].hamming(words[(i + 1) % words.size()]) == 2);
      }
    }
  }
}

TEST_CASE("Catalan counts") {
  for (int m = 0; m <= 12; ++m) CHECK(dyck_gray(m, m).size() == catalan(m));
  CHECK(catalan(4) == 14);
  CHECK(catalan(12) == 208012);
}

TEST_CASE("word and shape conversions") {
  const Shape fig({{1, 3}, {2}, {}, {}});  // root; first child has one leaf child
  CHECK(word_from_shape(fig).bits() == std::vector<int>{1, 1, 0, 0, 1, 0});
  CHECK(shape_from_word(PrefixWord::from_bits({1, 1, 0, 0, 1, 0})) == fig);

  CHECK(word_from_shape(Shape()).empty());
  CHECK(shape_from_word(PrefixWord()) == Shape());

  const Shape claw({{1, 2, 3}, {}, {}, {}});
  CHECK(word_from_shape(claw).bits() == std::vector<int>{1, 0, 1, 0, 1, 0});
  CHECK(shape_from_word(PrefixWord::from_bits({1, 0, 1, 0})) == Shape({{1, 2}, {}, {}}));
}

TEST_CASE("shape round trips over all Dyck words") {
  for (int m = 0; m <= 7; ++m) {
    for (const auto& w : dyck_gray(m, m)) {
      const Shape s = shape_from_word(w);
      CHECK(s.size() == static_cast<std::size_t>(m + 1));
      CHECK(word_from_shape(s) == w);
      CHECK(shape_from_word(word_from_shape(s)) == s);
    }
  }
}

TEST_CASE("invalid words") {
  CHECK_THROWS_AS(PrefixWord::from_bits({1, 0, 0, 1}), invalid_word);
  CHECK_THROWS_AS(PrefixWord::from_bits({1, 2}), invalid_word);
  CHECK_THROWS_AS(shape_from_word(PrefixWord::from_bits({1, 1, 0})), invalid_word);
  CHECK(PrefixWord::parse("(1, 1, 0, 0)") == PrefixWord::from_bits({1, 1, 0, 0}));
  CHECK_THROWS_AS(PrefixWord::parse("(1,x)"), invalid_word);
}

TEST_CASE("long words pack across blocks") {
  DyckGrayStream stream(40, 40);
  const PrefixWord* first = stream.next();
  REQUIRE(first != nullptr);
  CHECK(*first == dyck_gray_first(40, 40));
  PrefixWord prev = *first;
  for (int i = 0; i < 1000; ++i) {
    const PrefixWord* w = stream.next();
    REQUIRE(w != nullptr);
    CHECK(w->size() == 80);
    CHECK(w->is_dyck());
    CHECK(prev.hamming(*w) == 2);
    prev = *w;
  }
}
