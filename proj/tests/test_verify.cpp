#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "cubicgray/fullgray.hpp"
#include "cubicgray/verify.hpp"

using namespace cubicgray;

namespace {

std::vector<TreeCode> parse_all(std::initializer_list<const char*> texts) {
  std::vector<TreeCode> out;
  for (const char* t : texts) out.push_back(TreeCode::parse(t));
  return out;
}

}  // namespace

TEST_CASE("exact counts") {
  CHECK(count_bicubic(1) == 1);
  CHECK(count_bicubic(2) == 3);
  CHECK(count_bicubic(3) == 12);
  CHECK(count_bicubic(7) == 9152);
  CHECK(count_cubic_nonseparable(1) == 1);
  CHECK(count_cubic_nonseparable(2) == 4);
  CHECK(count_cubic_nonseparable(3) == 24);
  CHECK(count_bicubic(40).str() == "102966399017460507400996325949440");
  CHECK_THROWS_AS(count_bicubic(0), cubicgray::invalid_argument);
}

TEST_CASE("oracle enumeration") {
  const auto three = enumerate_trees(3, 0, 1);
  CHECK(three == std::set<TreeCode>(
                     {TreeCode::parse("(1,0,1,0,*,0,0)"), TreeCode::parse("(1,1,0,0,*,0,0)"),
                      TreeCode::parse("(1,1,0,0,*,1,0)")}));
  CHECK(enumerate_trees(4, 0, 1).size() == 12);
  CHECK(enumerate_trees(3, 2, 2).size() == 4);
  CHECK(enumerate_trees(4, 0, 1, RootMode::sum_plus_one) == enumerate_trees(4, 0, 1));
  CHECK_THROWS_AS(enumerate_trees(4, 0, 1, RootMode::internal), unsupported);

  for (long n = 2; n <= 8; ++n) {
    CHECK(BigInt(enumerate_trees(n, 0, 1).size()) == count_bicubic(n - 1));
    CHECK(BigInt(enumerate_trees(n, 2, 2).size()) == count_cubic_nonseparable(n - 1));
  }
  CHECK(enumerate_trees(7, 1, 1, RootMode::star, {10, 4}) == enumerate_trees(7, 1, 1));
}

TEST_CASE("enumeration guard") {
  try {
    enumerate_trees(11, 0, 1);
    FAIL("expected a refusal");
  } catch (const too_large& e) {
    CHECK(e.estimate() == count_bicubic(10).str());
  }
  CHECK(enumerate_trees(5, 0, 1, RootMode::star, {5, 1}).size() == 56);
  CHECK_THROWS_AS(enumerate_trees(6, 0, 1, RootMode::star, {5, 1}), too_large);
}

TEST_CASE("gray reports") {
  const auto oracle = enumerate_trees(3, 0, 1);
  const auto good = full_list(3, 0, 1).order;
  const auto r = check_gray(good, 3, true, oracle);
  CHECK(r.pass());
  CHECK(r.max_distance == 3);

  auto dup = good;
  dup.push_back(good[1]);
  const auto rd = check_gray(dup, 3, true, oracle);
  CHECK(!rd.pass());
  CHECK(rd.duplicates == 1);
  CHECK(rd.first_duplicate == 3);

  auto missing = good;
  missing.pop_back();
  const auto rm = check_gray(missing, 3, true, oracle);
  CHECK(rm.missing == 1);
  CHECK(rm.first_missing == good.back());

  const auto rx = check_gray(parse_all({"(1,0,1,0,*,0,0)", "(1,1,0,0,*,2,0)"}), 3, false, oracle);
  CHECK(rx.extraneous == 1);
  CHECK(rx.first_extraneous == 1);
  CHECK(rx.missing == 2);
}

TEST_CASE("three codes cannot be listed cyclically within distance 2") {
  auto codes = full_list(3, 0, 1).order;
  const auto oracle = enumerate_trees(3, 0, 1);
  std::sort(codes.begin(), codes.end());
  int orders = 0;
  do {
    ++orders;
    const auto r = check_gray(codes, 2, true, oracle);
    CHECK(!r.pass());
    CHECK(r.violations >= 1);
  } while (std::next_permutation(codes.begin(), codes.end()));
  CHECK(orders == 6);
}

TEST_CASE("report text is stable") {
  const auto oracle = enumerate_trees(3, 0, 1);
  const auto r = check_gray(full_list(3, 0, 1).order, 3, true, oracle);
  CHECK(r.to_text() ==
        "gray.bound: 3\n"
        "gray.cyclic: true\n"
        "gray.length: 3\n"
        "gray.expected: 3\n"
        "gray.duplicates: 0\n"
        "gray.missing: 0\n"
        "gray.extraneous: 0\n"
        "gray.violations: 0\n"
        "gray.max_distance: 3\n"
        "gray.first_duplicate: none\n"
        "gray.first_extraneous: none\n"
        "gray.first_violation: none\n"
        "gray.first_missing: none\n"
        "gray.result: pass\n");
}

TEST_CASE("map checks") {
  CHECK(check_map(base_map()).pass());
  const auto bad = RotationMap::raw({1, 2, 0, 4, 5, 3}, {0, 5, 4, 3, 2, 1}, 0);
  const auto c = check_map(bad);
  CHECK(!c.pass());
  CHECK(c.to_text().find("map.involution: fail") != std::string::npos);
  CHECK(c.to_text().find("map.result: fail") != std::string::npos);
}

TEST_CASE("mutations are caught") {
  std::mt19937_64 rng(7);
  const auto good = full_list(5, 0, 1).order;
  const auto oracle = enumerate_trees(5, 0, 1);
  for (Mutation kind : {Mutation::duplicate, Mutation::omission, Mutation::distance}) {
    for (int trial = 0; trial < 20; ++trial) {
      const auto bad = mutate(good, kind, 3, rng);
      const auto r = check_gray(bad, 3, true, oracle);
      CHECK(!r.pass());
      if (kind == Mutation::distance) {
        CHECK(r.violations >= 1);
        CHECK(r.duplicates == 0);
        CHECK(r.missing == 0);
      }
    }
  }
}
