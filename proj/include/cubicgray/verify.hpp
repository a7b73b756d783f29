#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstddef>
#include <optional>
#include <random>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "cubicgray/maps.hpp"
#include "cubicgray/trees.hpp"

namespace cubicgray {

using BigInt = boost::multiprecision::cpp_int;

// 3 * 2^(n-1) * (2n)! / (n! (n+2)!): rooted bicubic maps on 2n vertices.
BigInt count_bicubic(long n);
// 2^n (3n)! / ((n+1)! (2n+1)!): rooted cubic non-separable maps on 2n vertices.
BigInt count_cubic_nonseparable(long n);

struct EnumerationLimits {
  long max_n = 10;   // refuse anything larger
  unsigned jobs = 1;  // worker threads, one shape at a time each
};

// Every beta(a,b)-tree on n vertices as a star code, built by direct
// recursion over balanced words and labels. Shares no generation code with
// the Gray lists. Root modes star, sum and sum-plus-one give the same code
// set; internal is rejected. Throws too_large when n > limits.max_n.
std::set<TreeCode> enumerate_trees(long n, int a, int b, RootMode mode = RootMode::star,
                                   EnumerationLimits limits = {});

struct GrayReport {
  int bound = 0;
  bool cyclic = false;
  std::size_t length = 0;
  std::size_t expected = 0;  // oracle size
  std::size_t duplicates = 0;
  std::size_t missing = 0;
  std::size_t extraneous = 0;
  std::size_t violations = 0;  // successive pairs beyond the bound (incl. wrap)
  std::size_t max_distance = 0;
  std::optional<std::size_t> first_duplicate;    // index of the repeat
  std::optional<std::size_t> first_extraneous;   // index
  std::optional<std::size_t> first_violation;    // i with d(l[i], l[i+1]) > bound
  std::optional<TreeCode> first_missing;

  bool pass() const { return duplicates == 0 && missing == 0 && extraneous == 0 && violations == 0; }
  // key: value lines in a fixed order.
  std::string to_text() const;
};

GrayReport check_gray(std::span<const TreeCode> list, int bound, bool cyclic,
                      const std::set<TreeCode>& oracle);

struct MapCheck {
  MapReport report;
  std::size_t vertices = 0;
  std::size_t edges = 0;
  std::size_t faces = 0;

  bool pass() const { return report.ok(); }
  std::string to_text() const;
};

MapCheck check_map(const RotationMap& m);

enum class Mutation { duplicate, omission, distance };

// Copy of `list` with one injected defect. `distance` swaps two entries so
// that some successive pair exceeds `bound`; the multiset is unchanged.
std::vector<TreeCode> mutate(const std::vector<TreeCode>& list, Mutation kind, int bound,
                             std::mt19937_64& rng);

}  // namespace cubicgray
