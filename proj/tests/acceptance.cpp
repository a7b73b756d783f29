// One line per acceptance criterion; exit status 0 iff all pass.

#include <algorithm>
#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include "cubicgray/cli.hpp"
#include "cubicgray/dyck.hpp"
#include "cubicgray/fullgray.hpp"
#include "cubicgray/maps.hpp"
#include "cubicgray/verify.hpp"
#include "reference_maps.hpp"

using namespace cubicgray;

namespace {

// Collects the first failure of a criterion.
class Check {
 public:
  void expect(bool ok, const std::string& what) {
    if (!ok && first_.empty()) first_ = what;
  }
  bool ok() const { return first_.empty(); }
  const std::string& first() const { return first_; }

 private:
  std::string first_;
};

BigInt fact(long n) {
  BigInt f = 1;
  for (long i = 2; i <= n; ++i) f *= i;
  return f;
}

std::vector<int> repeat(std::initializer_list<int> unit, long times) {
  std::vector<int> out;
  for (long i = 0; i < times; ++i) out.insert(out.end(), unit);
  return out;
}

std::vector<int> concat(std::vector<int> x, const std::vector<int>& y) {
  x.insert(x.end(), y.begin(), y.end());
  return x;
}

LabeledTree as_tree(const TreeCode& c) {
  return with_root_mode(decode(c, 0, 1), RootMode::sum_plus_one);
}

void d44_listing(Check& c) {
  const std::vector<std::string> table{
      "(1, 0, 1, 0, 1, 0, 1, 0)", "(1, 1, 0, 0, 1, 0, 1, 0)", "(1, 1, 1, 0, 0, 0, 1, 0)",
      "(1, 1, 0, 1, 0, 0, 1, 0)", "(1, 0, 1, 1, 0, 0, 1, 0)", "(1, 0, 1, 1, 1, 0, 0, 0)",
      "(1, 1, 0, 1, 1, 0, 0, 0)", "(1, 1, 1, 0, 1, 0, 0, 0)", "(1, 1, 1, 1, 0, 0, 0, 0)",
      "(1, 0, 1, 1, 0, 1, 0, 0)", "(1, 1, 0, 1, 0, 1, 0, 0)", "(1, 1, 1, 0, 0, 1, 0, 0)",
      "(1, 1, 0, 0, 1, 1, 0, 0)", "(1, 0, 1, 0, 1, 1, 0, 0)"};
  std::ostringstream out;
  std::ostringstream err;
  c.expect(run({"dyck", "4", "4"}, out, err) == 0, "dyck 4 4 exit status");
  std::vector<std::string> got;
  std::istringstream in(out.str());
  for (std::string line; std::getline(in, line);) got.push_back(line);
  c.expect(got == table, "dyck 4 4 output differs from the table");
  const auto words = dyck_gray(4, 4);
  for (std::size_t i = 0; i < words.size(); ++i) {
    c.expect(words[i].hamming(words[(i + 1) % words.size()]) == 2,
             "distance at " + std::to_string(i) + " is not 2");
  }
}

void catalan_and_boundaries(Check& c) {
  for (long m = 1; m <= 12; ++m) {
    const BigInt cat = fact(2 * m) / (fact(m) * fact(m + 1));
    c.expect(BigInt(dyck_gray(m, m).size()) == cat, "size of D(m,m) at m=" + std::to_string(m));
  }
  for (long m = 0; m <= 10; ++m) {
    for (long k = 0; k <= m; ++k) {
      const auto list = dyck_gray(m, k);
      const auto first = concat(repeat({1, 0}, k), repeat({1}, m - k));
      std::vector<int> last;
      if (k == 0) {
        last = repeat({1}, m);
      } else if (k == m && m > 1) {
        last = concat(repeat({1, 0}, m - 2), {1, 1, 0, 0});
      } else {
        last = concat(concat(repeat({1, 0}, k - 1), repeat({1}, m - k + 1)), {0});
      }
      const std::string at = "(" + std::to_string(m) + "," + std::to_string(k) + ")";
      c.expect(list.front().bits() == first, "first word of D" + at);
      c.expect(list.back().bits() == last, "last word of D" + at);
    }
  }
}

void tree_counts(Check& c) {
  c.expect(enumerate_trees(3, 0, 1).size() == 3, "n=3 count");
  c.expect(enumerate_trees(4, 0, 1).size() == 12, "n=4 count");
  for (long n = 2; n <= 8; ++n) {
    const BigInt formula = 3 * (BigInt(1) << (n - 2)) * fact(2 * n - 2) / (fact(n - 1) * fact(n + 1));
    c.expect(BigInt(enumerate_trees(n, 0, 1).size()) == formula, "count at n=" + std::to_string(n));
  }
}

// Shape-partitioned cyclic 3-Gray list equal to the oracle set, with unit
// steps inside blocks and each block opening at (*,a,...,a).
void gray_suite(Check& c, long n, int a, int b) {
  const std::string tag = " n=" + std::to_string(n) + " (a,b)=(" + std::to_string(a) + "," +
                          std::to_string(b) + ")";
  CodeList l;
  try {
    l = full_list(n, a, b);
  } catch (const std::exception& e) {
    c.expect(false, std::string("full_list threw: ") + e.what() + tag);
    return;
  }
  const auto report = check_gray(l.order, 3, true, enumerate_trees(n, a, b));
  c.expect(report.pass(), "gray report fails" + tag);

  std::set<PrefixWord> shapes_seen;
  for (std::size_t i = 0; i < l.order.size(); ++i) {
    const auto& code = l.order[i];
    const bool starts = i == 0 || !(l.order[i - 1].shape_bits() == code.shape_bits());
    if (starts) {
      c.expect(shapes_seen.insert(code.shape_bits()).second, "shape appears in two blocks" + tag);
      for (std::size_t j = 1; j < code.labels().size(); ++j) {
        c.expect(code.labels()[j] == Label(a), "block does not open at all-a" + tag);
      }
    } else {
      c.expect(distance(l.order[i - 1], code) == 1, "in-block step is not 1" + tag);
    }
  }
}

void full_list_gray(Check& c) {
  for (long n = 1; n <= 8; ++n) gray_suite(c, n, 0, 1);
}

void generalization(Check& c) {
  for (auto [a, b] : {std::pair{1, 1}, std::pair{2, 2}}) {
    for (long n = 1; n <= 7; ++n) gray_suite(c, n, a, b);
  }
  for (long m = 1; m <= 7; ++m) {
    const BigInt formula = (BigInt(1) << m) * fact(3 * m) / (fact(m + 1) * fact(2 * m + 1));
    c.expect(BigInt(enumerate_trees(m + 1, 2, 2).size()) == formula,
             "beta(2,2) count at m=" + std::to_string(m));
  }
}

void minimality(Check& c) {
  const auto oracle = enumerate_trees(3, 0, 1);
  std::vector<TreeCode> codes(oracle.begin(), oracle.end());
  c.expect(codes.size() == 3, "three codes");
  std::sort(codes.begin(), codes.end());
  do {
    std::size_t worst = 0;
    for (std::size_t i = 0; i < codes.size(); ++i) {
      worst = std::max(worst, distance(codes[i], codes[(i + 1) % codes.size()]));
    }
    c.expect(worst > 2, "a cyclic order within distance 2 exists");
  } while (std::next_permutation(codes.begin(), codes.end()));
  const auto produced = full_list(3, 0, 1).order;
  for (std::size_t i = 0; i < produced.size(); ++i) {
    c.expect(distance(produced[i], produced[(i + 1) % produced.size()]) <= 3,
             "produced list exceeds 3");
  }
}

void bijection(Check& c) {
  for (long n = 2; n <= 7; ++n) {
    std::set<std::vector<Dart>> images;
    std::size_t trees = 0;
    for (const TreeCode& code : full_list(n, 0, 1).order) {
      ++trees;
      const LabeledTree t = as_tree(code);
      const RotationMap m = tree_to_map(t);
      c.expect(check_map(m).pass(), "invalid map for " + code.to_string());
      c.expect(m.vertex_count() == static_cast<std::size_t>(2 * (n - 1)), "vertex count");
      c.expect(map_to_tree(m) == t, "round trip fails for " + code.to_string());
      const RotationMap canon = m.canonical();
      std::vector<Dart> key;
      for (Dart d = 0; d < canon.dart_count(); ++d) key.push_back(canon.alpha(d));
      images.insert(key);
    }
    const long maps = n - 1;
    const BigInt formula = 3 * (BigInt(1) << (maps - 1)) * fact(2 * maps) / (fact(maps) * fact(maps + 2));
    c.expect(images.size() == trees, "psi not injective at n=" + std::to_string(n));
    c.expect(BigInt(images.size()) == formula, "image size at n=" + std::to_string(n));
  }
  const auto known = reference::four_vertex_maps();
  std::vector<RotationMap> images;
  for (const TreeCode& code : full_list(3, 0, 1).order) images.push_back(tree_to_map(as_tree(code)));
  c.expect(images.size() == 3, "three 4-vertex images");
  for (const auto& p : known) {
    c.expect(std::count(images.begin(), images.end(), p) == 1, "reference map not matched once");
  }
}

void statistics(Check& c) {
  for (long n = 2; n <= 6; ++n) {
    for (const TreeCode& code : full_list(n, 0, 1).order) {
      const LabeledTree t = as_tree(code);
      const RotationMap m = tree_to_map(t);
      c.expect(f1r3(m) == static_cast<std::size_t>(t.root()), "f1r3 != root for " + code.to_string());
      c.expect(s1r3(m) == t.sub(), "s1r3 != sub for " + code.to_string());
      c.expect(f1r3(apply_op1(m)) == f1r3(m) + 1, "op1 increment fails for " + code.to_string());
    }
  }
}

void mutations(Check& c) {
  const auto good = full_list(6, 0, 1).order;
  const auto oracle = enumerate_trees(6, 0, 1);
  c.expect(check_gray(good, 3, true, oracle).pass(), "unmutated list fails");
  std::mt19937_64 rng(20240601);
  const Mutation kinds[] = {Mutation::duplicate, Mutation::omission, Mutation::distance};
  for (int trial = 0; trial < 100; ++trial) {
    const Mutation kind = kinds[trial % 3];
    const auto bad = mutate(good, kind, 3, rng);
    const auto r = check_gray(bad, 3, true, oracle);
    bool caught = !r.pass();
    if (kind == Mutation::duplicate) caught = caught && r.duplicates > 0;
    if (kind == Mutation::omission) caught = caught && r.missing > 0;
    if (kind == Mutation::distance) caught = caught && r.violations > 0;
    c.expect(caught, "mutation " + std::to_string(trial) + " not detected");
  }
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    std::function<void(Check&)> body;
  };
  const std::vector<Criterion> criteria{
      {1, "D(4,4) listing", d44_listing},
      {2, "Catalan counts and first/last words", catalan_and_boundaries},
      {3, "beta(0,1) tree counts", tree_counts},
      {4, "cyclic 3-Gray full list, n <= 8", full_list_gray},
      {5, "(1,1) and (2,2) lists and beta(2,2) counts", generalization},
      {6, "no cyclic 2-Gray order of the three n=3 trees", minimality},
      {7, "psi round trip, image counts, known maps", bijection},
      {8, "f1r3 = root, s1r3 = sub, op1 increment", statistics},
      {9, "mutated lists are rejected", mutations},
  };
  int failed = 0;
  for (const auto& cr : criteria) {
    Check check;
    const auto start = std::chrono::steady_clock::now();
    try {
      cr.body(check);
    } catch (const std::exception& e) {
      check.expect(false, std::string("exception: ") + e.what());
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::cout << (check.ok() ? "PASS" : "FAIL") << " [" << cr.id << "] " << cr.name << " ("
              << std::fixed << std::setprecision(2) << secs << " s)";
    if (!check.ok()) std::cout << ": " << check.first();
    std::cout << std::endl;
    failed += check.ok() ? 0 : 1;
  }
  std::cout << (failed == 0 ? "all criteria pass" : std::to_string(failed) + " criteria fail") << '\n';
  return failed == 0 ? 0 : 1;
}
