#include "cubicgray/verify.hpp"

#include <algorithm>
#include <future>
#include <sstream>

#include "cubicgray/fullgray.hpp"

namespace cubicgray {
namespace {

BigInt factorial(long n) {
  BigInt f = 1;
  for (long i = 2; i <= n; ++i) f *= i;
  return f;
}

BigInt pow2(long n) { return BigInt(1) << n; }

BigInt catalan_big(long m) { return factorial(2 * m) / (factorial(m) * factorial(m + 1)); }

using Word = std::vector<int>;

void balanced_words(Word& w, long open, long close, long pairs, std::vector<Word>& out) {
  if (open == pairs && close == pairs) {
    out.push_back(w);
    return;
  }
  if (open < pairs) {
    w.push_back(1);
    balanced_words(w, open + 1, close, pairs, out);
    w.pop_back();
  }
  if (close < open) {
    w.push_back(0);
    balanced_words(w, open, close + 1, pairs, out);
    w.pop_back();
  }
}

using Kids = std::vector<std::vector<std::size_t>>;

Kids kids_of(const Word& w) {
  Kids kids(1);
  std::vector<std::size_t> stack{0};
  for (int bit : w) {
    if (bit == 1) {
      const std::size_t v = kids.size();
      kids[stack.back()].push_back(v);
      kids.emplace_back();
      stack.push_back(v);
    } else {
      stack.pop_back();
    }
  }
  return kids;
}

// Labelings of the subtree at v, as preorder-local tuples.
std::vector<std::vector<int>> labelings(const Kids& kids, std::size_t v, int a, int b) {
  if (kids[v].empty()) return {{a}};
  std::vector<std::pair<std::vector<int>, int>> partial{{{}, 0}};  // tuple, sum of child roots
  for (std::size_t c : kids[v]) {
    const auto sub = labelings(kids, c, a, b);
    std::vector<std::pair<std::vector<int>, int>> next;
    next.reserve(partial.size() * sub.size());
    for (const auto& [tuple, sum] : partial) {
      for (const auto& s : sub) {
        auto t = tuple;
        t.insert(t.end(), s.begin(), s.end());
        next.emplace_back(std::move(t), sum + s.front());
      }
    }
    partial = std::move(next);
  }
  std::vector<std::vector<int>> out;
  for (const auto& [tuple, sum] : partial) {
    for (int x = a; x <= b + sum; ++x) {
      std::vector<int> row{x};
      row.insert(row.end(), tuple.begin(), tuple.end());
      out.push_back(std::move(row));
    }
  }
  return out;
}

std::vector<TreeCode> codes_for_shape(const Word& w, int a, int b) {
  const Kids kids = kids_of(w);
  const PrefixWord bits = PrefixWord::from_bits(std::span<const int>(w));
  std::vector<std::vector<int>> rest{{}};
  for (std::size_t c : kids[0]) {
    const auto sub = labelings(kids, c, a, b);
    std::vector<std::vector<int>> next;
    for (const auto& prefix : rest) {
      for (const auto& s : sub) {
        auto t = prefix;
        t.insert(t.end(), s.begin(), s.end());
        next.push_back(std::move(t));
      }
    }
    rest = std::move(next);
  }
  std::vector<TreeCode> out;
  out.reserve(rest.size());
  for (const auto& t : rest) {
    LabelTuple labels{Label::star()};
    labels.insert(labels.end(), t.begin(), t.end());
    out.emplace_back(bits, std::move(labels));
  }
  return out;
}

std::string size_estimate(long n, int a, int b) {
  if (n >= 2 && a == 0 && b == 1) return count_bicubic(n - 1).str();
  if (n >= 2 && a == 2 && b == 2) return count_cubic_nonseparable(n - 1).str();
  return "at least " + catalan_big(n - 1).str();
}

const char* yes_no(bool x) { return x ? "pass" : "fail"; }

template <class T>
std::string opt(const std::optional<T>& x) {
  if (!x) return "none";
  if constexpr (std::is_same_v<T, TreeCode>) {
    return x->to_string();
  } else {
    return std::to_string(*x);
  }
}

}  // namespace

BigInt count_bicubic(long n) {
  if (n < 1) throw invalid_argument("count_bicubic needs n >= 1");
  return 3 * pow2(n - 1) * factorial(2 * n) / (factorial(n) * factorial(n + 2));
}

BigInt count_cubic_nonseparable(long n) {
  if (n < 1) throw invalid_argument("count_cubic_nonseparable needs n >= 1");
  return pow2(n) * factorial(3 * n) / (factorial(n + 1) * factorial(2 * n + 1));
}

std::set<TreeCode> enumerate_trees(long n, int a, int b, RootMode mode, EnumerationLimits limits) {
  if (n < 1) throw invalid_argument("enumerate_trees needs n >= 1");
  if (a < 0 || b < 0) throw invalid_argument("enumerate_trees needs a, b >= 0");
  if (mode == RootMode::internal) {
    throw unsupported("codes carry `*` at the root; internal root mode has no code set");
  }
  if (n > limits.max_n) {
    const std::string estimate = size_estimate(n, a, b);
    throw too_large("refusing to enumerate n = " + std::to_string(n) + " (limit " +
                        std::to_string(limits.max_n) + ", about " + estimate + " trees)",
                    estimate);
  }
  std::vector<Word> words;
  Word w;
  balanced_words(w, 0, 0, n - 1, words);

  const unsigned jobs = std::max(1U, std::min<unsigned>(limits.jobs, static_cast<unsigned>(words.size())));
  std::vector<std::future<std::vector<TreeCode>>> parts;
  for (unsigned j = 0; j < jobs; ++j) {
    parts.push_back(std::async(jobs == 1 ? std::launch::deferred : std::launch::async, [&, j] {
      std::vector<TreeCode> out;
      for (std::size_t i = j; i < words.size(); i += jobs) {
        auto codes = codes_for_shape(words[i], a, b);
        out.insert(out.end(), std::make_move_iterator(codes.begin()),
                   std::make_move_iterator(codes.end()));
      }
      return out;
    }));
  }
  std::set<TreeCode> all;
  for (auto& p : parts) {
    for (auto& c : p.get()) all.insert(std::move(c));
  }
  return all;
}

GrayReport check_gray(std::span<const TreeCode> list, int bound, bool cyclic,
                      const std::set<TreeCode>& oracle) {
  GrayReport r;
  r.bound = bound;
  r.cyclic = cyclic;
  r.length = list.size();
  r.expected = oracle.size();

  std::set<TreeCode> seen;
  for (std::size_t i = 0; i < list.size(); ++i) {
    if (!seen.insert(list[i]).second) {
      ++r.duplicates;
      if (!r.first_duplicate) r.first_duplicate = i;
    }
    if (!oracle.contains(list[i])) {
      ++r.extraneous;
      if (!r.first_extraneous) r.first_extraneous = i;
    }
  }
  for (const TreeCode& c : oracle) {
    if (!seen.contains(c)) {
      ++r.missing;
      if (!r.first_missing) r.first_missing = c;
    }
  }

  const std::size_t n = list.size();
  const std::size_t pairs = n < 2 ? 0 : (cyclic ? n : n - 1);
  for (std::size_t i = 0; i < pairs; ++i) {
    const TreeCode& x = list[i];
    const TreeCode& y = list[(i + 1) % n];
    bool bad = x.vertex_count() != y.vertex_count();
    if (!bad) {
      const std::size_t d = distance(x, y);
      r.max_distance = std::max(r.max_distance, d);
      bad = d > static_cast<std::size_t>(std::max(bound, 0));
    }
    if (bad) {
      ++r.violations;
      if (!r.first_violation) r.first_violation = i;
    }
  }
  return r;
}

std::string GrayReport::to_text() const {
  std::ostringstream out;
  out << "gray.bound: " << bound << '\n'
      << "gray.cyclic: " << (cyclic ? "true" : "false") << '\n'
      << "gray.length: " << length << '\n'
      << "gray.expected: " << expected << '\n'
      << "gray.duplicates: " << duplicates << '\n'
      << "gray.missing: " << missing << '\n'
      << "gray.extraneous: " << extraneous << '\n'
      << "gray.violations: " << violations << '\n'
      << "gray.max_distance: " << max_distance << '\n'
      << "gray.first_duplicate: " << opt(first_duplicate) << '\n'
      << "gray.first_extraneous: " << opt(first_extraneous) << '\n'
      << "gray.first_violation: " << opt(first_violation) << '\n'
      << "gray.first_missing: " << opt(first_missing) << '\n'
      << "gray.result: " << yes_no(pass()) << '\n';
  return out.str();
}

MapCheck check_map(const RotationMap& m) {
  MapCheck c;
  c.report = m.report();
  c.vertices = m.vertex_count();
  c.edges = m.edge_count();
  c.faces = m.face_count();
  return c;
}

std::string MapCheck::to_text() const {
  std::ostringstream out;
  out << "map.vertices: " << vertices << '\n'
      << "map.edges: " << edges << '\n'
      << "map.faces: " << faces << '\n'
      << "map.permutations: " << yes_no(report.permutations) << '\n'
      << "map.involution: " << yes_no(report.involution) << '\n'
      << "map.cubic: " << yes_no(report.cubic) << '\n'
      << "map.connected: " << yes_no(report.connected) << '\n'
      << "map.planar: " << yes_no(report.planar) << '\n'
      << "map.bipartite: " << yes_no(report.bipartite) << '\n'
      << "map.root_black: " << yes_no(report.root_black) << '\n'
      << "map.face_colored: " << yes_no(report.face_colored) << '\n'
      << "map.root_face_3: " << yes_no(report.root_face_3) << '\n'
      << "map.result: " << yes_no(pass()) << '\n';
  return out.str();
}

std::vector<TreeCode> mutate(const std::vector<TreeCode>& list, Mutation kind, int bound,
                             std::mt19937_64& rng) {
  if (list.size() < 2) throw invalid_argument("mutate needs at least two codes");
  std::vector<TreeCode> out = list;
  auto pick = [&](std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng); };
  switch (kind) {
    case Mutation::duplicate: {
      const std::size_t i = pick(out.size());
      out.insert(out.begin() + static_cast<long>(pick(out.size() + 1)), list[i]);
      return out;
    }
    case Mutation::omission:
      out.erase(out.begin() + static_cast<long>(pick(out.size())));
      return out;
    case Mutation::distance:
      break;
  }
  const std::size_t n = out.size();
  auto too_far = [&](std::size_t i) {
    const TreeCode& x = out[i % n];
    const TreeCode& y = out[(i + 1) % n];
    return x.vertex_count() != y.vertex_count() ||
           distance(x, y) > static_cast<std::size_t>(std::max(bound, 0));
  };
  for (int attempt = 0; attempt < 10000; ++attempt) {
    const std::size_t i = pick(n);
    const std::size_t j = pick(n);
    if (i == j || out[i] == out[j]) continue;
    std::swap(out[i], out[j]);
    // only pairs touching i or j changed; the wrap pair is left out so the
    // defect also shows in non-cyclic checks
    bool injected = false;
    for (std::size_t p : {i + n - 1, i, j + n - 1, j}) {
      if ((p % n) + 1 < n && too_far(p % n)) injected = true;
    }
    if (injected) return out;
    std::swap(out[i], out[j]);
  }
  throw internal_error("could not inject a distance violation");
}

}  // namespace cubicgray
