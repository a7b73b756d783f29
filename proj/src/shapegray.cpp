#include "cubicgray/shapegray.hpp"

#include <algorithm>
#include <string>

namespace cubicgray {

TupleList gamma(int u, int a) {
  if (u < a) throw invalid_argument("gamma(u) needs u >= a");
  TupleList out{{a}};
  for (int x = u; x > a; --x) out.push_back({x});
  return out;
}

TupleList delta(int u, int a) {
  if (u < a) throw invalid_argument("delta(u) needs u >= a");
  if (u == a) return {{a}};
  TupleList out{{a + 1}};
  for (int x = u; x > a + 1; --x) out.push_back({x});
  out.push_back({a});
  return out;
}

int root_capacity(const Shape& s, std::size_t v, std::span<const Label> labels, int b) {
  int cap = b;
  for (std::size_t c : s.children(v)) cap += labels[c].value();
  return cap;
}

namespace {

using IntTuple = std::vector<int>;
using IntList = std::vector<IntTuple>;

// Builds the Gray lists of every subtree of one shape. Tuples are local to the
// subtree: position 0 is the subtree root, the rest follow in preorder.
class LabelingBuilder {
 public:
  LabelingBuilder(const Shape& s, int a, int b) : shape_(s), a_(a), b_(b) {}

  IntList path(std::size_t v) {
    if (shape_.is_leaf(v)) return {{a_}};
    const IntList product = product_gray(child_lists(v, false));
    const std::size_t n = product.size();
    std::vector<int> crossings(n);
    for (std::size_t j = 0; j < n; ++j) crossings[j] = j % 2 == 0 ? a_ + 1 : a_;
    return thread_root(v, product, a_, crossings);
  }

  IntList cycle(std::size_t v) {
    if (shape_.is_leaf(v)) return {{a_}};
    const IntList product = cyclic_product(child_lists(v, true));
    const std::size_t n = product.size();
    // crossings[j] is the root level used to step from column j to column j+1.
    std::vector<int> crossings(n);
    for (std::size_t j = 0; j < n; ++j) crossings[j] = j % 2 == 0 ? a_ + 1 : a_;
    if (n == 1 || n % 2 == 0) return thread_root(v, product, a_, crossings);

    const std::size_t k = find_splice(v, product);
    crossings[k] = a_ + 2;
    for (std::size_t j = k + 1; j < n; ++j) crossings[j] = (n - 1 - j) % 2 == 0 ? a_ : a_ + 1;
    return thread_root(v, product, crossings[n - 1], crossings);
  }

  // Child-product lists for the star root: the root coordinate is fixed.
  IntList star_product(bool cyclic) {
    if (shape_.is_leaf(0)) return {{}};
    auto lists = child_lists(0, cyclic);
    return cyclic ? cyclic_product(lists) : product_gray(lists);
  }

 private:
  std::vector<IntList> child_lists(std::size_t v, bool cyclic) {
    std::vector<IntList> lists;
    for (std::size_t c : shape_.children(v)) lists.push_back(cyclic ? cycle(c) : path(c));
    return lists;
  }

  // b + sum of child-root labels for a child-product tuple of vertex v.
  int capacity(std::size_t v, const IntTuple& alpha) const {
    int cap = b_;
    for (std::size_t c : shape_.children(v)) cap += alpha[c - v - 1];
    return cap;
  }

  // First consecutive pair (cyclically) of child tuples that both admit
  // root label a+2.
  std::size_t find_splice(std::size_t v, const IntList& product) const {
    const std::size_t n = product.size();
    for (std::size_t j = 0; j < n; ++j) {
      if (capacity(v, product[j]) >= a_ + 2 && capacity(v, product[(j + 1) % n]) >= a_ + 2) {
        return j;
      }
    }
    throw internal_error("no splice edge at vertex " + std::to_string(v) + " (" +
                         std::to_string(n) + " child tuples)");
  }

  // Column j holds root labels a..m(alpha_j) over alpha_j. It is entered at
  // `entry` (crossings[j-1], or first_entry for j = 0), left at crossings[j],
  // and the remaining levels are visited from the top down in between.
  IntList thread_root(std::size_t v, const IntList& product, int first_entry,
                      const std::vector<int>& crossings) const {
    IntList out;
    for (std::size_t j = 0; j < product.size(); ++j) {
      const int top = capacity(v, product[j]);
      const int entry = j == 0 ? first_entry : crossings[j - 1];
      const int exit = crossings[j];
      auto emit = [&](int x) {
        IntTuple t{x};
        t.insert(t.end(), product[j].begin(), product[j].end());
        out.push_back(std::move(t));
      };
      if (entry > top || exit > top || entry == exit) {
        throw internal_error("root levels " + std::to_string(entry) + "->" +
                             std::to_string(exit) + " do not fit column of height " +
                             std::to_string(top));
      }
      emit(entry);
      for (int x = top; x >= a_; --x) {
        if (x != entry && x != exit) emit(x);
      }
      emit(exit);
    }
    return out;
  }

  const Shape& shape_;
  int a_;
  int b_;
};

void check_params(int a, int b, RootMode mode) {
  if (a < 0 || b < 0) throw invalid_argument("beta(a,b) parameters must be non-negative");
  if (b == 0) throw unsupported("Gray codes for b = 0 families are not supported");
  if (mode != RootMode::star && mode != RootMode::internal) {
    throw invalid_argument("label Gray lists are built for star or internal root modes, not " +
                           std::string(to_string(mode)));
  }
}

LabelList build(const Shape& s, int a, int b, RootMode mode, bool cyclic) {
  check_params(a, b, mode);
  LabelingBuilder builder(s, a, b);
  LabelList out{s, a, b, mode, {}, cyclic};
  if (mode == RootMode::internal) {
    for (const IntTuple& t : cyclic ? builder.cycle(0) : builder.path(0)) {
      out.order.emplace_back(t.begin(), t.end());
    }
  } else {
    for (const IntTuple& t : builder.star_product(cyclic)) {
      LabelTuple row{Label::star()};
      row.insert(row.end(), t.begin(), t.end());
      out.order.push_back(std::move(row));
    }
  }
  return out;
}

bool all_consecutive(const TupleList& l, bool cyclic, std::size_t span,
                     const auto& predicate) {
  const std::size_t n = l.size();
  if (n < span) return true;
  const std::size_t limit = cyclic ? n : n - span + 1;
  for (std::size_t i = 0; i < limit; ++i) {
    if (!predicate(i, (i + 1) % n, (i + 2) % n)) return false;
  }
  return true;
}

}  // namespace

LabelList label_gray_path(const Shape& s, int a, int b, RootMode mode) {
  return build(s, a, b, mode, false);
}

LabelList label_gray_cycle(const Shape& s, int a, int b, RootMode mode) {
  return build(s, a, b, mode, true);
}

LabelList rotate_to_zero(const LabelList& l) {
  if (!l.cyclic) throw invalid_argument("rotate_to_zero needs a cyclic list");
  auto is_base = [&](const LabelTuple& t) {
    return std::all_of(t.begin(), t.end(), [&](Label x) { return x.is_star() || x == Label(l.a); });
  };
  const auto it = std::find_if(l.order.begin(), l.order.end(), is_base);
  if (it == l.order.end()) throw internal_error("all-a labeling missing from cyclic list");
  LabelList out = l;
  std::rotate(out.order.begin(), out.order.begin() + (it - l.order.begin()), out.order.end());
  return out;
}

bool single_change_property(const TupleList& l, bool cyclic) {
  return all_consecutive(l, cyclic, 2, [&](std::size_t r, std::size_t s, std::size_t) {
    std::size_t diff = 0;
    for (std::size_t i = 0; i < l[r].size(); ++i) diff += l[r][i] != l[s][i] ? 1 : 0;
    return diff < 2;
  });
}

bool through_change_property(const TupleList& l, bool cyclic) {
  return all_consecutive(l, cyclic, 3, [&](std::size_t r, std::size_t s, std::size_t t) {
    for (std::size_t i = 0; i < l[s].size(); ++i) {
      if (l[s][i] != l[r][i] && l[s][i] != l[t][i] && l[r][i] == l[t][i]) return false;
    }
    return true;
  });
}

}  // namespace cubicgray
