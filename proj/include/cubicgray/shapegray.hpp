#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "cubicgray/errors.hpp"
#include "cubicgray/shape.hpp"
#include "cubicgray/trees.hpp"

namespace cubicgray {

using TupleList = std::vector<LabelTuple>;

// gamma(u) = <(a),(u),(u-1),...,(a+1)>; delta(u) = <(a+1),(u),(u-1),...,(a+2),(a)>.
// For u == a both collapse to <(a)>. Throws invalid_argument if u < a.
TupleList gamma(int u, int a = 0);
TupleList delta(int u, int a = 0);

// Reflected product of Gray lists, first factor outermost:
//   N_1 = L_m,  N_i = e_1.N_{i-1} o e_2.rev(N_{i-1}) o e_3.N_{i-1} o ...
// with <e_1,e_2,...> = L_{m-i+1}. Distance between successive outputs is at
// most the largest factor distance.
template <class T>
std::vector<std::vector<T>> product_gray(const std::vector<std::vector<std::vector<T>>>& lists) {
  if (lists.empty()) throw invalid_argument("product_gray needs at least one factor");
  std::vector<std::vector<T>> acc = lists.back();
  for (std::size_t f = lists.size() - 1; f-- > 0;) {
    std::vector<std::vector<T>> next;
    next.reserve(lists[f].size() * acc.size());
    for (std::size_t j = 0; j < lists[f].size(); ++j) {
      const auto& head = lists[f][j];
      const bool forward = j % 2 == 0;
      for (std::size_t r = 0; r < acc.size(); ++r) {
        const auto& tail = acc[forward ? r : acc.size() - 1 - r];
        std::vector<T> t(head);
        t.insert(t.end(), tail.begin(), tail.end());
        next.push_back(std::move(t));
      }
    }
    acc = std::move(next);
  }
  return acc;
}

// Cyclic product of Gray lists whose factors after the first are cyclic (or
// have at most two entries). The result is a cyclic Gray list starting at the
// tuple built from every factor's first entry.
//
// Two factors A (p entries) and B (q entries) are laid out as a p x q grid and
// walked as: (0,0), then rows 0..p-1 snaking over columns 1..q-1, then back up
// column 0 from row p-1 to row 1. Only the wrap edge of B is ever used, and only
// when p is odd.
template <class T>
std::vector<std::vector<T>> cyclic_product(const std::vector<std::vector<std::vector<T>>>& lists) {
  if (lists.empty()) throw invalid_argument("cyclic_product needs at least one factor");
  auto join = [](const std::vector<T>& x, const std::vector<T>& y) {
    std::vector<T> t(x);
    t.insert(t.end(), y.begin(), y.end());
    return t;
  };
  std::vector<std::vector<T>> acc = lists.front();
  for (std::size_t f = 1; f < lists.size(); ++f) {
    const auto& inner = lists[f];
    const std::size_t p = acc.size();
    const std::size_t q = inner.size();
    std::vector<std::vector<T>> next;
    next.reserve(p * q);
    if (p == 1 || q == 1) {
      for (const auto& x : acc) {
        for (const auto& y : inner) next.push_back(join(x, y));
      }
    } else {
      next.push_back(join(acc[0], inner[0]));
      for (std::size_t i = 0; i < p; ++i) {
        for (std::size_t s = 1; s < q; ++s) {
          const std::size_t j = i % 2 == 0 ? s : q - s;
          next.push_back(join(acc[i], inner[j]));
        }
      }
      for (std::size_t i = p - 1; i >= 1; --i) next.push_back(join(acc[i], inner[0]));
    }
    acc = std::move(next);
  }
  return acc;
}

// All proper labelings of one shape, in Gray order.
struct LabelList {
  Shape shape;
  int a = 0;
  int b = 1;
  RootMode mode = RootMode::internal;
  TupleList order;
  bool cyclic = false;
};

// 1-Gray list of every labeling of s under beta'(a,b) (internal mode) or
// beta(a,b) with a `*` root (star mode). Child lists are combined with
// product_gray and the root coordinate is threaded through them as
//   M = gamma(m(alpha_1)).alpha_1 o delta(m(alpha_2)).alpha_2 o gamma(...) o ...
// where m(alpha) = b + sum of the child-root labels in alpha.
// Throws unsupported for b = 0 and invalid_argument for the sum modes.
LabelList label_gray_path(const Shape& s, int a, int b, RootMode mode);

// Same labelings as a cyclic 1-Gray list. When the zigzag would close on the
// wrong level (odd number of child tuples) the first consecutive pair of child
// tuples that both admit root label a+2 is used to hop levels once.
LabelList label_gray_cycle(const Shape& s, int a, int b, RootMode mode);

// Rotation of a cyclic list that starts at the all-a labeling (`*` kept at a
// star root). Throws internal_error if that labeling is absent.
LabelList rotate_to_zero(const LabelList& l);

// Largest admissible label for vertex v given labels of its subtree:
// b + sum of v's children's labels. `labels` are indexed like the shape.
int root_capacity(const Shape& s, std::size_t v, std::span<const Label> labels, int b);

// Successive tuples r, s never differ in two distinct positions.
bool single_change_property(const TupleList& l, bool cyclic);
// For successive r, s, t: if s_i lies outside {r_i, t_i} then r_i != t_i.
bool through_change_property(const TupleList& l, bool cyclic);

}  // namespace cubicgray
