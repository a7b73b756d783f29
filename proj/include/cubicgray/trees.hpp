#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cubicgray/dyck.hpp"
#include "cubicgray/shape.hpp"

namespace cubicgray {

// A vertex label: a non-negative integer or the root sentinel `*`.
// The sentinel compares equal only to itself.
class Label {
 public:
  // Value used for `*` in integer-valued exports (JSON records).
  static constexpr std::int64_t kStarWire = -1;

  constexpr Label() = default;
  constexpr Label(int value) : value_(value) {}  // NOLINT: labels read like ints
  static constexpr Label star() {
    Label l;
    l.star_ = true;
    return l;
  }

  constexpr bool is_star() const { return star_; }
  // Throws invalid_argument for `*`.
  int value() const;
  std::int64_t wire() const { return star_ ? kStarWire : value_; }

  std::string to_string() const { return star_ ? "*" : std::to_string(value_); }

  friend constexpr bool operator==(Label, Label) = default;
  friend constexpr std::strong_ordering operator<=>(Label, Label) = default;

 private:
  bool star_ = false;
  int value_ = 0;
};

using LabelTuple = std::vector<Label>;

// "(*,1,0)".
std::string format_labels(const LabelTuple& labels);

// How the root label is constrained.
enum class RootMode {
  star,          // sentinel `*`
  sum,           // sum of the children's labels
  sum_plus_one,  // one more than the sum of the children's labels
  internal,      // same rule as any other internal vertex
};

std::string_view to_string(RootMode mode);
RootMode parse_root_mode(std::string_view text);

// Plane tree with one label per vertex in preorder.
class LabeledTree {
 public:
  // Throws malformed_tree if the label count differs from the vertex count,
  // or if `*` appears anywhere but at the root of a star-mode tree.
  LabeledTree(Shape shape, LabelTuple labels, RootMode mode);

  const Shape& shape() const { return shape_; }
  const LabelTuple& labels() const { return labels_; }
  RootMode root_mode() const { return mode_; }
  std::size_t size() const { return shape_.size(); }

  Label label(std::size_t v) const { return labels_[v]; }
  // root(T); throws invalid_argument in star mode.
  int root() const { return labels_[0].value(); }
  // sub(T): number of children of the root.
  std::size_t sub() const { return shape_.children(0).size(); }
  bool trivial() const { return size() == 1; }
  bool irreducible() const { return sub() == 1; }

  friend bool operator==(const LabeledTree&, const LabeledTree&) = default;

 private:
  Shape shape_;
  LabelTuple labels_;
  RootMode mode_;
};

struct ValidityReport {
  bool valid = true;
  std::optional<std::size_t> vertex;  // first offending vertex (preorder)
  std::string rule;

  explicit operator bool() const { return valid; }
};

// Checks the beta(a,b) rules: leaves carry a, every non-root internal vertex
// v has a <= label(v) <= b + sum of its children's labels, and the root obeys
// the tree's root mode.
ValidityReport validate(const LabeledTree& t, int a, int b);

// l(T): labels in leftmost depth-first order (the storage order).
LabelTuple labels_preorder(const LabeledTree& t);

// Re-express the root label under another mode. Converting to `internal`
// is not label-local and throws invalid_argument.
LabeledTree with_root_mode(const LabeledTree& t, RootMode mode);

// Shape word followed by preorder labels with `*` at the root; 3n-2 symbols.
class TreeCode {
 public:
  // Throws malformed_tree unless shape_bits is a Dyck word of length 2n-2,
  // labels has n entries, and only labels[0] is (and must be) `*`.
  TreeCode(PrefixWord shape_bits, LabelTuple labels);

  // Parses the canonical text form "(1,1,0,0,*,1,0)".
  static TreeCode parse(std::string_view text);

  const PrefixWord& shape_bits() const { return shape_bits_; }
  const LabelTuple& labels() const { return labels_; }
  std::size_t vertex_count() const { return labels_.size(); }
  std::size_t length() const { return shape_bits_.size() + labels_.size(); }

  std::string to_string() const;

  friend bool operator==(const TreeCode&, const TreeCode&) = default;
  friend std::strong_ordering operator<=>(const TreeCode& x, const TreeCode& y);

 private:
  PrefixWord shape_bits_;
  LabelTuple labels_;
};

// Star-mode code of t. Sum modes are converted; internal mode is rejected.
TreeCode encode(const LabeledTree& t);

// Star-mode tree of c; throws malformed_tree if it violates the (a,b) rules.
LabeledTree decode(const TreeCode& c, int a, int b);

// U (+) V: roots identified, children of U then V, root label
// root(U) + root(V) - 1. Sum-plus-one mode, nontrivial operands.
LabeledTree oplus(const LabeledTree& u, const LabeledTree& v);

// lambda_i(T): a new root above the old one; old root gets i, new root i+1.
// Requires 0 <= i <= root(T).
LabeledTree lambda_i(const LabeledTree& t, int i);

// Irreducible summands of t, left to right; their oplus-fold is t.
std::vector<LabeledTree> decompose(const LabeledTree& t);

// Single vertex, sum-plus-one mode, label 0.
LabeledTree trivial_tree();

}  // namespace cubicgray
