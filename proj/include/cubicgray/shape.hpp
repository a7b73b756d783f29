#pragma once

#include <cstddef>
#include <vector>

namespace cubicgray {

// Rooted plane tree. Vertices are numbered in preorder (leftmost depth-first),
// so vertex 0 is the root and every child index exceeds its parent's.
class Shape {
 public:
  // Single vertex.
  Shape();

  // `children[v]` lists the children of v from left to right. Throws
  // malformed_tree unless the lists describe one tree numbered in preorder.
  explicit Shape(std::vector<std::vector<std::size_t>> children);

  std::size_t size() const { return children_.size(); }
  const std::vector<std::size_t>& children(std::size_t v) const { return children_[v]; }
  // Parent of v; the root is its own parent.
  std::size_t parent(std::size_t v) const { return parent_[v]; }
  bool is_leaf(std::size_t v) const { return children_[v].empty(); }
  // One past the last preorder index of the subtree rooted at v.
  std::size_t subtree_end(std::size_t v) const { return end_[v]; }
  std::size_t subtree_size(std::size_t v) const { return end_[v] - v; }

  // Vertices that are neither the root nor a leaf.
  std::size_t internal_count() const;

  // Shape of the subtree rooted at v, renumbered from 0.
  Shape subtree(std::size_t v) const;

  friend bool operator==(const Shape& x, const Shape& y) { return x.children_ == y.children_; }

 private:
  std::vector<std::vector<std::size_t>> children_;
  std::vector<std::size_t> parent_;
  std::vector<std::size_t> end_;
};

}  // namespace cubicgray
