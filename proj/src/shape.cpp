#include "cubicgray/shape.hpp"

#include <string>

#include "cubicgray/errors.hpp"

namespace cubicgray {

Shape::Shape() : children_(1), parent_{0}, end_{1} {}

Shape::Shape(std::vector<std::vector<std::size_t>> children) : children_(std::move(children)) {
  const std::size_t n = children_.size();
  if (n == 0) throw malformed_tree("shape must have at least one vertex");
  parent_.assign(n, 0);
  end_.assign(n, 0);

  // Walk the children lists depth first and insist the visit order is 0,1,2,...
  std::size_t next = 1;
  std::vector<std::pair<std::size_t, std::size_t>> stack{{0, 0}};
  while (!stack.empty()) {
    auto& [v, pos] = stack.back();
    if (pos < children_[v].size()) {
      std::size_t c = children_[v][pos++];
      if (c != next) {
        throw malformed_tree("children lists are not in preorder: expected vertex " +
                             std::to_string(next) + ", found " + std::to_string(c));
      }
      ++next;
      parent_[c] = v;
      stack.emplace_back(c, 0);
    } else {
      end_[v] = next;
      stack.pop_back();
    }
  }
  if (next != n) throw malformed_tree("shape is not connected");
}

std::size_t Shape::internal_count() const {
  std::size_t count = 0;
  for (std::size_t v = 1; v < size(); ++v) count += is_leaf(v) ? 0 : 1;
  return count;
}

Shape Shape::subtree(std::size_t v) const {
  std::vector<std::vector<std::size_t>> kids;
  kids.reserve(subtree_size(v));
  for (std::size_t u = v; u < end_[v]; ++u) {
    std::vector<std::size_t> row;
    row.reserve(children_[u].size());
    for (std::size_t c : children_[u]) row.push_back(c - v);
    kids.push_back(std::move(row));
  }
  return Shape(std::move(kids));
}

}  // namespace cubicgray
