#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "cubicgray/errors.hpp"
#include "cubicgray/trees.hpp"

namespace cubicgray {

using Dart = std::size_t;

enum class VertexColor { black, white };

// Outcome of each structural check on a rotation system.
struct MapReport {
  bool permutations = false;   // sigma and alpha are permutations of the darts
  bool involution = false;     // alpha is an involution without fixed points
  bool cubic = false;          // every sigma orbit has three darts
  bool connected = false;
  bool planar = false;         // V - E + F == 2
  bool bipartite = false;      // alpha joins differently colored vertices
  bool root_black = false;
  bool face_colored = false;   // consistent 1,2,3 rule at every vertex
  bool root_face_3 = false;

  bool ok() const {
    return permutations && involution && cubic && connected && planar && bipartite &&
           root_black && face_colored && root_face_3;
  }
  // Names of the failed checks, in declaration order.
  std::vector<std::string> failures() const;
};

// Rooted planar map given by two permutations on darts: sigma turns
// counterclockwise around a vertex, alpha swaps the two darts of an edge.
// Faces are orbits of phi = sigma o alpha; face(d) lies to the right of d.
// Vertex and face colors follow the root conventions: the root dart leaves a
// black vertex and has the 3-colored root face on its right; around a white
// vertex the face colors increase counterclockwise.
class RotationMap {
 public:
  // Stores the permutations as given. Colors are filled in only when the
  // structure permits; use report() to see what holds.
  static RotationMap raw(std::vector<Dart> sigma, std::vector<Dart> alpha, Dart root);

  // Cubic map with darts 3v, 3v+1, 3v+2 around vertex v in counterclockwise
  // order. Throws invalid_map unless every invariant holds.
  static RotationMap cubic(std::vector<Dart> alpha, Dart root);

  std::size_t dart_count() const { return sigma_.size(); }
  std::size_t vertex_count() const { return vertex_orbits_.size(); }
  std::size_t edge_count() const { return alpha_.size() / 2; }
  std::size_t face_count() const { return face_orbits_.size(); }

  Dart root() const { return root_; }
  Dart sigma(Dart d) const { return sigma_[d]; }
  Dart sigma_inv(Dart d) const { return sigma_inv_[d]; }
  Dart alpha(Dart d) const { return alpha_[d]; }
  Dart phi(Dart d) const { return sigma_[alpha_[d]]; }
  Dart phi_inv(Dart d) const { return alpha_[sigma_inv_[d]]; }

  std::size_t vertex_of(Dart d) const { return vertex_of_[d]; }
  std::size_t face_of(Dart d) const { return face_of_[d]; }
  const std::vector<Dart>& vertex_darts(std::size_t v) const { return vertex_orbits_[v]; }
  const std::vector<Dart>& face_darts(std::size_t f) const { return face_orbits_[f]; }

  // Present only for maps that pass report().
  std::optional<VertexColor> vertex_color(std::size_t v) const;
  std::optional<int> face_color(std::size_t f) const;

  const MapReport& report() const { return report_; }
  bool valid() const { return report_.ok(); }

  // Breadth-first relabeling from the root dart; two valid maps are rooted
  // isomorphic iff their canonical forms have equal alpha.
  RotationMap canonical() const;

  // Rooted isomorphism.
  friend bool operator==(const RotationMap& x, const RotationMap& y);

  // Deterministic text export.
  std::string to_text() const;

 private:
  RotationMap() = default;
  void analyze();

  std::vector<Dart> sigma_;
  std::vector<Dart> sigma_inv_;
  std::vector<Dart> alpha_;
  Dart root_ = 0;
  std::vector<std::size_t> vertex_of_;
  std::vector<std::size_t> face_of_;
  std::vector<std::vector<Dart>> vertex_orbits_;
  std::vector<std::vector<Dart>> face_orbits_;
  std::vector<VertexColor> vertex_colors_;
  std::vector<int> face_colors_;
  MapReport report_;
};

// Colorings under the root conventions. Throw invalid_map when none exists.
std::vector<VertexColor> two_color_vertices(const RotationMap& m);
std::vector<int> three_color_faces(const RotationMap& m);

// Two vertices joined by three edges.
RotationMap base_map();

// Number of distinct 1-colored faces sharing an edge with the root face.
std::size_t f1r3(const RotationMap& m);
// Number of edges shared by the root face and the 1-colored face at the head
// of the root dart.
std::size_t s1r3(const RotationMap& m);

// Replace the root edge by a path through a new digon. The root dart keeps
// its tail and now ends at the digon's white vertex.
RotationMap apply_op1(const RotationMap& m);

// Remove the root edge and the first edge (clockwise from the root vertex)
// of the i-th 1-colored face met clockwise along the root face, then
// reconnect through two new vertices. Throws invalid_argument unless
// 1 <= i <= f1r3(m).
RotationMap apply_op2(const RotationMap& m, std::size_t i);

// Glue irreducible maps in a ring: the edge after the root dart on each root
// face is cut and its white end joined to the black end cut from the next
// map. Rooted at the last map's root. Throws invalid_argument for fewer than
// two maps or a reducible operand.
RotationMap apply_op3(const std::vector<RotationMap>& ms);

// psi: sum-plus-one beta(0,1)-tree on n >= 2 vertices to a bicubic map on
// 2(n-1) vertices. Throws invalid_argument outside that domain.
RotationMap tree_to_map(const LabeledTree& t);

// Inverse of tree_to_map. Throws invalid_map for maps that fail report().
LabeledTree map_to_tree(const RotationMap& m);

}  // namespace cubicgray
