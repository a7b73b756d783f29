#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cubicgray/dyck.hpp"
#include "cubicgray/shapegray.hpp"
#include "cubicgray/trees.hpp"

namespace cubicgray {

// d(T1,T2) = d(l(T1), l(T2)) + d(w(u(T1)), w(u(T2))); `*` matches only `*`.
// Throws invalid_argument when the codes have different vertex counts.
std::size_t distance(const TreeCode& x, const TreeCode& y);

struct CodeEntry {
  std::size_t index = 0;
  TreeCode code;
  std::size_t block_id = 0;  // position of the shape word in D(n-1,n-1)
  bool block_start = false;
};

// Streams every beta(a,b)-tree on n vertices as
//   d_1.L(T(d_1)) o d_2.L(T(d_2)) o ...
// where d_i runs over D(n-1,n-1) and L(T(d)) is the cyclic per-shape list
// rotated to start at (*,a,...,a). Only one shape's labelings are held at a time.
class FullListStream {
 public:
  FullListStream(long n, int a, int b);

  std::optional<CodeEntry> next();

 private:
  void load_next_shape();

  int a_;
  int b_;
  DyckGrayStream shapes_;
  std::optional<PrefixWord> word_;
  TupleList block_;
  std::size_t block_pos_ = 0;
  std::size_t block_id_ = 0;
  std::size_t index_ = 0;
  bool started_ = false;
};

struct CodeList {
  std::size_t n = 0;
  int a = 0;
  int b = 1;
  std::vector<TreeCode> order;
  std::vector<std::size_t> block_starts;  // index of the first code of each shape block
};

// Materialized stream. Checks on construction that successive codes (and the
// last/first pair) are within distance 3, that each block starts at the
// all-a labeling and moves by 1 inside a block; throws internal_error otherwise.
CodeList full_list(long n, int a, int b);

enum class MapClass { bicubic, cubic_3_connected, cubic_nonseparable };

struct ClassParams {
  int a;
  int b;
};

ClassParams class_params(MapClass c);
std::string_view to_string(MapClass c);
// Accepts "bicubic", "cubic-3-connected", "cubic-nonseparable".
MapClass parse_map_class(std::string_view text);

// Vertex count of the maps encoded by trees on n vertices, when known.
std::optional<std::size_t> map_vertex_count(MapClass c, std::size_t n);

CodeList map_class_list(long n, MapClass c);

}  // namespace cubicgray
