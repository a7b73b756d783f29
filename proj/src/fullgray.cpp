#include "cubicgray/fullgray.hpp"

#include "cubicgray/errors.hpp"

namespace cubicgray {

std::size_t distance(const TreeCode& x, const TreeCode& y) {
  if (x.vertex_count() != y.vertex_count()) {
    throw invalid_argument("distance between codes on " + std::to_string(x.vertex_count()) +
                           " and " + std::to_string(y.vertex_count()) + " vertices");
  }
  std::size_t d = x.shape_bits().hamming(y.shape_bits());
  for (std::size_t i = 0; i < x.labels().size(); ++i) d += x.labels()[i] != y.labels()[i] ? 1 : 0;
  return d;
}

FullListStream::FullListStream(long n, int a, int b)
    : a_(a), b_(b), shapes_(n < 1 ? -1 : n - 1, n < 1 ? 0 : n - 1) {
  if (b == 0) throw unsupported("Gray codes for b = 0 families are not supported");
  if (a < 0 || b < 0) throw invalid_argument("beta(a,b) parameters must be non-negative");
}

void FullListStream::load_next_shape() {
  block_.clear();
  block_pos_ = 0;
  const PrefixWord* w = shapes_.next();
  if (w == nullptr) {
    word_.reset();
    return;
  }
  if (started_) ++block_id_;
  started_ = true;
  word_ = *w;
  block_ = rotate_to_zero(label_gray_cycle(shape_from_word(*w), a_, b_, RootMode::star)).order;
}

std::optional<CodeEntry> FullListStream::next() {
  if (block_pos_ >= block_.size()) {
    load_next_shape();
    if (!word_) return std::nullopt;
  }
  CodeEntry e{index_++, TreeCode(*word_, block_[block_pos_]), block_id_, block_pos_ == 0};
  ++block_pos_;
  return e;
}

CodeList full_list(long n, int a, int b) {
  if (n < 1) throw invalid_argument("full_list needs n >= 1");
  CodeList out{static_cast<std::size_t>(n), a, b, {}, {}};
  FullListStream stream(n, a, b);
  while (auto e = stream.next()) {
    if (e->block_start) {
      out.block_starts.push_back(e->index);
      for (std::size_t i = 1; i < e->code.labels().size(); ++i) {
        if (e->code.labels()[i] != Label(a)) {
          throw internal_error("shape block does not start at the all-a labeling: " +
                               e->code.to_string());
        }
      }
    } else if (distance(out.order.back(), e->code) != 1) {
      throw internal_error("codes inside a shape block differ in more than one position");
    }
    out.order.push_back(std::move(e->code));
  }
  const std::size_t size = out.order.size();
  for (std::size_t i = 0; i < size; ++i) {
    const std::size_t d = distance(out.order[i], out.order[(i + 1) % size]);
    if (d > 3) {
      throw internal_error("codes " + std::to_string(i) + " and " +
                           std::to_string((i + 1) % size) + " are at distance " +
                           std::to_string(d));
    }
  }
  return out;
}

ClassParams class_params(MapClass c) {
  switch (c) {
    case MapClass::bicubic: return {0, 1};
    case MapClass::cubic_3_connected: return {1, 1};
    case MapClass::cubic_nonseparable: return {2, 2};
  }
  return {0, 1};
}

std::string_view to_string(MapClass c) {
  switch (c) {
    case MapClass::bicubic: return "bicubic";
    case MapClass::cubic_3_connected: return "cubic-3-connected";
    case MapClass::cubic_nonseparable: return "cubic-nonseparable";
  }
  return "?";
}

MapClass parse_map_class(std::string_view text) {
  for (MapClass c : {MapClass::bicubic, MapClass::cubic_3_connected, MapClass::cubic_nonseparable}) {
    if (text == to_string(c)) return c;
  }
  throw invalid_argument("unknown map class '" + std::string(text) +
                         "' (expected bicubic, cubic-3-connected or cubic-nonseparable)");
}

std::optional<std::size_t> map_vertex_count(MapClass c, std::size_t n) {
  // A tree with n vertices has n-1 edges; bicubic and cubic non-separable
  // maps on 2(n-1) vertices correspond to such trees.
  if (n < 2) return std::nullopt;
  if (c == MapClass::cubic_3_connected) return std::nullopt;
  return 2 * (n - 1);
}

CodeList map_class_list(long n, MapClass c) {
  const ClassParams p = class_params(c);
  return full_list(n, p.a, p.b);
}

}  // namespace cubicgray
