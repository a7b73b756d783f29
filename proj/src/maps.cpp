#include "cubicgray/maps.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>

namespace cubicgray {
namespace {

constexpr std::size_t kNone = static_cast<std::size_t>(-1);

Dart triple_sigma(Dart d) { return 3 * (d / 3) + (d % 3 + 1) % 3; }

std::vector<Dart> triple_sigma_vector(std::size_t n) {
  std::vector<Dart> s(n);
  for (Dart d = 0; d < n; ++d) s[d] = triple_sigma(d);
  return s;
}

bool is_permutation(const std::vector<Dart>& p) {
  std::vector<bool> seen(p.size(), false);
  for (Dart x : p) {
    if (x >= p.size() || seen[x]) return false;
    seen[x] = true;
  }
  return true;
}

// Breadth-first renumbering of the darts reachable from `root` in a triple
// layout map; darts of vertices never reached are dropped.
RotationMap compact(const std::vector<Dart>& alpha, Dart root) {
  std::vector<Dart> id(alpha.size(), kNone);
  std::vector<Dart> order;
  auto open = [&](Dart e) {
    for (int j = 0; j < 3; ++j) {
      id[e] = order.size();
      order.push_back(e);
      e = triple_sigma(e);
    }
  };
  open(root);
  for (std::size_t i = 0; i < order.size(); ++i) {
    const Dart a = alpha[order[i]];
    if (id[a] == kNone) open(a);
  }
  std::vector<Dart> out(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) out[i] = id[alpha[order[i]]];
  return RotationMap::cubic(std::move(out), 0);
}

// Alpha of m in triple layout; the canonical form always has that layout.
std::vector<Dart> triple_alpha(const RotationMap& m) {
  const RotationMap c = m.canonical();
  if (!c.valid()) throw invalid_map("map fails its invariants: " + c.report().failures().front());
  std::vector<Dart> alpha(c.dart_count());
  for (Dart d = 0; d < alpha.size(); ++d) alpha[d] = c.alpha(d);
  return alpha;
}

void pair(std::vector<Dart>& alpha, Dart x, Dart y) {
  alpha[x] = y;
  alpha[y] = x;
}

std::vector<Dart> root_face_orbit(const RotationMap& m) {
  std::vector<Dart> out;
  Dart d = m.root();
  do {
    out.push_back(d);
    d = m.phi(d);
  } while (d != m.root());
  return out;
}

std::size_t s1_face(const RotationMap& m) {
  const Dart back = m.alpha(m.root());
  return m.face_of(m.sigma(m.sigma(back)));
}

int color_of(const RotationMap& m, std::size_t face) { return *m.face_color(face); }

}  // namespace

std::vector<std::string> MapReport::failures() const {
  std::vector<std::string> out;
  const std::pair<bool, const char*> checks[] = {
      {permutations, "permutations"}, {involution, "involution"},   {cubic, "cubic"},
      {connected, "connected"},       {planar, "planar"},           {bipartite, "bipartite"},
      {root_black, "root-black"},     {face_colored, "face-colored"}, {root_face_3, "root-face-3"},
  };
  for (const auto& [ok, name] : checks) {
    if (!ok) out.emplace_back(name);
  }
  return out;
}

RotationMap RotationMap::raw(std::vector<Dart> sigma, std::vector<Dart> alpha, Dart root) {
  RotationMap m;
  m.sigma_ = std::move(sigma);
  m.alpha_ = std::move(alpha);
  m.root_ = root;
  m.analyze();
  return m;
}

RotationMap RotationMap::cubic(std::vector<Dart> alpha, Dart root) {
  auto sigma = triple_sigma_vector(alpha.size());
  RotationMap m = raw(std::move(sigma), std::move(alpha), root);
  if (!m.valid()) {
    throw invalid_map("map fails its invariants: " + m.report().failures().front());
  }
  return m;
}

void RotationMap::analyze() {
  report_ = MapReport{};
  const std::size_t n = sigma_.size();
  if (n == 0 || alpha_.size() != n || root_ >= n) return;
  if (!is_permutation(sigma_) || !is_permutation(alpha_)) return;
  report_.permutations = true;

  sigma_inv_.assign(n, 0);
  for (Dart d = 0; d < n; ++d) sigma_inv_[sigma_[d]] = d;

  report_.involution = true;
  for (Dart d = 0; d < n; ++d) {
    if (alpha_[d] == d || alpha_[alpha_[d]] != d) report_.involution = false;
  }

  auto orbits = [n](auto next, std::vector<std::size_t>& of, std::vector<std::vector<Dart>>& list) {
    of.assign(n, kNone);
    list.clear();
    for (Dart d = 0; d < n; ++d) {
      if (of[d] != kNone) continue;
      std::vector<Dart> orbit;
      Dart e = d;
      do {
        of[e] = list.size();
        orbit.push_back(e);
        e = next(e);
      } while (e != d);
      list.push_back(std::move(orbit));
    }
  };
  orbits([this](Dart d) { return sigma_[d]; }, vertex_of_, vertex_orbits_);
  orbits([this](Dart d) { return phi(d); }, face_of_, face_orbits_);

  report_.cubic = std::all_of(vertex_orbits_.begin(), vertex_orbits_.end(),
                              [](const auto& o) { return o.size() == 3; });

  std::vector<bool> reached(n, false);
  std::vector<Dart> stack{root_};
  reached[root_] = true;
  std::size_t count = 1;
  while (!stack.empty()) {
    const Dart d = stack.back();
    stack.pop_back();
    for (Dart e : {sigma_[d], alpha_[d]}) {
      if (!reached[e]) {
        reached[e] = true;
        ++count;
        stack.push_back(e);
      }
    }
  }
  report_.connected = count == n;
  if (!report_.involution || !report_.connected) return;

  const long euler = static_cast<long>(vertex_count()) - static_cast<long>(edge_count()) +
                     static_cast<long>(face_count());
  report_.planar = euler == 2;

  // Vertex 2-coloring by propagation from the root vertex.
  std::vector<int> vc(vertex_count(), -1);
  vc[vertex_of(root_)] = 0;
  std::deque<std::size_t> queue{vertex_of(root_)};
  report_.bipartite = true;
  while (!queue.empty()) {
    const std::size_t v = queue.front();
    queue.pop_front();
    for (Dart d : vertex_orbits_[v]) {
      const std::size_t w = vertex_of(alpha_[d]);
      if (vc[w] == -1) {
        vc[w] = 1 - vc[v];
        queue.push_back(w);
      } else if (vc[w] == vc[v]) {
        report_.bipartite = false;
      }
    }
  }
  if (!report_.bipartite) return;
  report_.root_black = vc[vertex_of(root_)] == 0;

  // Face 3-coloring: around a white vertex colors rise counterclockwise,
  // around a black one they fall.
  std::vector<int> fc(face_count(), 0);
  fc[face_of(root_)] = 3;
  std::deque<std::size_t> fq{face_of(root_)};
  bool consistent = true;
  auto wrap = [](int c) { return (c + 2) % 3 + 1; };
  auto impose = [&](std::size_t f, int c) {
    if (fc[f] == 0) {
      fc[f] = c;
      fq.push_back(f);
    } else if (fc[f] != c) {
      consistent = false;
    }
  };
  while (!fq.empty() && consistent) {
    const std::size_t f = fq.front();
    fq.pop_front();
    for (Dart d : face_orbits_[f]) {
      const int step = vc[vertex_of(d)] == 1 ? 1 : -1;
      impose(face_of(sigma_[d]), wrap(fc[f] + step));
      impose(face_of(sigma_inv_[d]), wrap(fc[f] - step));
    }
  }
  report_.face_colored = consistent && report_.cubic;
  report_.root_face_3 = consistent && fc[face_of(root_)] == 3;

  vertex_colors_.clear();
  for (int c : vc) vertex_colors_.push_back(c == 0 ? VertexColor::black : VertexColor::white);
  if (report_.face_colored) face_colors_ = std::move(fc);
}

std::optional<VertexColor> RotationMap::vertex_color(std::size_t v) const {
  if (!valid()) return std::nullopt;
  return vertex_colors_.at(v);
}

std::optional<int> RotationMap::face_color(std::size_t f) const {
  if (!valid()) return std::nullopt;
  return face_colors_.at(f);
}

RotationMap RotationMap::canonical() const {
  if (!report_.permutations) return *this;
  const std::size_t n = sigma_.size();
  std::vector<Dart> id(n, kNone);
  std::vector<Dart> order;
  auto open = [&](Dart e) {
    Dart d = e;
    do {
      id[d] = order.size();
      order.push_back(d);
      d = sigma_[d];
    } while (d != e);
  };
  open(root_);
  for (std::size_t i = 0; i < order.size(); ++i) {
    const Dart a = alpha_[order[i]];
    if (id[a] == kNone) open(a);
  }
  std::vector<Dart> sigma(order.size());
  std::vector<Dart> alpha(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    sigma[i] = id[sigma_[order[i]]];
    alpha[i] = id[alpha_[order[i]]];
  }
  return raw(std::move(sigma), std::move(alpha), 0);
}

bool operator==(const RotationMap& x, const RotationMap& y) {
  if (x.dart_count() != y.dart_count()) return false;
  const RotationMap cx = x.canonical();
  const RotationMap cy = y.canonical();
  return cx.sigma_ == cy.sigma_ && cx.alpha_ == cy.alpha_;
}

std::string RotationMap::to_text() const {
  std::ostringstream out;
  out << "map vertices " << vertex_count() << " edges " << edge_count() << " faces "
      << face_count() << " root " << root_ << '\n';
  for (std::size_t v = 0; v < vertex_count(); ++v) {
    out << "v " << v;
    if (valid()) out << (vertex_colors_[v] == VertexColor::black ? " black" : " white");
    for (Dart d : vertex_orbits_[v]) out << ' ' << d << ':' << alpha_[d];
    out << '\n';
  }
  for (std::size_t f = 0; f < face_count(); ++f) {
    out << "f " << f;
    if (valid()) out << " color " << face_colors_[f];
    for (Dart d : face_orbits_[f]) out << ' ' << d;
    out << '\n';
  }
  return out.str();
}

std::vector<VertexColor> two_color_vertices(const RotationMap& m) {
  const auto& r = m.report();
  if (!(r.permutations && r.involution && r.connected && r.bipartite)) {
    throw invalid_map("vertices admit no 2-coloring");
  }
  std::vector<int> c(m.vertex_count(), -1);
  c[m.vertex_of(m.root())] = 0;
  std::deque<std::size_t> q{m.vertex_of(m.root())};
  while (!q.empty()) {
    const std::size_t v = q.front();
    q.pop_front();
    for (Dart d : m.vertex_darts(v)) {
      const std::size_t w = m.vertex_of(m.alpha(d));
      if (c[w] == -1) {
        c[w] = 1 - c[v];
        q.push_back(w);
      }
    }
  }
  std::vector<VertexColor> out;
  for (int x : c) out.push_back(x == 0 ? VertexColor::black : VertexColor::white);
  return out;
}

std::vector<int> three_color_faces(const RotationMap& m) {
  if (!m.valid()) throw invalid_map("faces admit no coloring under the root conventions");
  std::vector<int> out;
  for (std::size_t f = 0; f < m.face_count(); ++f) out.push_back(*m.face_color(f));
  return out;
}

RotationMap base_map() {
  // Black vertex darts 0,1,2; white vertex darts 3,4,5. Edges 0-3, 1-5, 2-4.
  return RotationMap::cubic({3, 5, 4, 0, 2, 1}, 0);
}

std::size_t f1r3(const RotationMap& m) {
  if (!m.valid()) throw invalid_map("f1r3 needs a valid map");
  std::set<std::size_t> faces;
  for (Dart d : root_face_orbit(m)) {
    const std::size_t f = m.face_of(m.alpha(d));
    if (color_of(m, f) == 1) faces.insert(f);
  }
  return faces.size();
}

std::size_t s1r3(const RotationMap& m) {
  if (!m.valid()) throw invalid_map("s1r3 needs a valid map");
  const std::size_t s1 = s1_face(m);
  std::size_t count = 0;
  for (Dart d : root_face_orbit(m)) count += m.face_of(m.alpha(d)) == s1 ? 1 : 0;
  return count;
}

RotationMap apply_op1(const RotationMap& m) {
  std::vector<Dart> alpha = triple_alpha(m);
  const Dart rho = 0;
  const Dart back = alpha[rho];
  // white a: up, low, upper-right; black b: up, upper-right, low
  const Dart a = alpha.size();
  const Dart b = a + 3;
  alpha.resize(a + 6);
  const Dart a_up = a, a_low = a + 1, a_upr = a + 2;
  const Dart b_up = b, b_upr = b + 1, b_low = b + 2;
  pair(alpha, rho, a_up);
  pair(alpha, back, b_up);
  pair(alpha, a_upr, b_upr);
  pair(alpha, a_low, b_low);
  return compact(alpha, rho);
}

RotationMap apply_op2(const RotationMap& m, std::size_t i) {
  const RotationMap c = m.canonical();
  if (!c.valid()) throw invalid_map("map fails its invariants: " + c.report().failures().front());
  const std::size_t k = f1r3(c);
  if (i < 1 || i > k) {
    throw invalid_argument("op2 index " + std::to_string(i) + " outside 1.." + std::to_string(k));
  }
  // Walk the root face clockwise from the root vertex; darts leaving white
  // vertices have a 1-colored face on their left.
  const Dart rho = c.root();
  std::vector<std::size_t> seen;
  Dart e = kNone;
  for (Dart d = c.phi_inv(rho); d != rho; d = c.phi_inv(d)) {
    const std::size_t f = c.face_of(c.alpha(d));
    if (color_of(c, f) != 1) continue;
    if (std::find(seen.begin(), seen.end(), f) != seen.end()) continue;
    seen.push_back(f);
    if (seen.size() == i) {
      e = d;
      break;
    }
  }
  if (e == kNone) throw internal_error("op2 found no edge for index " + std::to_string(i));

  std::vector<Dart> alpha = triple_alpha(c);
  const Dart back = alpha[rho];
  const Dart e_back = alpha[e];
  // black A: toward B, toward e's white end, toward the old root head
  // white B: toward A, toward the root vertex, toward e's black end
  const Dart A = alpha.size();
  const Dart B = A + 3;
  alpha.resize(A + 6);
  const Dart A_B = A, A_P1 = A + 1, A_P7 = A + 2;
  const Dart B_A = B, B_P6 = B + 1, B_P2 = B + 2;
  pair(alpha, rho, B_P6);
  pair(alpha, back, A_P7);
  pair(alpha, e, A_P1);
  pair(alpha, e_back, B_P2);
  pair(alpha, A_B, B_A);
  return compact(alpha, rho);
}

RotationMap apply_op3(const std::vector<RotationMap>& ms) {
  if (ms.size() < 2) throw invalid_argument("op3 needs at least two maps");
  std::vector<Dart> alpha;
  std::vector<Dart> cut;  // e_i, the dart after the root on each root face
  Dart root = 0;
  for (const RotationMap& m : ms) {
    const RotationMap c = m.canonical();
    if (!c.valid()) throw invalid_map("op3 operand fails its invariants");
    if (s1r3(c) != 1) throw invalid_argument("op3 operand is reducible");
    const Dart offset = alpha.size();
    for (Dart d = 0; d < c.dart_count(); ++d) alpha.push_back(c.alpha(d) + offset);
    cut.push_back(c.phi(c.root()) + offset);
    root = c.root() + offset;
  }
  std::vector<Dart> backs;
  for (Dart e : cut) backs.push_back(alpha[e]);
  const std::size_t k = cut.size();
  for (std::size_t i = 0; i < k; ++i) pair(alpha, cut[i], backs[(i + 1) % k]);
  return compact(alpha, root);
}

RotationMap tree_to_map(const LabeledTree& t) {
  if (t.root_mode() != RootMode::sum_plus_one) {
    throw invalid_argument("tree_to_map needs a sum-plus-one tree");
  }
  if (t.size() < 2) throw invalid_argument("tree_to_map needs at least two vertices");
  if (!validate(t, 0, 1)) throw invalid_argument("tree_to_map needs a beta(0,1)-tree");
  if (t.size() == 2) return base_map();
  if (!t.irreducible()) {
    std::vector<RotationMap> parts;
    for (const LabeledTree& u : decompose(t)) parts.push_back(tree_to_map(u));
    return apply_op3(parts);
  }
  // t = lambda_i(u) where u is the subtree under the root's only child.
  const Shape& s = t.shape();
  const std::size_t c = s.children(0).front();
  const int i = t.label(c).value();
  LabelTuple labels(t.labels().begin() + static_cast<long>(c),
                    t.labels().begin() + static_cast<long>(s.subtree_end(c)));
  int sum = 0;
  for (std::size_t g : s.children(c)) sum += t.label(g).value();
  labels[0] = sum + 1;
  const LabeledTree u(s.subtree(c), std::move(labels), RootMode::sum_plus_one);
  const RotationMap mu = tree_to_map(u);
  if (i == u.root()) return apply_op1(mu);
  return apply_op2(mu, static_cast<std::size_t>(i) + 1);
}

namespace {

LabeledTree two_vertex_tree() {
  return LabeledTree(Shape({{1}, {}}), {1, 0}, RootMode::sum_plus_one);
}

}  // namespace

LabeledTree map_to_tree(const RotationMap& m) {
  const RotationMap c = m.canonical();
  if (!c.valid()) throw invalid_map("map fails its invariants: " + c.report().failures().front());
  if (c.vertex_count() == 2) return two_vertex_tree();

  const Dart rho = c.root();
  std::vector<Dart> alpha = triple_alpha(c);
  const std::size_t s1 = s1_face(c);
  const std::size_t k = s1r3(c);

  if (k > 1) {
    // The root-face darts bordering S1 are the glued edges, in the order
    // e_k, e_1, ..., e_{k-1}. Each e_i goes back to the partner its
    // predecessor holds.
    std::vector<Dart> d;
    for (Dart x : root_face_orbit(c)) {
      if (c.face_of(c.alpha(x)) == s1) d.push_back(x);
    }
    std::vector<Dart> partner(k);
    for (std::size_t j = 0; j < k; ++j) partner[j] = alpha[d[(j + k - 1) % k]];
    for (std::size_t j = 0; j < k; ++j) pair(alpha, d[j], partner[j]);
    LabeledTree acc = trivial_tree();
    for (std::size_t j = 1; j <= k; ++j) {
      const Dart e = d[j % k];
      const Dart r = alpha[c.sigma_inv(e)];
      const LabeledTree part = map_to_tree(compact(alpha, r));
      acc = j == 1 ? part : oplus(acc, part);
    }
    return acc;
  }

  const Dart back = alpha[rho];
  const std::size_t len = c.face_darts(s1).size();
  if (len == 2) {
    // undo op1: rho enters white a; the digon leads to black b
    const Dart a_low = c.sigma(back);
    const Dart b_low = alpha[a_low];
    const Dart b_up = c.sigma(b_low);
    pair(alpha, rho, alpha[b_up]);
    const LabeledTree u = map_to_tree(compact(alpha, rho));
    return lambda_i(u, u.root());
  }

  // undo op2
  const std::size_t i = f1r3(c);
  const Dart B_P6 = back;
  const Dart B_P2 = c.sigma(B_P6);
  const Dart B_A = c.sigma(B_P2);
  const Dart A_B = alpha[B_A];
  const Dart A_P1 = c.sigma(A_B);
  const Dart A_P7 = c.sigma(A_P1);
  const Dart old_back = alpha[A_P7];
  const Dart e = alpha[A_P1];
  const Dart e_back = alpha[B_P2];
  pair(alpha, rho, old_back);
  pair(alpha, e, e_back);
  const LabeledTree u = map_to_tree(compact(alpha, rho));
  return lambda_i(u, static_cast<int>(i) - 1);
}

}  // namespace cubicgray
