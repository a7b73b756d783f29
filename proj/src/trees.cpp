#include "cubicgray/trees.hpp"

#include <cctype>

#include "cubicgray/errors.hpp"

namespace cubicgray {

int Label::value() const {
  if (star_) throw invalid_argument("the root sentinel * has no integer value");
  return value_;
}

std::string format_labels(const LabelTuple& labels) {
  std::string out = "(";
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (i > 0) out += ',';
    out += labels[i].to_string();
  }
  out += ')';
  return out;
}

std::string_view to_string(RootMode mode) {
  switch (mode) {
    case RootMode::star: return "star";
    case RootMode::sum: return "sum";
    case RootMode::sum_plus_one: return "sum-plus-one";
    case RootMode::internal: return "internal";
  }
  return "?";
}

RootMode parse_root_mode(std::string_view text) {
  for (RootMode m : {RootMode::star, RootMode::sum, RootMode::sum_plus_one, RootMode::internal}) {
    if (text == to_string(m)) return m;
  }
  throw invalid_argument("unknown root mode '" + std::string(text) + "'");
}

LabeledTree::LabeledTree(Shape shape, LabelTuple labels, RootMode mode)
    : shape_(std::move(shape)), labels_(std::move(labels)), mode_(mode) {
  if (labels_.size() != shape_.size()) {
    throw malformed_tree("tree has " + std::to_string(shape_.size()) + " vertices but " +
                         std::to_string(labels_.size()) + " labels");
  }
  for (std::size_t v = 0; v < labels_.size(); ++v) {
    const bool want_star = v == 0 && mode_ == RootMode::star;
    if (labels_[v].is_star() != want_star) {
      throw malformed_tree(want_star ? "star-mode root must be labeled *"
                                     : "vertex " + std::to_string(v) + " cannot be labeled *");
    }
  }
}

namespace {

long child_sum(const LabeledTree& t, std::size_t v) {
  long sum = 0;
  for (std::size_t c : t.shape().children(v)) sum += t.label(c).value();
  return sum;
}

ValidityReport fail(std::size_t v, std::string rule) { return {false, v, std::move(rule)}; }

}  // namespace

ValidityReport validate(const LabeledTree& t, int a, int b) {
  if (a < 0 || b < 0) throw invalid_argument("beta(a,b) parameters must be non-negative");
  const Shape& s = t.shape();

  // Children before parents so that a bad child is reported first.
  for (std::size_t v = s.size(); v-- > 1;) {
    const int label = t.label(v).value();
    if (s.is_leaf(v)) {
      if (label != a) return fail(v, "leaf label must be " + std::to_string(a));
    } else if (label < a || label > b + child_sum(t, v)) {
      return fail(v, "internal label must lie in [" + std::to_string(a) + ", " +
                         std::to_string(b + child_sum(t, v)) + "]");
    }
  }

  switch (t.root_mode()) {
    case RootMode::star:
      break;
    case RootMode::sum:
      if (t.root() != child_sum(t, 0)) return fail(0, "root label must equal the children's sum");
      break;
    case RootMode::sum_plus_one: {
      const long want = t.trivial() ? 0 : child_sum(t, 0) + 1;
      if (t.root() != want) return fail(0, "root label must be " + std::to_string(want));
      break;
    }
    case RootMode::internal: {
      const int root = t.root();
      if (t.trivial()) {
        if (root != a) return fail(0, "leaf label must be " + std::to_string(a));
      } else if (root < a || root > b + child_sum(t, 0)) {
        return fail(0, "internal label must lie in [" + std::to_string(a) + ", " +
                           std::to_string(b + child_sum(t, 0)) + "]");
      }
      break;
    }
  }
  return {};
}

LabelTuple labels_preorder(const LabeledTree& t) { return t.labels(); }

LabeledTree with_root_mode(const LabeledTree& t, RootMode mode) {
  if (mode == t.root_mode()) return t;
  if (mode == RootMode::internal) {
    throw invalid_argument("the internal-mode root label is not determined by the children");
  }
  LabelTuple labels = t.labels();
  switch (mode) {
    case RootMode::star: labels[0] = Label::star(); break;
    case RootMode::sum: labels[0] = static_cast<int>(child_sum(t, 0)); break;
    case RootMode::sum_plus_one:
      labels[0] = t.trivial() ? 0 : static_cast<int>(child_sum(t, 0) + 1);
      break;
    case RootMode::internal: break;
  }
  return LabeledTree(t.shape(), std::move(labels), mode);
}

TreeCode::TreeCode(PrefixWord shape_bits, LabelTuple labels)
    : shape_bits_(std::move(shape_bits)), labels_(std::move(labels)) {
  if (labels_.empty()) throw malformed_tree("tree code needs at least one label");
  if (!shape_bits_.is_dyck() || shape_bits_.size() != 2 * (labels_.size() - 1)) {
    throw malformed_tree("shape part of a code on " + std::to_string(labels_.size()) +
                         " vertices must be a Dyck word of length " +
                         std::to_string(2 * (labels_.size() - 1)));
  }
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (labels_[i].is_star() != (i == 0)) {
      throw malformed_tree("tree code must carry * exactly at the root position");
    }
    if (i > 0 && labels_[i].value() < 0) throw malformed_tree("labels must be non-negative");
  }
}

TreeCode TreeCode::parse(std::string_view text) {
  std::vector<std::string> symbols;
  std::string current;
  for (char c : text) {
    if (c == '(' || c == ')' || std::isspace(static_cast<unsigned char>(c))) continue;
    if (c == ',') {
      symbols.push_back(current);
      current.clear();
    } else {
      current += c;
    }
  }
  if (!current.empty()) symbols.push_back(current);
  if (symbols.empty() || (symbols.size() + 2) % 3 != 0) {
    throw malformed_tree("code length must be 3n-2, got " + std::to_string(symbols.size()));
  }
  const std::size_t n = (symbols.size() + 2) / 3;
  std::vector<int> bits;
  LabelTuple labels;
  for (std::size_t i = 0; i < symbols.size(); ++i) {
    const std::string& sym = symbols[i];
    if (i < 2 * n - 2) {
      if (sym != "0" && sym != "1") throw malformed_tree("shape symbol must be 0 or 1: " + sym);
      bits.push_back(sym[0] - '0');
    } else if (sym == "*") {
      labels.push_back(Label::star());
    } else {
      if (sym.empty() || sym.find_first_not_of("0123456789") != std::string::npos) {
        throw malformed_tree("bad label symbol '" + sym + "'");
      }
      labels.push_back(std::stoi(sym));
    }
  }
  PrefixWord word;
  try {
    word = PrefixWord::from_bits(bits);
  } catch (const invalid_word& e) {
    throw malformed_tree(e.what());
  }
  return TreeCode(std::move(word), std::move(labels));
}

std::string TreeCode::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < shape_bits_.size(); ++i) {
    out += shape_bits_[i] != 0 ? '1' : '0';
    out += ',';
  }
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (i > 0) out += ',';
    out += labels_[i].to_string();
  }
  out += ')';
  return out;
}

std::strong_ordering operator<=>(const TreeCode& x, const TreeCode& y) {
  if (auto c = x.shape_bits_ <=> y.shape_bits_; c != 0) return c;
  return x.labels_ <=> y.labels_;
}

TreeCode encode(const LabeledTree& t) {
  if (t.root_mode() == RootMode::internal) {
    throw invalid_argument("internal-mode trees have no star-rooted code");
  }
  const LabeledTree star = with_root_mode(t, RootMode::star);
  return TreeCode(word_from_shape(star.shape()), star.labels());
}

LabeledTree decode(const TreeCode& c, int a, int b) {
  LabeledTree t(shape_from_word(c.shape_bits()), c.labels(), RootMode::star);
  if (auto report = validate(t, a, b); !report) {
    throw malformed_tree("code " + c.to_string() + " violates beta(" + std::to_string(a) + "," +
                         std::to_string(b) + ") at vertex " + std::to_string(*report.vertex) +
                         ": " + report.rule);
  }
  return t;
}

namespace {

void require_sum_plus_one(const LabeledTree& t, const char* op) {
  if (t.root_mode() != RootMode::sum_plus_one) {
    throw invalid_argument(std::string(op) + " needs a sum-plus-one tree");
  }
}

// Appends the subtree of `src` rooted at v to (children, labels), hanging it
// under `parent`.
void graft(const LabeledTree& src, std::size_t v, std::size_t parent,
           std::vector<std::vector<std::size_t>>& children, LabelTuple& labels) {
  const std::size_t offset = children.size();
  children[parent].push_back(offset);
  for (std::size_t u = v; u < src.shape().subtree_end(v); ++u) {
    std::vector<std::size_t> row;
    for (std::size_t c : src.shape().children(u)) row.push_back(c - v + offset);
    children.push_back(std::move(row));
    labels.push_back(src.label(u));
  }
}

}  // namespace

LabeledTree oplus(const LabeledTree& u, const LabeledTree& v) {
  require_sum_plus_one(u, "oplus");
  require_sum_plus_one(v, "oplus");
  if (u.trivial() || v.trivial()) throw invalid_argument("oplus needs nontrivial trees");
  std::vector<std::vector<std::size_t>> children(1);
  LabelTuple labels{u.root() + v.root() - 1};
  for (const LabeledTree* t : {&u, &v}) {
    for (std::size_t c : t->shape().children(0)) graft(*t, c, 0, children, labels);
  }
  return LabeledTree(Shape(std::move(children)), std::move(labels), RootMode::sum_plus_one);
}

LabeledTree lambda_i(const LabeledTree& t, int i) {
  require_sum_plus_one(t, "lambda");
  if (i < 0 || i > t.root()) {
    throw invalid_argument("lambda_i needs 0 <= i <= root(T) = " + std::to_string(t.root()) +
                           ", got i=" + std::to_string(i));
  }
  std::vector<std::vector<std::size_t>> children(1);
  LabelTuple labels{i + 1};
  graft(t, 0, 0, children, labels);
  labels[1] = i;
  return LabeledTree(Shape(std::move(children)), std::move(labels), RootMode::sum_plus_one);
}

std::vector<LabeledTree> decompose(const LabeledTree& t) {
  require_sum_plus_one(t, "decompose");
  if (t.trivial()) throw invalid_argument("the trivial tree has no irreducible summands");
  std::vector<LabeledTree> parts;
  for (std::size_t c : t.shape().children(0)) {
    std::vector<std::vector<std::size_t>> children(1);
    LabelTuple labels{t.label(c).value() + 1};
    graft(t, c, 0, children, labels);
    parts.emplace_back(Shape(std::move(children)), std::move(labels), RootMode::sum_plus_one);
  }
  return parts;
}

LabeledTree trivial_tree() { return LabeledTree(Shape(), {0}, RootMode::sum_plus_one); }

}  // namespace cubicgray
