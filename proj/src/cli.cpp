#include "cubicgray/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <json.hpp>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>

#include "cubicgray/dyck.hpp"
#include "cubicgray/fullgray.hpp"
#include "cubicgray/maps.hpp"
#include "cubicgray/verify.hpp"

namespace cubicgray {
namespace {

using json = nlohmann::ordered_json;

struct Common {
  std::string format = "text";
  long limit = -1;
  bool count_only = false;
  std::string output;
};

// Applies --limit and --count-only to a stream of records.
class Emitter {
 public:
  Emitter(const Common& c, std::ostream& out) : c_(c), out_(out) {}

  bool full() const { return c_.limit >= 0 && count_ >= static_cast<std::size_t>(c_.limit); }
  bool as_json() const { return c_.format == "json"; }

  void text(const std::string& line) {
    if (!c_.count_only) out_ << line << '\n';
    ++count_;
  }
  void record(const json& j) { text(j.dump()); }

  void finish() {
    if (!c_.count_only) return;
    if (as_json()) {
      out_ << json{{"count", count_}}.dump() << '\n';
    } else {
      out_ << "count: " << count_ << '\n';
    }
  }

 private:
  const Common& c_;
  std::ostream& out_;
  std::size_t count_ = 0;
};

json bits_json(const PrefixWord& w) { return w.bits(); }

json labels_json(const LabelTuple& labels) {
  json out = json::array();
  for (Label l : labels) out.push_back(l.wire());
  return out;
}

json map_json(const RotationMap& m) {
  std::vector<Dart> sigma;
  std::vector<Dart> alpha;
  for (Dart d = 0; d < m.dart_count(); ++d) {
    sigma.push_back(m.sigma(d));
    alpha.push_back(m.alpha(d));
  }
  json vertices = json::array();
  for (std::size_t v = 0; v < m.vertex_count(); ++v) {
    vertices.push_back({{"color", *m.vertex_color(v) == VertexColor::black ? "black" : "white"},
                        {"darts", m.vertex_darts(v)}});
  }
  json faces = json::array();
  for (std::size_t f = 0; f < m.face_count(); ++f) {
    faces.push_back({{"color", *m.face_color(f)}, {"darts", m.face_darts(f)}});
  }
  return {{"root", m.root()}, {"sigma", sigma}, {"alpha", alpha},
          {"vertices", vertices}, {"faces", faces}};
}

// "key: value" lines to a flat JSON object, keeping the order.
json report_json(const std::string& text) {
  json out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    const auto colon = line.find(": ");
    if (colon == std::string::npos) continue;
    const std::string key = line.substr(0, colon);
    const std::string value = line.substr(colon + 2);
    if (value == "true" || value == "false") {
      out[key] = value == "true";
    } else if (!value.empty() && value.find_first_not_of("0123456789") == std::string::npos &&
               value.size() < 19) {
      out[key] = std::stoll(value);
    } else {
      out[key] = value;
    }
  }
  return out;
}

void print_report(const Common& c, std::ostream& out, const std::string& text) {
  if (c.format == "json") {
    out << report_json(text).dump() << '\n';
  } else {
    out << text;
  }
}

LabeledTree as_tree(const TreeCode& code) {
  return with_root_mode(decode(code, 0, 1), RootMode::sum_plus_one);
}

int cmd_dyck(long m, long k, const Common& c, std::ostream& out) {
  DyckGrayStream s(m, k);
  Emitter e(c, out);
  std::size_t index = 0;
  while (!e.full()) {
    const PrefixWord* w = s.next();
    if (w == nullptr) break;
    if (e.as_json()) {
      e.record({{"index", index}, {"shape_bits", bits_json(*w)}});
    } else {
      e.text(format_word(*w));
    }
    ++index;
  }
  e.finish();
  return 0;
}

int cmd_trees(long n, int a, int b, const Common& c, std::ostream& out) {
  FullListStream s(n, a, b);
  Emitter e(c, out);
  while (!e.full()) {
    const auto entry = s.next();
    if (!entry) break;
    if (e.as_json()) {
      e.record({{"index", entry->index},
                {"shape_bits", bits_json(entry->code.shape_bits())},
                {"labels", labels_json(entry->code.labels())},
                {"block_id", entry->block_id}});
    } else {
      e.text(entry->code.to_string());
    }
  }
  e.finish();
  return 0;
}

int cmd_maps(long n, MapClass cls, const Common& c, std::ostream& out) {
  const ClassParams p = class_params(cls);
  const auto vertices = map_vertex_count(cls, static_cast<std::size_t>(n));
  const bool with_maps = cls == MapClass::bicubic && n >= 2;
  FullListStream s(n, p.a, p.b);
  Emitter e(c, out);
  while (!e.full()) {
    const auto entry = s.next();
    if (!entry) break;
    std::optional<RotationMap> m;
    if (with_maps && !c.count_only) m = tree_to_map(as_tree(entry->code));
    if (e.as_json()) {
      json j{{"index", entry->index},
             {"shape_bits", bits_json(entry->code.shape_bits())},
             {"labels", labels_json(entry->code.labels())},
             {"block_id", entry->block_id}};
      if (vertices) j["map_vertices"] = *vertices;
      if (m) j["map"] = map_json(*m);
      e.record(j);
    } else {
      std::string text = entry->code.to_string();
      if (m) {
        std::istringstream lines(m->to_text());
        std::string line;
        while (std::getline(lines, line)) text += "\n  " + line;
      }
      e.text(text);
    }
  }
  e.finish();
  return 0;
}

int cmd_verify_trees(long n, int a, int b, int bound, bool cyclic, EnumerationLimits limits,
                     const Common& c, std::ostream& out) {
  const auto oracle = enumerate_trees(n, a, b, RootMode::star, limits);
  std::vector<TreeCode> list;
  FullListStream s(n, a, b);
  while (auto entry = s.next()) list.push_back(std::move(entry->code));
  const GrayReport r = check_gray(list, bound, cyclic, oracle);
  print_report(c, out, "gray.n: " + std::to_string(n) + "\ngray.a: " + std::to_string(a) +
                           "\ngray.b: " + std::to_string(b) + "\n" + r.to_text());
  return r.pass() ? 0 : 1;
}

int cmd_verify_maps(long n, const Common& c, std::ostream& out) {
  if (n < 2) throw invalid_argument("maps need trees with at least two vertices");
  std::size_t count = 0;
  std::size_t invalid = 0;
  std::size_t round_trip = 0;
  std::set<std::vector<Dart>> distinct;
  std::optional<std::string> first_failure;
  FullListStream s(n, 0, 1);
  while (auto entry = s.next()) {
    ++count;
    const LabeledTree t = as_tree(entry->code);
    const RotationMap m = tree_to_map(t);
    const MapCheck check = check_map(m);
    bool ok = true;
    if (!check.pass()) {
      ++invalid;
      ok = false;
    } else if (!(map_to_tree(m) == t)) {
      ++round_trip;
      ok = false;
    }
    if (!ok && !first_failure) first_failure = entry->code.to_string();
    const RotationMap canon = m.canonical();
    std::vector<Dart> key;
    for (Dart d = 0; d < canon.dart_count(); ++d) key.push_back(canon.alpha(d));
    distinct.insert(std::move(key));
  }
  const BigInt expected = count_bicubic(n - 1);
  const bool pass = invalid == 0 && round_trip == 0 && distinct.size() == count &&
                    BigInt(count) == expected;
  std::ostringstream text;
  text << "maps.n: " << n << '\n'
       << "maps.map_vertices: " << 2 * (n - 1) << '\n'
       << "maps.count: " << count << '\n'
       << "maps.expected: " << expected << '\n'
       << "maps.distinct: " << distinct.size() << '\n'
       << "maps.invalid: " << invalid << '\n'
       << "maps.round_trip_failures: " << round_trip << '\n'
       << "maps.first_failure: " << first_failure.value_or("none") << '\n'
       << "maps.result: " << (pass ? "pass" : "fail") << '\n';
  print_report(c, out, text.str());
  return pass ? 0 : 1;
}

int cmd_count(long n, MapClass cls, EnumerationLimits limits, const Common& c, std::ostream& out) {
  const ClassParams p = class_params(cls);
  std::optional<BigInt> formula;
  if (n >= 2 && cls == MapClass::bicubic) formula = count_bicubic(n - 1);
  if (n >= 2 && cls == MapClass::cubic_nonseparable) formula = count_cubic_nonseparable(n - 1);
  const BigInt oracle = enumerate_trees(n, p.a, p.b, RootMode::star, limits).size();
  const auto vertices = map_vertex_count(cls, static_cast<std::size_t>(n));
  const bool pass = !formula || *formula == oracle;
  std::ostringstream text;
  text << "count.class: " << to_string(cls) << '\n'
       << "count.n: " << n << '\n'
       << "count.map_vertices: " << (vertices ? std::to_string(*vertices) : "unknown") << '\n'
       << "count.formula: " << (formula ? formula->str() : "none") << '\n'
       << "count.oracle: " << oracle << '\n'
       << "count.result: " << (pass ? "pass" : "fail") << '\n';
  print_report(c, out, text.str());
  return pass ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Gray codes for description trees and bicubic maps", "cubicgray"};
  app.require_subcommand(1);

  Common common;
  auto add_common = [&common](CLI::App* sub) {
    sub->add_option("--format", common.format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--limit", common.limit, "emit at most this many records")
        ->check(CLI::NonNegativeNumber);
    sub->add_flag("--count-only", common.count_only, "print only the number of records");
    sub->add_option("-o,--output", common.output, "write to this file instead of stdout");
  };

  long m = 0;
  long k = 0;
  long n = 0;
  int a = 0;
  int b = 1;
  int bound = 3;
  bool cyclic = false;
  std::string cls_name = "bicubic";
  EnumerationLimits limits;

  auto* dyck = app.add_subcommand("dyck", "list D(m,k) words");
  dyck->add_option("m", m, "number of 1s")->required()->check(CLI::NonNegativeNumber);
  dyck->add_option("k", k, "number of 0s")->required()->check(CLI::NonNegativeNumber);
  add_common(dyck);

  auto* trees = app.add_subcommand("trees", "list beta(a,b)-trees in Gray order");
  trees->add_option("n", n, "vertices")->required()->check(CLI::PositiveNumber);
  trees->add_option("--a", a, "leaf label")->check(CLI::NonNegativeNumber);
  trees->add_option("--b", b, "label slack")->check(CLI::NonNegativeNumber);
  trees->add_flag("--cyclic", cyclic, "the listing is cyclic; accepted for symmetry with verify");
  add_common(trees);

  auto add_class = [&cls_name](CLI::App* sub) {
    sub->add_option("--class", cls_name, "bicubic, cubic-3-connected or cubic-nonseparable")
        ->check(CLI::IsMember({"bicubic", "cubic-3-connected", "cubic-nonseparable"}));
  };
  auto add_limits = [&limits](CLI::App* sub) {
    sub->add_option("--jobs", limits.jobs, "oracle worker threads")->check(CLI::PositiveNumber);
    sub->add_option("--max-n", limits.max_n, "largest n the oracle will enumerate")
        ->check(CLI::PositiveNumber);
  };

  auto* maps = app.add_subcommand("maps", "list codes of a map class; bicubic adds maps");
  maps->add_option("n", n, "tree vertices")->required()->check(CLI::PositiveNumber);
  add_class(maps);
  add_common(maps);

  auto* verify = app.add_subcommand("verify", "check generated lists against the oracle");
  verify->require_subcommand(1);
  auto* verify_trees = verify->add_subcommand("trees", "Gray list against exhaustive enumeration");
  verify_trees->add_option("n", n, "vertices")->required()->check(CLI::PositiveNumber);
  verify_trees->add_option("--a", a, "leaf label")->check(CLI::NonNegativeNumber);
  verify_trees->add_option("--b", b, "label slack")->check(CLI::NonNegativeNumber);
  verify_trees->add_option("--bound", bound, "largest allowed distance")
      ->check(CLI::NonNegativeNumber);
  verify_trees->add_flag("--cyclic", cyclic, "also check the last/first pair");
  add_limits(verify_trees);
  add_common(verify_trees);
  auto* verify_maps = verify->add_subcommand("maps", "psi images: invariants, round trip, count");
  verify_maps->add_option("n", n, "tree vertices")->required()->check(CLI::PositiveNumber);
  add_common(verify_maps);

  auto* count = app.add_subcommand("count", "formula and oracle counts side by side");
  count->add_option("n", n, "tree vertices")->required()->check(CLI::PositiveNumber);
  add_class(count);
  add_limits(count);
  add_common(count);

  std::vector<const char*> argv{"cubicgray"};
  for (const auto& s : args) argv.push_back(s.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  std::ofstream file;
  if (!common.output.empty()) {
    file.open(common.output);
    if (!file) {
      err << "error: cannot write " << common.output << '\n';
      return 2;
    }
  }
  std::ostream& sink = common.output.empty() ? out : file;

  try {
    if (*dyck) return cmd_dyck(m, k, common, sink);
    if (*trees) return cmd_trees(n, a, b, common, sink);
    if (*maps) return cmd_maps(n, parse_map_class(cls_name), common, sink);
    if (*verify_trees) return cmd_verify_trees(n, a, b, bound, cyclic, limits, common, sink);
    if (*verify_maps) return cmd_verify_maps(n, common, sink);
    if (*count) return cmd_count(n, parse_map_class(cls_name), limits, common, sink);
  } catch (const internal_error& e) {
    err << "internal error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}

}  // namespace cubicgray
