#include "quivergp/quiver.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "json.hpp"

namespace qgp {

Quiver Quiver::make(std::vector<std::string> vertices,
                    std::vector<std::array<std::string, 3>> arrows) {
  std::vector<std::string> violations;
  std::sort(vertices.begin(), vertices.end());
  for (std::size_t i = 1; i < vertices.size(); ++i) {
    if (vertices[i] == vertices[i - 1]) {
      violations.push_back("duplicate vertex label '" + vertices[i] + "'");
    }
  }
  std::sort(arrows.begin(), arrows.end(),
            [](const auto& a, const auto& b) { return a[0] < b[0]; });
  for (std::size_t i = 1; i < arrows.size(); ++i) {
    if (arrows[i][0] == arrows[i - 1][0]) {
      violations.push_back("duplicate arrow name '" + arrows[i][0] + "'");
    }
  }

  Quiver q;
  q.vertices_ = std::move(vertices);
  for (int v = 0; v < q.vertex_count(); ++v) q.vertex_index_[q.vertices_[v]] = v;
  q.out_.resize(q.vertices_.size());
  q.in_.resize(q.vertices_.size());
  for (const auto& [name, from, to] : arrows) {
    auto fit = q.vertex_index_.find(from);
    auto tit = q.vertex_index_.find(to);
    if (fit == q.vertex_index_.end()) {
      violations.push_back("arrow '" + name + "' has undeclared source '" + from + "'");
      continue;
    }
    if (tit == q.vertex_index_.end()) {
      violations.push_back("arrow '" + name + "' has undeclared target '" + to + "'");
      continue;
    }
    const int id = static_cast<int>(q.arrows_.size());
    q.arrows_.push_back(Arrow{name, fit->second, tit->second});
    q.arrow_index_[name] = id;
    q.out_[fit->second].push_back(id);
    q.in_[tit->second].push_back(id);
  }
  if (!violations.empty()) {
    throw ValidationError("invalid quiver: " + violations.front(), violations);
  }
  return q;
}

int Quiver::vertex_index(const std::string& label) const {
  auto it = vertex_index_.find(label);
  if (it == vertex_index_.end()) {
    throw ValidationError("unknown vertex '" + label + "'");
  }
  return it->second;
}

int Quiver::arrow_index(const std::string& name) const {
  auto it = arrow_index_.find(name);
  if (it == arrow_index_.end()) {
    throw ValidationError("unknown arrow '" + name + "'");
  }
  return it->second;
}

int Quiver::find_vertex(const std::string& label) const {
  auto it = vertex_index_.find(label);
  return it == vertex_index_.end() ? -1 : it->second;
}

int Quiver::find_arrow(const std::string& name) const {
  auto it = arrow_index_.find(name);
  return it == arrow_index_.end() ? -1 : it->second;
}

bool Quiver::operator==(const Quiver& other) const {
  if (vertices_ != other.vertices_) return false;
  if (arrows_.size() != other.arrows_.size()) return false;
  for (std::size_t i = 0; i < arrows_.size(); ++i) {
    if (arrows_[i].name != other.arrows_[i].name ||
        arrows_[i].source != other.arrows_[i].source ||
        arrows_[i].target != other.arrows_[i].target) {
      return false;
    }
  }
  return true;
}

Path Path::trivial(int vertex) { return Path(vertex, {}); }

Path Path::of(std::vector<int> arrows, const Quiver& q) {
  if (arrows.empty()) throw InternalError("Path::of requires at least one arrow");
  for (std::size_t i = 0; i + 1 < arrows.size(); ++i) {
    if (q.arrow(arrows[i]).target != q.arrow(arrows[i + 1]).source) {
      throw ValidationError("non-composable path: target of '" +
                            q.arrow(arrows[i]).name + "' is not source of '" +
                            q.arrow(arrows[i + 1]).name + "'");
    }
  }
  return Path(-1, std::move(arrows));
}

int Path::source(const Quiver& q) const {
  return is_trivial() ? vertex_ : q.arrow(arrows_.front()).source;
}

int Path::target(const Quiver& q) const {
  return is_trivial() ? vertex_ : q.arrow(arrows_.back()).target;
}

std::string Path::str(const Quiver& q) const {
  if (is_trivial()) return "e_" + q.vertex_label(vertex_);
  std::string out;
  for (std::size_t i = 0; i < arrows_.size(); ++i) {
    if (i) out += '.';
    out += q.arrow(arrows_[i]).name;
  }
  return out;
}

bool Path::operator<(const Path& other) const {
  if (length() != other.length()) return length() < other.length();
  if (is_trivial()) return vertex_ < other.vertex_;
  return arrows_ < other.arrows_;
}

namespace {

bool occurs_contiguously(std::span<const int> word, const std::vector<int>& factor) {
  if (factor.size() > word.size()) return false;
  for (std::size_t at = 0; at + factor.size() <= word.size(); ++at) {
    if (std::equal(factor.begin(), factor.end(), word.begin() + at)) return true;
  }
  return false;
}

}  // namespace

BoundQuiver BoundQuiver::make(Quiver quiver, std::vector<Path> relations) {
  std::vector<std::string> violations;
  for (const auto& r : relations) {
    if (r.length() < 2) {
      violations.push_back("relation '" + r.str(quiver) + "' has length < 2");
    }
  }
  std::sort(relations.begin(), relations.end());
  for (std::size_t i = 1; i < relations.size(); ++i) {
    if (relations[i] == relations[i - 1]) {
      violations.push_back("duplicate relation '" + relations[i].str(quiver) + "'");
    }
  }
  for (std::size_t i = 0; i < relations.size(); ++i) {
    for (std::size_t j = 0; j < relations.size(); ++j) {
      if (i == j) continue;
      if (occurs_contiguously(relations[j].arrows(), relations[i].arrows())) {
        violations.push_back("nested relations: '" + relations[i].str(quiver) +
                             "' is a subpath of '" + relations[j].str(quiver) + "'");
      }
    }
  }
  if (!violations.empty()) {
    throw ValidationError("invalid bound quiver: " + violations.front(), violations);
  }

  BoundQuiver a;
  a.quiver_ = std::move(quiver);
  a.relations_ = std::move(relations);
  std::set<int> lengths;
  for (std::size_t i = 0; i < a.relations_.size(); ++i) {
    a.relation_lookup_[a.relations_[i].arrows()] = static_cast<int>(i);
    lengths.insert(a.relations_[i].length());
  }
  a.relation_lengths_.assign(lengths.begin(), lengths.end());
  return a;
}

bool BoundQuiver::contains_relation(std::span<const int> arrows) const {
  for (const auto& r : relations_) {
    if (occurs_contiguously(arrows, r.arrows())) return true;
  }
  return false;
}

bool BoundQuiver::relation_at_suffix(std::span<const int> arrows) const {
  for (int len : relation_lengths_) {
    if (static_cast<std::size_t>(len) > arrows.size()) break;
    std::vector<int> suffix(arrows.end() - len, arrows.end());
    if (relation_lookup_.count(suffix)) return true;
  }
  return false;
}

bool BoundQuiver::is_relation(std::span<const int> arrows) const {
  return relation_lookup_.count(std::vector<int>(arrows.begin(), arrows.end())) > 0;
}

bool BoundQuiver::quadratic_in_ideal(int a, int b) const {
  return relation_lookup_.count(std::vector<int>{a, b}) > 0;
}

bool BoundQuiver::operator==(const BoundQuiver& other) const {
  return quiver_ == other.quiver_ && relations_ == other.relations_;
}

ComposeResult compose(const Path& p, const Path& q, const BoundQuiver& a) {
  const Quiver& quiver = a.quiver();
  if (p.target(quiver) != q.source(quiver)) return NonComposable{};
  if (p.is_trivial()) {
    return a.contains_relation(q.arrows()) ? ComposeResult(Zero{}) : ComposeResult(q);
  }
  if (q.is_trivial()) {
    return a.contains_relation(p.arrows()) ? ComposeResult(Zero{}) : ComposeResult(p);
  }
  std::vector<int> word = p.arrows();
  word.insert(word.end(), q.arrows().begin(), q.arrows().end());
  if (a.contains_relation(word)) return Zero{};
  return Path::of(std::move(word), quiver);
}

std::size_t count_nonzero_paths(const BoundQuiver& a, std::size_t cap) {
  const Quiver& q = a.quiver();
  std::size_t count = static_cast<std::size_t>(q.vertex_count());
  std::vector<std::vector<int>> frontier;
  for (int ar = 0; ar < q.arrow_count(); ++ar) {
    std::vector<int> word{ar};
    if (!a.relation_at_suffix(word)) frontier.push_back(std::move(word));
  }
  while (!frontier.empty()) {
    count += frontier.size();
    if (count > cap) {
      throw NonAdmissibleError(
          "ideal is not admissible: more than " + std::to_string(cap) +
          " relation-avoiding paths (the algebra is infinite-dimensional or the "
          "cap is too small)");
    }
    std::vector<std::vector<int>> next;
    for (const auto& word : frontier) {
      for (int ar : q.arrows_from(q.arrow(word.back()).target)) {
        std::vector<int> ext = word;
        ext.push_back(ar);
        if (!a.relation_at_suffix(ext)) next.push_back(std::move(ext));
      }
    }
    frontier = std::move(next);
  }
  return count;
}

namespace {

using nlohmann::json;

json parse_json_or_throw(const std::string& text) {
  json doc = json::parse(text, nullptr, false);
  if (doc.is_discarded()) throw SchemaError("document is not valid JSON");
  return doc;
}

}  // namespace

BoundQuiver parse_quiver(const std::string& json_text, const ParseOptions& opts) {
  json doc = parse_json_or_throw(json_text);
  if (!doc.is_object()) throw SchemaError("quiver document must be a JSON object");
  if (!doc.contains("vertices") || !doc["vertices"].is_array()) {
    throw SchemaError("quiver document needs a 'vertices' array");
  }
  if (!doc.contains("arrows") || !doc["arrows"].is_array()) {
    throw SchemaError("quiver document needs an 'arrows' array");
  }
  std::vector<std::string> vertices;
  for (const auto& v : doc["vertices"]) {
    if (!v.is_string()) throw SchemaError("vertex labels must be strings");
    vertices.push_back(v.get<std::string>());
  }
  std::vector<std::array<std::string, 3>> arrows;
  for (const auto& a : doc["arrows"]) {
    if (!a.is_object() || !a.contains("name") || !a.contains("from") || !a.contains("to") ||
        !a["name"].is_string() || !a["from"].is_string() || !a["to"].is_string()) {
      throw SchemaError("each arrow needs string fields 'name', 'from', 'to'");
    }
    arrows.push_back({a["name"].get<std::string>(), a["from"].get<std::string>(),
                      a["to"].get<std::string>()});
  }
  Quiver quiver = Quiver::make(std::move(vertices), std::move(arrows));

  std::vector<Path> relations;
  if (doc.contains("relations")) {
    if (!doc["relations"].is_array()) throw SchemaError("'relations' must be an array");
    for (const auto& rel : doc["relations"]) {
      if (!rel.is_array() || rel.empty()) {
        throw SchemaError("each relation must be a nonempty array of arrow names");
      }
      std::vector<int> word;
      for (const auto& name : rel) {
        if (!name.is_string()) throw SchemaError("relation entries must be arrow names");
        word.push_back(quiver.arrow_index(name.get<std::string>()));
      }
      if (word.size() < 2) {
        throw ValidationError("relation of length < 2",
                              {"relation '" + quiver.arrow(word[0]).name + "' has length 1"});
      }
      relations.push_back(Path::of(std::move(word), quiver));
    }
  }
  BoundQuiver bound = BoundQuiver::make(std::move(quiver), std::move(relations));
  count_nonzero_paths(bound, opts.path_cap);
  return bound;
}

std::string serialize_quiver(const BoundQuiver& a) {
  const Quiver& q = a.quiver();
  nlohmann::ordered_json doc;
  doc["vertices"] = q.vertex_labels();
  doc["arrows"] = nlohmann::ordered_json::array();
  for (int i = 0; i < q.arrow_count(); ++i) {
    const Arrow& ar = q.arrow(i);
    doc["arrows"].push_back({{"name", ar.name},
                             {"from", q.vertex_label(ar.source)},
                             {"to", q.vertex_label(ar.target)}});
  }
  doc["relations"] = nlohmann::ordered_json::array();
  for (const auto& r : a.relations()) {
    nlohmann::ordered_json rel = nlohmann::ordered_json::array();
    for (int ar : r.arrows()) rel.push_back(q.arrow(ar).name);
    doc["relations"].push_back(rel);
  }
  return doc.dump(2) + "\n";
}

std::string quiver_to_dot(const BoundQuiver& a) {
  const Quiver& q = a.quiver();
  std::ostringstream os;
  os << "digraph quiver {\n";
  for (int v = 0; v < q.vertex_count(); ++v) {
    os << "  \"" << q.vertex_label(v) << "\";\n";
  }
  for (int i = 0; i < q.arrow_count(); ++i) {
    const Arrow& ar = q.arrow(i);
    os << "  \"" << q.vertex_label(ar.source) << "\" -> \"" << q.vertex_label(ar.target)
       << "\" [label=\"" << ar.name << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace qgp
