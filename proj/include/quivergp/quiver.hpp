#pragma once

// Finite quivers, paths, and monomial bound quivers.
//
// Composition convention used everywhere in this library: the path written
// p·q (or the relation list ["alpha","beta"]) traverses p FIRST, then q.
// Consecutive arrows must satisfy target(arrow_k) == source(arrow_{k+1}).
// The literature is split on this; every consumer of this header relies on
// the left-to-right reading.

#include <array>
#include <compare>
#include <map>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "quivergp/errors.hpp"

namespace qgp {

struct Arrow {
  std::string name;
  int source = 0;
  int target = 0;
};

class Quiver {
 public:
  // arrows entries are {name, from-label, to-label}.
  static Quiver make(std::vector<std::string> vertices,
                     std::vector<std::array<std::string, 3>> arrows);

  int vertex_count() const { return static_cast<int>(vertices_.size()); }
  int arrow_count() const { return static_cast<int>(arrows_.size()); }
  const std::string& vertex_label(int v) const { return vertices_[v]; }
  const Arrow& arrow(int a) const { return arrows_[a]; }
  const std::vector<std::string>& vertex_labels() const { return vertices_; }

  // Throwing lookups for external (label-based) input.
  int vertex_index(const std::string& label) const;
  int arrow_index(const std::string& name) const;
  int find_vertex(const std::string& label) const;  // -1 when absent
  int find_arrow(const std::string& name) const;

  const std::vector<int>& arrows_from(int v) const { return out_[v]; }
  const std::vector<int>& arrows_to(int v) const { return in_[v]; }

  bool operator==(const Quiver& other) const;

 private:
  Quiver() = default;
  std::vector<std::string> vertices_;
  std::vector<Arrow> arrows_;
  std::map<std::string, int> vertex_index_;
  std::map<std::string, int> arrow_index_;
  std::vector<std::vector<int>> out_;
  std::vector<std::vector<int>> in_;
};

// A path is trivial at a vertex or a nonempty composable arrow sequence.
class Path {
 public:
  static Path trivial(int vertex);
  // Validates composability against q.
  static Path of(std::vector<int> arrows, const Quiver& q);

  bool is_trivial() const { return arrows_.empty(); }
  int length() const { return static_cast<int>(arrows_.size()); }
  const std::vector<int>& arrows() const { return arrows_; }
  int trivial_vertex() const { return vertex_; }

  int source(const Quiver& q) const;
  int target(const Quiver& q) const;
  std::string str(const Quiver& q) const;  // "alpha.beta" or "e_3"

  bool operator==(const Path& other) const {
    return vertex_ == other.vertex_ && arrows_ == other.arrows_;
  }
  // Order: by length, then trivial paths by vertex / others lexicographically
  // on arrow indices (arrow indices are assigned in name order).
  bool operator<(const Path& other) const;

 private:
  Path(int vertex, std::vector<int> arrows) : vertex_(vertex), arrows_(std::move(arrows)) {}
  int vertex_ = -1;  // only meaningful for trivial paths
  std::vector<int> arrows_;
};

class BoundQuiver {
 public:
  // Validates: relation arrows exist and compose, length >= 2, no duplicates,
  // no generator a contiguous subpath of another. Admissibility is checked by
  // parse_quiver / PathAlgebra, which own the enumeration cap.
  static BoundQuiver make(Quiver quiver, std::vector<Path> relations);

  const Quiver& quiver() const { return quiver_; }
  const std::vector<Path>& relations() const { return relations_; }

  // True when some relation occurs as a contiguous subword.
  bool contains_relation(std::span<const int> arrows) const;
  // True when a relation occurs as a suffix (the incremental BFS test).
  bool relation_at_suffix(std::span<const int> arrows) const;
  bool is_relation(std::span<const int> arrows) const;
  // len-2 convenience: ab in I (relations of length exactly 2).
  bool quadratic_in_ideal(int a, int b) const;

  bool operator==(const BoundQuiver& other) const;

 private:
  BoundQuiver() = default;
  Quiver quiver_;
  std::vector<Path> relations_;
  std::map<std::vector<int>, int> relation_lookup_;
  std::vector<int> relation_lengths_;  // distinct lengths, ascending
};

struct Zero {};
struct NonComposable {};
using ComposeResult = std::variant<Path, Zero, NonComposable>;

// p then q; Zero when the concatenation meets the ideal, NonComposable when
// target(p) != source(q).
ComposeResult compose(const Path& p, const Path& q, const BoundQuiver& a);

struct ParseOptions {
  std::size_t path_cap = 1'000'000;  // admissibility enumeration cap
};

// JSON document <-> BoundQuiver. parse throws SchemaError / ValidationError
// (NonAdmissibleError when the path language is not finite).
BoundQuiver parse_quiver(const std::string& json_text, const ParseOptions& opts = {});
std::string serialize_quiver(const BoundQuiver& a);
std::string quiver_to_dot(const BoundQuiver& a);

// Shared with PathAlgebra: breadth-first count of relation-avoiding paths,
// throwing NonAdmissibleError past the cap.
std::size_t count_nonzero_paths(const BoundQuiver& a, std::size_t cap);

}  // namespace qgp
