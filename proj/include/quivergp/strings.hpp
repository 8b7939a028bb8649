#pragma once

// Strings (reduced relation-avoiding walks) and their modules, exhaustive
// string enumeration with band detection, and the saturated-cycle description
// of the indecomposable Gorenstein-projective modules over a gentle algebra.

#include <optional>
#include <string>
#include <vector>

#include "quivergp/gorenstein.hpp"
#include "quivergp/representation.hpp"

namespace qgp {

struct StringLetter {
  int arrow;
  bool inverse;
  bool operator==(const StringLetter&) const = default;
};

// A walk is trivial at a vertex or a chained, reduced letter sequence whose
// maximal same-direction runs avoid the ideal.
class StringWalk {
 public:
  static StringWalk trivial(int vertex);
  static StringWalk make(const AlgebraPtr& algebra, std::vector<StringLetter> letters);
  // Forward path as a walk.
  static StringWalk from_path(const AlgebraPtr& algebra, const Path& p);

  bool is_trivial() const { return letters_.empty(); }
  int length() const { return static_cast<int>(letters_.size()); }
  const std::vector<StringLetter>& letters() const { return letters_; }
  int trivial_vertex() const { return vertex_; }

  // Walk vertices v_0 .. v_length.
  std::vector<int> vertices(const Quiver& q) const;
  StringWalk reversed() const;
  // A walk and its reverse present the same module; the canonical form is
  // the lexicographically smaller encoding of the two.
  StringWalk canonical() const;
  bool is_cyclic(const Quiver& q) const;

  bool operator==(const StringWalk&) const = default;
  bool operator<(const StringWalk& o) const;

 private:
  StringWalk(int vertex, std::vector<StringLetter> letters)
      : vertex_(vertex), letters_(std::move(letters)) {}
  int vertex_ = -1;
  std::vector<StringLetter> letters_;
};

// CLI syntax: comma-separated arrow names, "~" suffix for inverse letters,
// "@vertex" for a trivial walk.
StringWalk parse_walk(const AlgebraPtr& algebra, const std::string& text);
std::string format_walk(const StringWalk& w, const Quiver& q);

// The string module M(w): one basis vector per walk vertex, each letter an
// identity entry oriented along the true arrow direction.
Representation string_module(const AlgebraPtr& algebra, const StringWalk& w);

struct StringEnumeration {
  std::vector<StringWalk> walks;  // canonical representatives, deterministic order
  bool bands_exist = false;
  bool truncated = false;  // hit max_length with extensions still possible
};
StringEnumeration enumerate_strings(const AlgebraPtr& algebra, int max_length);

// For every saturated cycle and every arrow position on it, the maximal
// relation-avoiding path leaving the cycle at that vertex (possibly trivial);
// over a gentle algebra these present exactly the nonprojective
// indecomposable Gorenstein-projectives.
std::vector<StringWalk> kalck_gp_modules(const AlgebraPtr& algebra,
                                         const GentleProfile& profile);

}  // namespace qgp
