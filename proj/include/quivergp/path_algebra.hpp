#pragma once

// The finite-dimensional algebra presented by a bound quiver, carried as its
// path basis: every relation-avoiding path, in a fixed global order (length
// first, then lexicographic on arrow indices; trivial paths by vertex).
// All module-calculus machinery indexes into this basis.

#include <memory>
#include <utility>
#include <vector>

#include "quivergp/quiver.hpp"

namespace qgp {

class PathAlgebra {
 public:
  struct Options {
    std::size_t path_cap = 1'000'000;
  };

  static std::shared_ptr<const PathAlgebra> build(BoundQuiver bound, Options opts = {});

  const BoundQuiver& bound() const { return bound_; }
  const Quiver& quiver() const { return bound_.quiver(); }

  int path_count() const { return static_cast<int>(paths_.size()); }
  const Path& path(int id) const { return paths_[id]; }
  const std::vector<Path>& paths() const { return paths_; }
  int path_id(const Path& p) const;  // -1 when not in the basis
  int trivial_path_id(int vertex) const { return trivial_[vertex]; }

  int source_of(int id) const { return source_[id]; }
  int target_of(int id) const { return target_[id]; }

  // Basis paths from x (any target), and from x to z, in global order.
  const std::vector<int>& paths_from(int x) const { return from_[x]; }
  const std::vector<int>& paths_to(int z) const { return to_[z]; }
  const std::vector<int>& paths_between(int x, int z) const {
    return between_[x * quiver().vertex_count() + z];
  }

  // p·a and a·p as basis ids; -1 when the product lies in the ideal.
  int extend_right(int id, int arrow) const { return right_[id][arrow]; }
  int extend_left(int arrow, int id) const;

  // For a nonempty path: its first arrow and the remaining path's id.
  std::pair<int, int> strip_front(int id) const;
  // For a nonempty path: its last arrow and the leading prefix's id.
  std::pair<int, int> strip_back(int id) const;

  // Concatenation of two basis paths; -1 when zero or non-composable.
  int compose_ids(int p, int q) const;

  int max_path_length() const { return max_len_; }

 private:
  PathAlgebra() = default;

  BoundQuiver bound_;
  std::vector<Path> paths_;
  std::map<std::vector<int>, int> arrow_word_index_;
  std::vector<int> trivial_;
  std::vector<int> source_, target_;
  std::vector<std::vector<int>> from_, to_, between_;
  std::vector<std::vector<int>> right_;  // [path][arrow] -> id or -1
  int max_len_ = 0;
};

using AlgebraPtr = std::shared_ptr<const PathAlgebra>;

// Convenience: parse + build in one step.
AlgebraPtr algebra_from_json(const std::string& json_text,
                             PathAlgebra::Options opts = {});

}  // namespace qgp
