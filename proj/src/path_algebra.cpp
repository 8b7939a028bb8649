#include "quivergp/path_algebra.hpp"

#include <algorithm>

namespace qgp {

std::shared_ptr<const PathAlgebra> PathAlgebra::build(BoundQuiver bound, Options opts) {
  auto algebra = std::shared_ptr<PathAlgebra>(new PathAlgebra());
  PathAlgebra& a = *algebra;
  a.bound_ = std::move(bound);
  const Quiver& q = a.bound_.quiver();
  const int nv = q.vertex_count();
  const int na = q.arrow_count();

  a.trivial_.assign(nv, -1);
  for (int v = 0; v < nv; ++v) {
    a.trivial_[v] = static_cast<int>(a.paths_.size());
    a.paths_.push_back(Path::trivial(v));
  }

  // Breadth-first by length; within a level the generation order is already
  // lexicographic because parents are visited in order and arrows ascend.
  std::vector<std::vector<int>> frontier;
  for (int ar = 0; ar < na; ++ar) {
    std::vector<int> word{ar};
    if (!a.bound_.relation_at_suffix(word)) frontier.push_back(std::move(word));
  }
  while (!frontier.empty()) {
    if (a.paths_.size() + frontier.size() > opts.path_cap) {
      throw NonAdmissibleError("ideal is not admissible: path basis exceeds cap of " +
                               std::to_string(opts.path_cap));
    }
    std::vector<std::vector<int>> next;
    for (auto& word : frontier) {
      a.paths_.push_back(Path::of(std::vector<int>(word), q));
      for (int ar : q.arrows_from(q.arrow(word.back()).target)) {
        std::vector<int> ext = word;
        ext.push_back(ar);
        if (!a.bound_.relation_at_suffix(ext)) next.push_back(std::move(ext));
      }
    }
    frontier = std::move(next);
  }

  const int np = static_cast<int>(a.paths_.size());
  a.source_.resize(np);
  a.target_.resize(np);
  a.from_.assign(nv, {});
  a.to_.assign(nv, {});
  a.between_.assign(static_cast<std::size_t>(nv) * nv, {});
  for (int id = 0; id < np; ++id) {
    const Path& p = a.paths_[id];
    if (!p.is_trivial()) a.arrow_word_index_[p.arrows()] = id;
    const int s = p.source(q);
    const int t = p.target(q);
    a.source_[id] = s;
    a.target_[id] = t;
    a.from_[s].push_back(id);
    a.to_[t].push_back(id);
    a.between_[s * nv + t].push_back(id);
    a.max_len_ = std::max(a.max_len_, p.length());
  }

  a.right_.assign(np, std::vector<int>(na, -1));
  for (int id = 0; id < np; ++id) {
    const Path& p = a.paths_[id];
    for (int ar : q.arrows_from(a.target_[id])) {
      std::vector<int> word = p.arrows();
      word.push_back(ar);
      auto it = a.arrow_word_index_.find(word);
      if (it != a.arrow_word_index_.end()) a.right_[id][ar] = it->second;
    }
  }
  return algebra;
}

int PathAlgebra::path_id(const Path& p) const {
  if (p.is_trivial()) return trivial_[p.trivial_vertex()];
  auto it = arrow_word_index_.find(p.arrows());
  return it == arrow_word_index_.end() ? -1 : it->second;
}

int PathAlgebra::extend_left(int arrow, int id) const {
  const Path& p = paths_[id];
  if (quiver().arrow(arrow).target != source_[id]) return -1;
  if (p.is_trivial()) {
    std::vector<int> word{arrow};
    auto it = arrow_word_index_.find(word);
    return it == arrow_word_index_.end() ? -1 : it->second;
  }
  std::vector<int> word;
  word.reserve(p.arrows().size() + 1);
  word.push_back(arrow);
  word.insert(word.end(), p.arrows().begin(), p.arrows().end());
  auto it = arrow_word_index_.find(word);
  return it == arrow_word_index_.end() ? -1 : it->second;
}

std::pair<int, int> PathAlgebra::strip_front(int id) const {
  const Path& p = paths_[id];
  if (p.is_trivial()) throw InternalError("strip_front on a trivial path");
  const int first = p.arrows().front();
  if (p.length() == 1) return {first, trivial_[target_[id]]};
  std::vector<int> rest(p.arrows().begin() + 1, p.arrows().end());
  auto it = arrow_word_index_.find(rest);
  if (it == arrow_word_index_.end()) {
    throw InternalError("suffix of a basis path is missing from the basis");
  }
  return {first, it->second};
}

std::pair<int, int> PathAlgebra::strip_back(int id) const {
  const Path& p = paths_[id];
  if (p.is_trivial()) throw InternalError("strip_back on a trivial path");
  const int last = p.arrows().back();
  if (p.length() == 1) return {last, trivial_[source_[id]]};
  std::vector<int> prefix(p.arrows().begin(), p.arrows().end() - 1);
  auto it = arrow_word_index_.find(prefix);
  if (it == arrow_word_index_.end()) {
    throw InternalError("prefix of a basis path is missing from the basis");
  }
  return {last, it->second};
}

int PathAlgebra::compose_ids(int p, int q) const {
  if (target_[p] != source_[q]) return -1;
  if (paths_[p].is_trivial()) return q;
  if (paths_[q].is_trivial()) return p;
  std::vector<int> word = paths_[p].arrows();
  word.insert(word.end(), paths_[q].arrows().begin(), paths_[q].arrows().end());
  auto it = arrow_word_index_.find(word);
  return it == arrow_word_index_.end() ? -1 : it->second;
}

AlgebraPtr algebra_from_json(const std::string& json_text, PathAlgebra::Options opts) {
  ParseOptions popts;
  popts.path_cap = opts.path_cap;
  return PathAlgebra::build(parse_quiver(json_text, popts), opts);
}

}  // namespace qgp
