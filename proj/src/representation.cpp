#include "quivergp/representation.hpp"

#include <algorithm>
#include <numeric>

namespace qgp {

Representation Representation::make(AlgebraPtr algebra, std::vector<int> dims,
                                    std::vector<RMatrix> matrices) {
  const Quiver& q = algebra->quiver();
  if (static_cast<int>(dims.size()) != q.vertex_count() ||
      static_cast<int>(matrices.size()) != q.arrow_count()) {
    throw InternalError("representation data does not match the quiver");
  }
  for (int a = 0; a < q.arrow_count(); ++a) {
    const Arrow& arrow = q.arrow(a);
    if (matrices[a].rows() != dims[arrow.target] || matrices[a].cols() != dims[arrow.source]) {
      throw ValidationError("matrix for arrow '" + arrow.name + "' has shape " +
                            std::to_string(matrices[a].rows()) + "x" +
                            std::to_string(matrices[a].cols()) + ", expected " +
                            std::to_string(dims[arrow.target]) + "x" +
                            std::to_string(dims[arrow.source]));
    }
  }
  Representation m;
  m.algebra_ = std::move(algebra);
  m.dims_ = std::move(dims);
  m.matrices_ = std::move(matrices);
  for (const auto& r : m.algebra_->bound().relations()) {
    RMatrix composite = path_action(m, r);
    if (!composite.isZero(Rational(0))) {
      throw ValidationError("representation violates relation '" + r.str(q) + "'");
    }
  }
  return m;
}

Representation Representation::zero(AlgebraPtr algebra) {
  const Quiver& q = algebra->quiver();
  std::vector<int> dims(q.vertex_count(), 0);
  std::vector<RMatrix> mats;
  mats.reserve(q.arrow_count());
  for (int a = 0; a < q.arrow_count(); ++a) mats.push_back(RMatrix::Zero(0, 0));
  return make(std::move(algebra), std::move(dims), std::move(mats));
}

int Representation::total_dim() const {
  return std::accumulate(dims_.begin(), dims_.end(), 0);
}

bool Representation::operator==(const Representation& other) const {
  if (dims_ != other.dims_) return false;
  for (std::size_t a = 0; a < matrices_.size(); ++a) {
    if (matrices_[a].rows() != other.matrices_[a].rows() ||
        matrices_[a].cols() != other.matrices_[a].cols() ||
        matrices_[a] != other.matrices_[a]) {
      return false;
    }
  }
  return true;
}

RMatrix path_action(const Representation& m, const Path& p) {
  const Quiver& q = m.quiver();
  if (p.is_trivial()) {
    const int d = m.dim(p.trivial_vertex());
    return RMatrix::Identity(d, d);
  }
  RMatrix acc = m.matrix(p.arrows().front());
  for (std::size_t i = 1; i < p.arrows().size(); ++i) {
    acc = m.matrix(p.arrows()[i]) * acc;
  }
  (void)q;
  return acc;
}

RVector path_action(const Representation& m, const Path& p, const RVector& v) {
  if (p.is_trivial()) return v;
  RVector acc = v;
  for (int a : p.arrows()) acc = m.matrix(a) * acc;
  return acc;
}

ModuleMap ModuleMap::make(Representation source, Representation target,
                          std::vector<RMatrix> blocks) {
  const Quiver& q = source.quiver();
  if (static_cast<int>(blocks.size()) != q.vertex_count()) {
    throw InternalError("module map needs one block per vertex");
  }
  for (int v = 0; v < q.vertex_count(); ++v) {
    if (blocks[v].rows() != target.dim(v) || blocks[v].cols() != source.dim(v)) {
      throw InternalError("module map block has wrong shape at vertex " +
                          q.vertex_label(v));
    }
  }
  for (int a = 0; a < q.arrow_count(); ++a) {
    const Arrow& arrow = q.arrow(a);
    RMatrix lhs = target.matrix(a) * blocks[arrow.source];
    RMatrix rhs = blocks[arrow.target] * source.matrix(a);
    if (lhs != rhs) {
      throw InternalError("module map does not commute with arrow '" + arrow.name + "'");
    }
  }
  ModuleMap f;
  f.source_ = std::move(source);
  f.target_ = std::move(target);
  f.blocks_ = std::move(blocks);
  return f;
}

ModuleMap ModuleMap::zero(Representation source, Representation target) {
  const int nv = source.quiver().vertex_count();
  std::vector<RMatrix> blocks;
  blocks.reserve(nv);
  for (int v = 0; v < nv; ++v) {
    blocks.push_back(RMatrix::Zero(target.dim(v), source.dim(v)));
  }
  return make(std::move(source), std::move(target), std::move(blocks));
}

ModuleMap ModuleMap::identity(const Representation& m) {
  const int nv = m.quiver().vertex_count();
  std::vector<RMatrix> blocks;
  blocks.reserve(nv);
  for (int v = 0; v < nv; ++v) blocks.push_back(RMatrix::Identity(m.dim(v), m.dim(v)));
  return make(m, m, std::move(blocks));
}

bool ModuleMap::is_zero() const {
  for (const auto& b : blocks_) {
    if (!b.isZero(Rational(0))) return false;
  }
  return true;
}

bool ModuleMap::is_injective() const {
  for (int v = 0; v < source_.quiver().vertex_count(); ++v) {
    if (rank_of<Rational>(blocks_[v]) != source_.dim(v)) return false;
  }
  return true;
}

bool ModuleMap::is_surjective() const {
  for (int v = 0; v < source_.quiver().vertex_count(); ++v) {
    if (rank_of<Rational>(blocks_[v]) != target_.dim(v)) return false;
  }
  return true;
}

bool ModuleMap::is_isomorphism() const {
  for (int v = 0; v < source_.quiver().vertex_count(); ++v) {
    if (source_.dim(v) != target_.dim(v)) return false;
  }
  return is_injective();
}

ModuleMap compose(const ModuleMap& outer, const ModuleMap& inner) {
  const int nv = inner.source().quiver().vertex_count();
  std::vector<RMatrix> blocks;
  blocks.reserve(nv);
  for (int v = 0; v < nv; ++v) blocks.push_back(outer.block(v) * inner.block(v));
  return ModuleMap::make(inner.source(), outer.target(), std::move(blocks));
}

ModuleMap linear_combination(std::span<const ModuleMap> maps,
                             std::span<const Rational> coeffs) {
  if (maps.empty()) throw InternalError("linear_combination needs at least one map");
  const int nv = maps[0].source().quiver().vertex_count();
  std::vector<RMatrix> blocks;
  blocks.reserve(nv);
  for (int v = 0; v < nv; ++v) {
    RMatrix acc = RMatrix::Zero(maps[0].target().dim(v), maps[0].source().dim(v));
    for (std::size_t i = 0; i < maps.size(); ++i) {
      if (coeffs[i] == Rational(0)) continue;
      acc += coeffs[i] * maps[i].block(v);
    }
    blocks.push_back(std::move(acc));
  }
  return ModuleMap::make(maps[0].source(), maps[0].target(), std::move(blocks));
}

SubObject kernel_of(const ModuleMap& f) {
  const Representation& m = f.source();
  const Quiver& q = m.quiver();
  const int nv = q.vertex_count();
  std::vector<RMatrix> basis(nv);
  std::vector<int> dims(nv, 0);
  for (int v = 0; v < nv; ++v) {
    basis[v] = kernel_basis<Rational>(f.block(v));
    dims[v] = static_cast<int>(basis[v].cols());
  }
  std::vector<RMatrix> mats(q.arrow_count());
  for (int a = 0; a < q.arrow_count(); ++a) {
    const Arrow& arrow = q.arrow(a);
    RMatrix image = m.matrix(a) * basis[arrow.source];
    auto coords = solve_exact<Rational>(basis[arrow.target], image);
    if (!coords) throw InternalError("kernel of a module map is not arrow-stable");
    mats[a] = std::move(*coords);
  }
  Representation k = Representation::make(m.algebra_ptr(), dims, std::move(mats));
  ModuleMap incl = ModuleMap::make(k, m, std::move(basis));
  return {std::move(k), std::move(incl)};
}

QuotObject cokernel_of(const ModuleMap& f) {
  const Representation& n = f.target();
  const Quiver& q = n.quiver();
  const int nv = q.vertex_count();
  std::vector<RMatrix> complement(nv);   // embedding of chosen coset representatives
  std::vector<RMatrix> projection(nv);   // N_v -> quotient coordinates
  std::vector<int> dims(nv, 0);
  for (int v = 0; v < nv; ++v) {
    RMatrix image = column_space_basis<Rational>(f.block(v));
    const int total = n.dim(v);
    // Extend the image basis to a basis of N_v with standard vectors.
    RMatrix candidates(total, image.cols() + total);
    candidates.leftCols(image.cols()) = image;
    candidates.rightCols(total) = RMatrix::Identity(total, total);
    std::vector<int> chosen = independent_columns<Rational>(candidates);
    RMatrix full(total, total);
    int quot_dim = 0;
    std::vector<int> complement_cols;
    for (std::size_t i = 0; i < chosen.size(); ++i) {
      full.col(static_cast<int>(i)) = candidates.col(chosen[i]);
      if (chosen[i] >= static_cast<int>(image.cols())) {
        complement_cols.push_back(static_cast<int>(i));
        ++quot_dim;
      }
    }
    auto inv = inverse_of<Rational>(full);
    if (!inv) throw InternalError("failed to complete image basis");
    dims[v] = quot_dim;
    complement[v].resize(total, quot_dim);
    projection[v].resize(quot_dim, total);
    for (int k = 0; k < quot_dim; ++k) {
      complement[v].col(k) = full.col(complement_cols[k]);
      projection[v].row(k) = inv->row(complement_cols[k]);
    }
  }
  std::vector<RMatrix> mats(q.arrow_count());
  for (int a = 0; a < q.arrow_count(); ++a) {
    const Arrow& arrow = q.arrow(a);
    mats[a] = projection[arrow.target] * (n.matrix(a) * complement[arrow.source]);
  }
  Representation c = Representation::make(n.algebra_ptr(), dims, std::move(mats));
  ModuleMap proj = ModuleMap::make(n, c, std::move(projection));
  return {std::move(c), std::move(proj)};
}

namespace {

// Subrepresentation spanned (per vertex) by the given generating columns.
SubObject span_subobject(const Representation& m, const std::vector<RMatrix>& spans) {
  const Quiver& q = m.quiver();
  const int nv = q.vertex_count();
  std::vector<RMatrix> basis(nv);
  std::vector<int> dims(nv, 0);
  for (int v = 0; v < nv; ++v) {
    basis[v] = column_space_basis<Rational>(spans[v]);
    dims[v] = static_cast<int>(basis[v].cols());
  }
  std::vector<RMatrix> mats(q.arrow_count());
  for (int a = 0; a < q.arrow_count(); ++a) {
    const Arrow& arrow = q.arrow(a);
    RMatrix image = m.matrix(a) * basis[arrow.source];
    auto coords = solve_exact<Rational>(basis[arrow.target], image);
    if (!coords) throw InternalError("span is not a subrepresentation");
    mats[a] = std::move(*coords);
  }
  Representation sub = Representation::make(m.algebra_ptr(), dims, std::move(mats));
  ModuleMap incl = ModuleMap::make(sub, m, std::move(basis));
  return {std::move(sub), std::move(incl)};
}

}  // namespace

SubObject radical_of(const Representation& m) {
  const Quiver& q = m.quiver();
  const int nv = q.vertex_count();
  std::vector<RMatrix> spans(nv);
  for (int v = 0; v < nv; ++v) {
    std::vector<RMatrix> pieces;
    for (int a : q.arrows_to(v)) pieces.push_back(m.matrix(a));
    spans[v] = pieces.empty() ? RMatrix::Zero(m.dim(v), 0)
                              : hcat<Rational>(pieces, m.dim(v));
  }
  return span_subobject(m, spans);
}

QuotObject top_of(const Representation& m) { return cokernel_of(radical_of(m).inclusion); }

SubObject socle_of(const Representation& m) {
  const Quiver& q = m.quiver();
  const int nv = q.vertex_count();
  std::vector<RMatrix> spans(nv);
  for (int v = 0; v < nv; ++v) {
    const auto& outgoing = q.arrows_from(v);
    if (outgoing.empty()) {
      spans[v] = RMatrix::Identity(m.dim(v), m.dim(v));
      continue;
    }
    int rows = 0;
    for (int a : outgoing) rows += m.dim(q.arrow(a).target);
    RMatrix stacked(rows, m.dim(v));
    int at = 0;
    for (int a : outgoing) {
      stacked.middleRows(at, m.dim(q.arrow(a).target)) = m.matrix(a);
      at += m.dim(q.arrow(a).target);
    }
    spans[v] = kernel_basis<Rational>(stacked);
  }
  return span_subobject(m, spans);
}

Representation projective(AlgebraPtr algebra, int vertex) {
  const PathAlgebra& a = *algebra;
  const Quiver& q = a.quiver();
  const int nv = q.vertex_count();
  std::vector<int> dims(nv, 0);
  // Column index of each basis path within its target-vertex block.
  std::vector<int> position(a.path_count(), -1);
  for (int z = 0; z < nv; ++z) {
    const auto& block = a.paths_between(vertex, z);
    dims[z] = static_cast<int>(block.size());
    for (int i = 0; i < dims[z]; ++i) position[block[i]] = i;
  }
  std::vector<RMatrix> mats(q.arrow_count());
  for (int ar = 0; ar < q.arrow_count(); ++ar) {
    const Arrow& arrow = q.arrow(ar);
    RMatrix mat = RMatrix::Zero(dims[arrow.target], dims[arrow.source]);
    for (int pid : a.paths_between(vertex, arrow.source)) {
      const int ext = a.extend_right(pid, ar);
      if (ext >= 0) mat(position[ext], position[pid]) = Rational(1);
    }
    mats[ar] = std::move(mat);
  }
  return Representation::make(std::move(algebra), std::move(dims), std::move(mats));
}

Representation injective(AlgebraPtr algebra, int vertex) {
  const PathAlgebra& a = *algebra;
  const Quiver& q = a.quiver();
  const int nv = q.vertex_count();
  std::vector<int> dims(nv, 0);
  std::vector<int> position(a.path_count(), -1);
  for (int z = 0; z < nv; ++z) {
    const auto& block = a.paths_between(z, vertex);
    dims[z] = static_cast<int>(block.size());
    for (int i = 0; i < dims[z]; ++i) position[block[i]] = i;
  }
  std::vector<RMatrix> mats(q.arrow_count());
  for (int ar = 0; ar < q.arrow_count(); ++ar) {
    const Arrow& arrow = q.arrow(ar);
    RMatrix mat = RMatrix::Zero(dims[arrow.target], dims[arrow.source]);
    for (int pid : a.paths_between(arrow.source, vertex)) {
      const Path& p = a.path(pid);
      if (p.is_trivial()) continue;
      auto [first, rest] = a.strip_front(pid);
      if (first == ar) mat(position[rest], position[pid]) = Rational(1);
    }
    mats[ar] = std::move(mat);
  }
  return Representation::make(std::move(algebra), std::move(dims), std::move(mats));
}

Representation simple(AlgebraPtr algebra, int vertex) {
  const Quiver& q = algebra->quiver();
  std::vector<int> dims(q.vertex_count(), 0);
  dims[vertex] = 1;
  std::vector<RMatrix> mats;
  mats.reserve(q.arrow_count());
  for (int a = 0; a < q.arrow_count(); ++a) {
    const Arrow& arrow = q.arrow(a);
    mats.push_back(RMatrix::Zero(dims[arrow.target], dims[arrow.source]));
  }
  return Representation::make(std::move(algebra), std::move(dims), std::move(mats));
}

Representation path_module(AlgebraPtr algebra, int path_id) {
  const PathAlgebra& a = *algebra;
  const Quiver& q = a.quiver();
  const int nv = q.vertex_count();
  // Survivors: right extensions r with p·r still a basis path, indexed by the
  // extension path r.
  std::vector<int> survivors;  // extension path ids
  std::vector<int> position(a.path_count(), -1);
  std::vector<int> dims(nv, 0);
  const int start = a.trivial_path_id(a.target_of(path_id));
  std::vector<int> frontier{start};
  while (!frontier.empty()) {
    std::vector<int> next;
    for (int rid : frontier) {
      position[rid] = dims[a.target_of(rid)]++;
      survivors.push_back(rid);
      for (int ar : q.arrows_from(a.target_of(rid))) {
        const int ext = a.extend_right(rid, ar);
        if (ext < 0) continue;
        if (a.compose_ids(path_id, ext) < 0) continue;
        next.push_back(ext);
      }
    }
    frontier = std::move(next);
  }
  std::vector<RMatrix> mats(q.arrow_count());
  for (int ar = 0; ar < q.arrow_count(); ++ar) {
    const Arrow& arrow = q.arrow(ar);
    mats[ar] = RMatrix::Zero(dims[arrow.target], dims[arrow.source]);
  }
  for (int rid : survivors) {
    for (int ar : q.arrows_from(a.target_of(rid))) {
      const int ext = a.extend_right(rid, ar);
      if (ext < 0 || position[ext] < 0) continue;
      mats[ar](position[ext], position[rid]) = Rational(1);
    }
  }
  return Representation::make(std::move(algebra), std::move(dims), std::move(mats));
}

Representation direct_sum(const Representation& a, const Representation& b) {
  const Quiver& q = a.quiver();
  const int nv = q.vertex_count();
  std::vector<int> dims(nv);
  for (int v = 0; v < nv; ++v) dims[v] = a.dim(v) + b.dim(v);
  std::vector<RMatrix> mats(q.arrow_count());
  for (int ar = 0; ar < q.arrow_count(); ++ar) {
    const Arrow& arrow = q.arrow(ar);
    RMatrix mat = RMatrix::Zero(dims[arrow.target], dims[arrow.source]);
    mat.topLeftCorner(a.dim(arrow.target), a.dim(arrow.source)) = a.matrix(ar);
    mat.bottomRightCorner(b.dim(arrow.target), b.dim(arrow.source)) = b.matrix(ar);
    mats[ar] = std::move(mat);
  }
  return Representation::make(a.algebra_ptr(), std::move(dims), std::move(mats));
}

}  // namespace qgp
