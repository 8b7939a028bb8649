#include "quivergp/homological.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace qgp {

namespace {

std::vector<std::vector<int>> layout_offsets(const PathAlgebra& a,
                                             const std::vector<int>& anchors,
                                             bool projective_side) {
  const int nv = a.quiver().vertex_count();
  std::vector<std::vector<int>> offsets(anchors.size(), std::vector<int>(nv, 0));
  for (int z = 0; z < nv; ++z) {
    int at = 0;
    for (std::size_t s = 0; s < anchors.size(); ++s) {
      offsets[s][z] = at;
      at += static_cast<int>(projective_side ? a.paths_between(anchors[s], z).size()
                                             : a.paths_between(z, anchors[s]).size());
    }
  }
  return offsets;
}

}  // namespace

int ProjectiveSum::position(int summand, int path_id) const {
  const PathAlgebra& a = *algebra;
  const int z = a.target_of(path_id);
  const auto& block = a.paths_between(tops[summand], z);
  auto it = std::lower_bound(block.begin(), block.end(), path_id);
  if (it == block.end() || *it != path_id) {
    throw InternalError("path is not in the projective summand's basis");
  }
  return offsets[summand][z] + static_cast<int>(it - block.begin());
}

int ProjectiveSum::generator_position(int summand) const {
  return position(summand, algebra->trivial_path_id(tops[summand]));
}

ProjectiveSum make_projective_sum(AlgebraPtr algebra, std::vector<int> tops) {
  const PathAlgebra& a = *algebra;
  const Quiver& q = a.quiver();
  const int nv = q.vertex_count();
  ProjectiveSum sum;
  sum.algebra = algebra;
  sum.tops = std::move(tops);
  sum.offsets = layout_offsets(a, sum.tops, true);
  std::vector<int> dims(nv, 0);
  for (std::size_t s = 0; s < sum.tops.size(); ++s) {
    for (int z = 0; z < nv; ++z) {
      dims[z] += static_cast<int>(a.paths_between(sum.tops[s], z).size());
    }
  }
  std::vector<RMatrix> mats(q.arrow_count());
  for (int ar = 0; ar < q.arrow_count(); ++ar) {
    const Arrow& arrow = q.arrow(ar);
    RMatrix mat = RMatrix::Zero(dims[arrow.target], dims[arrow.source]);
    for (std::size_t s = 0; s < sum.tops.size(); ++s) {
      for (int pid : a.paths_between(sum.tops[s], arrow.source)) {
        const int ext = a.extend_right(pid, ar);
        if (ext >= 0) {
          mat(sum.position(static_cast<int>(s), ext),
              sum.position(static_cast<int>(s), pid)) = Rational(1);
        }
      }
    }
    mats[ar] = std::move(mat);
  }
  sum.rep = Representation::make(algebra, std::move(dims), std::move(mats));
  return sum;
}

int InjectiveSum::position(int summand, int path_id) const {
  const PathAlgebra& a = *algebra;
  const int z = a.source_of(path_id);
  const auto& block = a.paths_between(z, socles[summand]);
  auto it = std::lower_bound(block.begin(), block.end(), path_id);
  if (it == block.end() || *it != path_id) {
    throw InternalError("path is not in the injective summand's basis");
  }
  return offsets[summand][z] + static_cast<int>(it - block.begin());
}

InjectiveSum make_injective_sum(AlgebraPtr algebra, std::vector<int> socles) {
  const PathAlgebra& a = *algebra;
  const Quiver& q = a.quiver();
  const int nv = q.vertex_count();
  InjectiveSum sum;
  sum.algebra = algebra;
  sum.socles = std::move(socles);
  sum.offsets = layout_offsets(a, sum.socles, false);
  std::vector<int> dims(nv, 0);
  for (std::size_t s = 0; s < sum.socles.size(); ++s) {
    for (int z = 0; z < nv; ++z) {
      dims[z] += static_cast<int>(a.paths_between(z, sum.socles[s]).size());
    }
  }
  std::vector<RMatrix> mats(q.arrow_count());
  for (int ar = 0; ar < q.arrow_count(); ++ar) {
    const Arrow& arrow = q.arrow(ar);
    RMatrix mat = RMatrix::Zero(dims[arrow.target], dims[arrow.source]);
    for (std::size_t s = 0; s < sum.socles.size(); ++s) {
      for (int pid : a.paths_between(arrow.source, sum.socles[s])) {
        const Path& p = a.path(pid);
        if (p.is_trivial()) continue;
        auto [first, rest] = a.strip_front(pid);
        if (first == ar) {
          mat(sum.position(static_cast<int>(s), rest),
              sum.position(static_cast<int>(s), pid)) = Rational(1);
        }
      }
    }
    mats[ar] = std::move(mat);
  }
  sum.rep = Representation::make(algebra, std::move(dims), std::move(mats));
  return sum;
}

Cover projective_cover(const Representation& m) {
  const PathAlgebra& a = m.algebra();
  const Quiver& q = a.quiver();
  const int nv = q.vertex_count();
  QuotObject top = top_of(m);

  std::vector<int> tops;
  std::vector<RVector> generators;
  for (int v = 0; v < nv; ++v) {
    const int t = top.object.dim(v);
    if (t == 0) continue;
    // Any preimage of the top basis lifts the generators.
    auto lift = solve_exact<Rational>(top.projection.block(v),
                                      RMatrix::Identity(t, t));
    if (!lift) throw InternalError("top projection is not surjective");
    for (int k = 0; k < t; ++k) {
      tops.push_back(v);
      generators.push_back(lift->col(k));
    }
  }

  ProjectiveSum p0 = make_projective_sum(m.algebra_ptr(), tops);
  std::vector<RMatrix> blocks(nv);
  for (int z = 0; z < nv; ++z) blocks[z] = RMatrix::Zero(m.dim(z), p0.rep.dim(z));
  for (std::size_t s = 0; s < tops.size(); ++s) {
    const int x = tops[s];
    for (int z = 0; z < nv; ++z) {
      for (int pid : a.paths_between(x, z)) {
        blocks[z].col(p0.position(static_cast<int>(s), pid)) =
            path_action(m, a.path(pid), generators[s]);
      }
    }
  }
  ModuleMap epi = ModuleMap::make(p0.rep, m, std::move(blocks));
  if (!epi.is_surjective()) throw InternalError("projective cover is not surjective");
  return {std::move(p0), std::move(epi)};
}

SubObject syzygy_sub(const Representation& m) {
  Cover cover = projective_cover(m);
  return kernel_of(cover.epi);
}

Representation syzygy(const Representation& m) { return syzygy_sub(m).object; }

Presentation min_proj_presentation(const Representation& m) {
  Cover cover0 = projective_cover(m);
  SubObject omega = kernel_of(cover0.epi);
  Cover cover1 = projective_cover(omega.object);
  ModuleMap p1 = compose(omega.inclusion, cover1.epi);
  return {std::move(cover1.p0), std::move(cover0.p0), std::move(p1)};
}

PathMatrix to_path_matrix(const ProjectiveSum& src, const ProjectiveSum& dst,
                          const ModuleMap& f) {
  const PathAlgebra& a = *src.algebra;
  PathMatrix entries(src.tops.size(),
                     std::vector<std::vector<PathMatrixEntry>>(dst.tops.size()));
  for (std::size_t s = 0; s < src.tops.size(); ++s) {
    const int x = src.tops[s];
    const RVector image = f.block(x).col(src.generator_position(static_cast<int>(s)));
    for (std::size_t t = 0; t < dst.tops.size(); ++t) {
      for (int pid : a.paths_between(dst.tops[t], x)) {
        const Rational c = image(dst.position(static_cast<int>(t), pid));
        if (!(c == Rational(0))) {
          entries[s][t].push_back(PathMatrixEntry{pid, c});
        }
      }
    }
  }
  return entries;
}

namespace {

// Does `longer` end with `suffix` (as arrow words)? If so also yield the
// prefix word.
bool strip_word_from_back(const std::vector<int>& longer, const std::vector<int>& suffix,
                          std::vector<int>* prefix) {
  if (suffix.size() > longer.size()) return false;
  if (!std::equal(suffix.begin(), suffix.end(), longer.end() - suffix.size())) return false;
  prefix->assign(longer.begin(), longer.end() - suffix.size());
  return true;
}

}  // namespace

InjectiveMap nakayama(const ProjectiveSum& src, const ProjectiveSum& dst,
                      const ModuleMap& f) {
  AlgebraPtr algebra = src.algebra;
  const PathAlgebra& a = *algebra;
  const Quiver& q = a.quiver();
  const int nv = q.vertex_count();
  const PathMatrix entries = to_path_matrix(src, dst, f);

  InjectiveSum isrc = make_injective_sum(algebra, src.tops);
  InjectiveSum idst = make_injective_sum(algebra, dst.tops);
  std::vector<RMatrix> blocks(nv);
  for (int z = 0; z < nv; ++z) {
    blocks[z] = RMatrix::Zero(idst.rep.dim(z), isrc.rep.dim(z));
  }
  for (std::size_t s = 0; s < src.tops.size(); ++s) {
    const int x = src.tops[s];
    for (std::size_t t = 0; t < dst.tops.size(); ++t) {
      for (const PathMatrixEntry& e : entries[s][t]) {
        const Path& w = a.path(e.path_id);
        const std::vector<int>& word = w.arrows();
        // I(x) -> I(y_t): a path q ending at x maps to its prefix with w
        // stripped from the end, scaled by the coefficient.
        for (int z = 0; z < nv; ++z) {
          for (int qid : a.paths_between(z, x)) {
            const Path& qp = a.path(qid);
            std::vector<int> prefix;
            if (w.is_trivial()) {
              blocks[z](idst.position(static_cast<int>(t), qid),
                        isrc.position(static_cast<int>(s), qid)) += e.coeff;
              continue;
            }
            if (qp.length() < w.length()) continue;
            if (!strip_word_from_back(qp.arrows(), word, &prefix)) continue;
            const int prefix_id = prefix.empty()
                                      ? a.trivial_path_id(z)
                                      : a.path_id(Path::of(prefix, q));
            if (prefix_id < 0) throw InternalError("prefix of a basis path not in basis");
            blocks[z](idst.position(static_cast<int>(t), prefix_id),
                      isrc.position(static_cast<int>(s), qid)) += e.coeff;
          }
        }
      }
    }
  }
  ModuleMap map = ModuleMap::make(isrc.rep, idst.rep, std::move(blocks));
  return {std::move(isrc), std::move(idst), std::move(map)};
}

namespace {

Representation tau_of_stripped(const Representation& m) {
  if (m.is_zero_module()) return m;
  Presentation pres = min_proj_presentation(m);
  InjectiveMap nu = nakayama(pres.p1, pres.p0, pres.map);
  return kernel_of(nu.map).object;
}

}  // namespace

Representation tau(const Representation& m) {
  if (m.is_zero_module()) return m;
  StripResult sr = strip_projectives(m);
  if (!sr.stripped_tops.empty()) {
    throw ProjectiveSummandError(
        "tau requires a module without projective direct summands (found P(" +
        m.quiver().vertex_label(sr.stripped_tops.front()) + "))");
  }
  return tau_of_stripped(m);
}

Representation tau_stable(const Representation& m) {
  StripResult sr = strip_projectives(m);
  return tau_of_stripped(sr.stable);
}

StripResult strip_projectives(const Representation& m) {
  Representation cur = m;
  std::vector<int> stripped;
  const int nv = m.quiver().vertex_count();
  bool changed = true;
  while (changed) {
    changed = false;
    for (int x = 0; x < nv && !changed; ++x) {
      if (cur.dim(x) == 0) continue;
      Representation px = projective(cur.algebra_ptr(), x);
      const std::vector<ModuleMap> homs = hom_space(cur, px);
      if (homs.empty()) continue;
      for (const ModuleMap& h : homs) {
        for (int j = 0; j < cur.dim(x) && !changed; ++j) {
          // e_x is the first basis path of P(x) at vertex x.
          if (h.block(x)(0, j) == Rational(0)) continue;
          // phi: P(x) -> cur generated by the j-th basis vector of cur at x.
          const PathAlgebra& a = cur.algebra();
          std::vector<RMatrix> phi_blocks(nv);
          for (int z = 0; z < nv; ++z) {
            phi_blocks[z] = RMatrix::Zero(cur.dim(z), px.dim(z));
          }
          RVector gen = RVector::Zero(cur.dim(x));
          gen(j) = Rational(1);
          for (int z = 0; z < nv; ++z) {
            const auto& block = a.paths_between(x, z);
            for (std::size_t i = 0; i < block.size(); ++i) {
              phi_blocks[z].col(static_cast<int>(i)) =
                  path_action(cur, a.path(block[i]), gen);
            }
          }
          ModuleMap phi = ModuleMap::make(px, cur, std::move(phi_blocks));
          ModuleMap u = compose(h, phi);  // endomorphism of P(x)
          std::vector<RMatrix> inv_blocks(nv);
          bool invertible = true;
          for (int z = 0; z < nv && invertible; ++z) {
            auto inv = inverse_of<Rational>(u.block(z));
            if (!inv) {
              invertible = false;
            } else {
              inv_blocks[z] = std::move(*inv);
            }
          }
          if (!invertible) continue;
          ModuleMap u_inv = ModuleMap::make(px, px, std::move(inv_blocks));
          ModuleMap idem = compose(phi, compose(u_inv, h));  // cur -> cur
          SubObject complement = kernel_of(idem);
          stripped.push_back(x);
          cur = complement.object;
          changed = true;
        }
        if (changed) break;
      }
    }
  }
  return {std::move(cur), std::move(stripped)};
}

bool is_projective_module(const Representation& m) {
  if (m.is_zero_module()) return true;
  return syzygy(m).is_zero_module();
}

std::vector<ModuleMap> hom_space(const Representation& m, const Representation& n) {
  const Quiver& q = m.quiver();
  const int nv = q.vertex_count();
  std::vector<int> base(nv + 1, 0);
  for (int v = 0; v < nv; ++v) base[v + 1] = base[v] + n.dim(v) * m.dim(v);
  const int unknowns = base[nv];
  if (unknowns == 0) return {};
  auto var = [&](int v, int row, int col) { return base[v] + col * n.dim(v) + row; };

  int equations = 0;
  for (int a = 0; a < q.arrow_count(); ++a) {
    const Arrow& arrow = q.arrow(a);
    equations += n.dim(arrow.target) * m.dim(arrow.source);
  }
  RMatrix system = RMatrix::Zero(equations, unknowns);
  int eq = 0;
  for (int a = 0; a < q.arrow_count(); ++a) {
    const Arrow& arrow = q.arrow(a);
    const int z = arrow.source;
    const int w = arrow.target;
    for (int r = 0; r < n.dim(w); ++r) {
      for (int c = 0; c < m.dim(z); ++c) {
        // (N_a f_z)(r,c) - (f_w M_a)(r,c) = 0
        for (int k = 0; k < n.dim(z); ++k) {
          if (n.matrix(a)(r, k) == Rational(0)) continue;
          system(eq, var(z, k, c)) += n.matrix(a)(r, k);
        }
        for (int l = 0; l < m.dim(w); ++l) {
          if (m.matrix(a)(l, c) == Rational(0)) continue;
          system(eq, var(w, r, l)) -= m.matrix(a)(l, c);
        }
        ++eq;
      }
    }
  }
  RMatrix basis = kernel_basis<Rational>(std::move(system));
  std::vector<ModuleMap> result;
  result.reserve(basis.cols());
  for (int k = 0; k < basis.cols(); ++k) {
    std::vector<RMatrix> blocks(nv);
    for (int v = 0; v < nv; ++v) {
      blocks[v] = RMatrix::Zero(n.dim(v), m.dim(v));
      for (int c = 0; c < m.dim(v); ++c) {
        for (int r = 0; r < n.dim(v); ++r) {
          blocks[v](r, c) = basis(var(v, r, c), k);
        }
      }
    }
    result.push_back(ModuleMap::make(m, n, std::move(blocks)));
  }
  return result;
}

int hom_dim(const Representation& m, const Representation& n) {
  return static_cast<int>(hom_space(m, n).size());
}

namespace {

RVector vectorize(const ModuleMap& f) {
  const int nv = f.source().quiver().vertex_count();
  int total = 0;
  for (int v = 0; v < nv; ++v) total += f.block(v).rows() * f.block(v).cols();
  RVector out(total);
  int at = 0;
  for (int v = 0; v < nv; ++v) {
    for (int c = 0; c < f.block(v).cols(); ++c) {
      for (int r = 0; r < f.block(v).rows(); ++r) out(at++) = f.block(v)(r, c);
    }
  }
  return out;
}

}  // namespace

int stable_hom_dim(const Representation& m, const Representation& n) {
  const std::vector<ModuleMap> full = hom_space(m, n);
  if (full.empty()) return 0;
  // Maps factoring through a projective factor through the cover of n.
  Cover cover = projective_cover(n);
  const std::vector<ModuleMap> through = hom_space(m, cover.p0.rep);
  if (through.empty()) return static_cast<int>(full.size());
  const int len = static_cast<int>(vectorize(full.front()).size());
  RMatrix span(len, static_cast<int>(through.size()));
  for (std::size_t i = 0; i < through.size(); ++i) {
    span.col(static_cast<int>(i)) = vectorize(compose(cover.epi, through[i]));
  }
  return static_cast<int>(full.size()) - rank_of<Rational>(std::move(span));
}

int ext_dim(const Representation& m, const Representation& n, int i, int depth_cap) {
  if (i < 1) throw InternalError("ext_dim requires i >= 1");
  if (i + 1 > depth_cap) {
    throw ResolutionDepthExceededError("resolution depth " + std::to_string(i + 1) +
                                       " exceeds the cap of " + std::to_string(depth_cap));
  }
  // Minimal resolution P_{i+1} -> ... -> P_0 -> M with path matrices.
  std::vector<ProjectiveSum> ps;
  std::vector<PathMatrix> maps;  // maps[j-1] = d_j : P_j -> P_{j-1}
  Cover cover = projective_cover(m);
  SubObject ker = kernel_of(cover.epi);
  ps.push_back(std::move(cover.p0));
  for (int j = 1; j <= i + 1; ++j) {
    Cover next = projective_cover(ker.object);
    ModuleMap d = compose(ker.inclusion, next.epi);
    maps.push_back(to_path_matrix(next.p0, ps.back(), d));
    if (j <= i) ker = kernel_of(next.epi);
    ps.push_back(std::move(next.p0));
  }

  const PathAlgebra& a = m.algebra();
  auto hom_dim_of = [&](const ProjectiveSum& p) {
    int d = 0;
    for (int t : p.tops) d += n.dim(t);
    return d;
  };
  auto hom_matrix = [&](const ProjectiveSum& upper, const ProjectiveSum& lower,
                        const PathMatrix& pm) {
    // Hom(lower, N) -> Hom(upper, N); coordinates are (summand, basis of N at top).
    const int rows = hom_dim_of(upper);
    const int cols = hom_dim_of(lower);
    RMatrix mat = RMatrix::Zero(rows, cols);
    std::vector<int> upper_base(upper.tops.size() + 1, 0);
    for (std::size_t s = 0; s < upper.tops.size(); ++s) {
      upper_base[s + 1] = upper_base[s] + n.dim(upper.tops[s]);
    }
    std::vector<int> lower_base(lower.tops.size() + 1, 0);
    for (std::size_t t = 0; t < lower.tops.size(); ++t) {
      lower_base[t + 1] = lower_base[t] + n.dim(lower.tops[t]);
    }
    for (std::size_t s = 0; s < upper.tops.size(); ++s) {
      for (std::size_t t = 0; t < lower.tops.size(); ++t) {
        for (const PathMatrixEntry& e : pm[s][t]) {
          const RMatrix act = path_action(n, a.path(e.path_id));
          for (int cc = 0; cc < act.cols(); ++cc) {
            for (int rr = 0; rr < act.rows(); ++rr) {
              if (act(rr, cc) == Rational(0)) continue;
              mat(upper_base[s] + rr, lower_base[t] + cc) += e.coeff * act(rr, cc);
            }
          }
        }
      }
    }
    return mat;
  };

  // D_i : Hom(P_{i-1}, N) -> Hom(P_i, N) and D_{i+1} upward.
  RMatrix d_i = hom_matrix(ps[i], ps[i - 1], maps[i - 1]);
  RMatrix d_i1 = hom_matrix(ps[i + 1], ps[i], maps[i]);
  const int cycles = hom_dim_of(ps[i]) - rank_of<Rational>(d_i1);
  const int boundaries = rank_of<Rational>(std::move(d_i));
  return cycles - boundaries;
}

Representation regular_representation(AlgebraPtr algebra) {
  std::vector<int> tops(algebra->quiver().vertex_count());
  std::iota(tops.begin(), tops.end(), 0);
  return make_projective_sum(std::move(algebra), std::move(tops)).rep;
}

IsoResult is_isomorphic(const Representation& m, const Representation& n,
                        const SampleOptions& opts) {
  if (m.dims() != n.dims()) return {false, std::nullopt};
  if (m == n) return {true, ModuleMap::identity(m)};
  if (m.is_zero_module()) return {true, ModuleMap::zero(m, n)};
  const std::vector<ModuleMap> homs = hom_space(m, n);
  if (homs.empty()) return {false, std::nullopt};
  SplitMix64 rng(opts.seed);
  const int nv = m.quiver().vertex_count();
  for (int trial = 0; trial < opts.trials; ++trial) {
    std::vector<Rational> coeffs;
    coeffs.reserve(homs.size());
    for (std::size_t i = 0; i < homs.size(); ++i) {
      coeffs.push_back(Rational(rng.coefficient(opts.coefficient_bound)));
    }
    ModuleMap candidate = linear_combination(homs, coeffs);
    bool invertible = true;
    for (int v = 0; v < nv && invertible; ++v) {
      if (rank_of<Rational>(candidate.block(v)) != m.dim(v)) invertible = false;
    }
    if (invertible) return {true, std::move(candidate)};
  }
  return {false, std::nullopt};
}

// ---------------------------------------------------------------------------
// Projective dimension via path-module states.
//
// A state (y, K) stands for the cyclic module P(y)/span(K) where K is the
// antichain of minimal killed basis paths. Its syzygy is the direct sum,
// over q0 in K, of the state (target q0, minimal relation-avoiding r with
// q0·r in the ideal); those kill sets are proper relation suffixes, so the
// state space is finite and the DFS below is exact.
// ---------------------------------------------------------------------------

namespace {

struct PathState {
  int vertex;
  std::vector<std::vector<int>> kills;  // sorted arrow words
  bool operator<(const PathState& o) const {
    if (vertex != o.vertex) return vertex < o.vertex;
    return kills < o.kills;
  }
};

std::vector<std::vector<int>> successor_kills(const PathAlgebra& a,
                                              const std::vector<int>& q0) {
  const Quiver& q = a.quiver();
  const int end = q.arrow(q0.back()).target;
  std::vector<std::vector<int>> kills;
  std::vector<std::vector<int>> frontier{{}};
  // BFS over relation-avoiding extensions r; a kill is minimal when found.
  while (!frontier.empty()) {
    std::vector<std::vector<int>> next;
    for (const auto& r : frontier) {
      const int from = r.empty() ? end : q.arrow(r.back()).target;
      for (int ar : q.arrows_from(from)) {
        std::vector<int> ext = r;
        ext.push_back(ar);
        std::vector<int> word = q0;
        word.insert(word.end(), ext.begin(), ext.end());
        if (a.bound().relation_at_suffix(ext)) continue;  // r leaves the basis
        if (a.bound().relation_at_suffix(word)) {
          kills.push_back(std::move(ext));
        } else {
          next.push_back(std::move(ext));
        }
      }
    }
    frontier = std::move(next);
  }
  std::sort(kills.begin(), kills.end());
  return kills;
}

struct StateSolver {
  const PathAlgebra& a;
  std::map<PathState, int> memo;  // -1 encodes Infinite, -2 on-stack
  static constexpr int kInfinite = -1;
  static constexpr int kOnStack = -2;

  int solve(const PathState& st) {
    if (st.kills.empty()) return 0;
    auto it = memo.find(st);
    if (it != memo.end()) {
      if (it->second == kOnStack) return kInfinite;
      return it->second;
    }
    memo[st] = kOnStack;
    int best = 0;
    for (const auto& q0 : st.kills) {
      PathState succ;
      succ.vertex = a.quiver().arrow(q0.back()).target;
      succ.kills = successor_kills(a, q0);
      const int sub = solve(succ);
      if (sub == kInfinite) {
        memo[st] = kInfinite;
        return kInfinite;
      }
      best = std::max(best, 1 + sub);
    }
    memo[st] = best;
    return best;
  }
};

struct Decomposition {
  bool ok = false;
  std::vector<PathState> states;
};

// Split K into cyclic path-shaped summands: lift a top basis, check that the
// path orbits of the generators are independent and exhaust K.
Decomposition decompose_into_path_states(const Representation& k) {
  Decomposition out;
  const PathAlgebra& a = k.algebra();
  const Quiver& q = a.quiver();
  const int nv = q.vertex_count();
  QuotObject top = top_of(k);

  std::vector<std::vector<RVector>> per_vertex_vectors(nv);
  for (int v = 0; v < nv; ++v) {
    const int t = top.object.dim(v);
    if (t == 0) continue;
    auto lift = solve_exact<Rational>(top.projection.block(v), RMatrix::Identity(t, t));
    if (!lift) return out;
    for (int g = 0; g < t; ++g) {
      const RVector gen = lift->col(g);
      PathState st;
      st.vertex = v;
      // Walk the relation-avoiding extensions of e_v on the vector.
      std::vector<std::pair<int, RVector>> frontier{{a.trivial_path_id(v), gen}};
      per_vertex_vectors[v].push_back(gen);
      int survivors = 1;
      while (!frontier.empty()) {
        std::vector<std::pair<int, RVector>> next;
        for (auto& [pid, vec] : frontier) {
          for (int ar : q.arrows_from(a.target_of(pid))) {
            const int ext = a.extend_right(pid, ar);
            if (ext < 0) continue;
            RVector image = k.matrix(ar) * vec;
            if (image.isZero(Rational(0))) {
              st.kills.push_back(a.path(ext).arrows());
            } else {
              per_vertex_vectors[a.target_of(ext)].push_back(image);
              ++survivors;
              next.emplace_back(ext, std::move(image));
            }
          }
        }
        frontier = std::move(next);
      }
      std::sort(st.kills.begin(), st.kills.end());
      out.states.push_back(std::move(st));
      (void)survivors;
    }
  }
  // Directness and exhaustion: per vertex the collected vectors must be a
  // basis of K_v.
  for (int v = 0; v < nv; ++v) {
    const int count = static_cast<int>(per_vertex_vectors[v].size());
    if (count != k.dim(v)) return out;
    if (count == 0) continue;
    RMatrix stacked(k.dim(v), count);
    for (int i = 0; i < count; ++i) stacked.col(i) = per_vertex_vectors[v][i];
    if (rank_of<Rational>(std::move(stacked)) != count) return out;
  }
  out.ok = true;
  return out;
}

}  // namespace

ProjDim proj_dimension(const Representation& m, int level_cap) {
  Representation cur = m;
  for (int level = 0; level <= level_cap; ++level) {
    if (cur.is_zero_module()) return {ProjDim::Kind::Finite, level, true};
    SubObject omega = syzygy_sub(cur);
    if (omega.object.is_zero_module()) return {ProjDim::Kind::Finite, level, true};
    Decomposition dec = decompose_into_path_states(omega.object);
    if (dec.ok) {
      StateSolver solver{cur.algebra()};
      int best = 0;
      for (const PathState& st : dec.states) {
        const int pd = solver.solve(st);
        if (pd == StateSolver::kInfinite) return {ProjDim::Kind::Infinite, 0, true};
        best = std::max(best, pd);
      }
      return {ProjDim::Kind::Finite, level + 1 + best, true};
    }
    cur = std::move(omega.object);
  }
  return {ProjDim::Kind::AtLeast, level_cap, false};
}

ProjDim global_dimension(const AlgebraPtr& algebra, int level_cap) {
  const int nv = algebra->quiver().vertex_count();
  ProjDim result{ProjDim::Kind::Finite, 0, true};
  for (int v = 0; v < nv; ++v) {
    ProjDim pd = proj_dimension(simple(algebra, v), level_cap);
    if (pd.kind == ProjDim::Kind::Infinite) return pd;
    if (pd.kind == ProjDim::Kind::AtLeast) {
      result = ProjDim{ProjDim::Kind::AtLeast, std::max(result.value, pd.value), false};
    } else if (result.kind == ProjDim::Kind::Finite) {
      result.value = std::max(result.value, pd.value);
    }
  }
  return result;
}

bool gp_membership_exact(const Representation& m, int gorenstein_dim) {
  if (gorenstein_dim == 0) return true;
  if (m.is_zero_module()) return true;
  Representation reg = regular_representation(m.algebra_ptr());
  for (int i = 1; i <= gorenstein_dim; ++i) {
    if (ext_dim(m, reg, i) != 0) return false;
  }
  return true;
}

bool omega_tau_test(const Representation& m, int cy_m, const SampleOptions& opts) {
  StripResult sr = strip_projectives(m);
  if (sr.stable.is_zero_module()) return true;
  Representation t = tau_of_stripped(sr.stable);
  t = strip_projectives(t).stable;
  for (int k = 0; k < cy_m + 1; ++k) {
    if (t.is_zero_module()) break;
    t = strip_projectives(syzygy(t)).stable;
  }
  return is_isomorphic(t, sr.stable, opts).isomorphic;
}

Representation cosyzygy_gp(const Representation& m, int gorenstein_dim,
                           const SampleOptions& opts) {
  if (!gp_membership_exact(m, gorenstein_dim)) {
    throw NotGorensteinProjectiveError("module is not Gorenstein-projective");
  }
  StripResult sr = strip_projectives(m);
  if (sr.stable.is_zero_module()) return sr.stable;
  const Representation& s = sr.stable;
  const Quiver& q = s.quiver();
  const int nv = q.vertex_count();

  std::vector<int> tops;
  std::vector<ModuleMap> components;
  for (int x = 0; x < nv; ++x) {
    Representation px = projective(s.algebra_ptr(), x);
    for (ModuleMap& h : hom_space(s, px)) {
      tops.push_back(x);
      components.push_back(std::move(h));
    }
  }
  ProjectiveSum p = make_projective_sum(s.algebra_ptr(), tops);
  std::vector<RMatrix> blocks(nv);
  for (int z = 0; z < nv; ++z) {
    blocks[z] = RMatrix::Zero(p.rep.dim(z), s.dim(z));
    for (std::size_t c = 0; c < components.size(); ++c) {
      const RMatrix& hb = components[c].block(z);
      blocks[z].middleRows(p.offsets[c][z], hb.rows()) = hb;
    }
  }
  ModuleMap f = ModuleMap::make(s, p.rep, std::move(blocks));
  if (!f.is_injective()) {
    throw NotGorensteinProjectiveError("module does not embed into a projective");
  }
  Representation c = strip_projectives(cokernel_of(f).object).stable;
  Representation back = strip_projectives(syzygy(c)).stable;
  if (!is_isomorphic(back, s, opts).isomorphic) {
    throw NotGorensteinProjectiveError("cosyzygy round trip failed");
  }
  return c;
}

}  // namespace qgp
