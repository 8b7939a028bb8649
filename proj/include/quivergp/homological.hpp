#pragma once

// Projective covers, syzygies, minimal presentations, the Nakayama functor on
// projectives, the AR translate, Hom/Ext spaces, isomorphism testing with
// exact certificates, projective/global dimension with exact infinite
// detection, and the Gorenstein-projective tests.

#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "quivergp/representation.hpp"

namespace qgp {

// ⊕_s P(tops[s]) with a path-indexed basis: at vertex z the basis is the
// concatenation over summands of the paths tops[s] -> z in global order.
struct ProjectiveSum {
  AlgebraPtr algebra;
  std::vector<int> tops;
  Representation rep;
  std::vector<std::vector<int>> offsets;  // [summand][vertex] -> block start
  int position(int summand, int path_id) const;
  int generator_position(int summand) const;  // column of e_top at the top vertex
};
ProjectiveSum make_projective_sum(AlgebraPtr algebra, std::vector<int> tops);

// ⊕_s I(socles[s]); at vertex z the basis concatenates paths z -> socles[s].
struct InjectiveSum {
  AlgebraPtr algebra;
  std::vector<int> socles;
  Representation rep;
  std::vector<std::vector<int>> offsets;
  int position(int summand, int path_id) const;
};
InjectiveSum make_injective_sum(AlgebraPtr algebra, std::vector<int> socles);

struct Cover {
  ProjectiveSum p0;
  ModuleMap epi;  // p0.rep -> M, kernel inside rad p0
};
Cover projective_cover(const Representation& m);

Representation syzygy(const Representation& m);
SubObject syzygy_sub(const Representation& m);  // with inclusion into the cover

struct Presentation {
  ProjectiveSum p1;
  ProjectiveSum p0;
  ModuleMap map;  // p1.rep -> p0.rep, image = ker(p0 -> M)
};
Presentation min_proj_presentation(const Representation& m);

// A map between projective sums written in the path algebra: entry (s, t)
// lists (path y_t -> x_s, coefficient) pairs; the component map sends the
// generator of P(x_s) to the sum of those paths inside P(y_t).
struct PathMatrixEntry {
  int path_id;
  Rational coeff;
};
using PathMatrix = std::vector<std::vector<std::vector<PathMatrixEntry>>>;
PathMatrix to_path_matrix(const ProjectiveSum& src, const ProjectiveSum& dst,
                          const ModuleMap& f);

struct InjectiveMap {
  InjectiveSum source;
  InjectiveSum target;
  ModuleMap map;
};
// ν: P(x) -> I(x); a component acting by a path acts on path-ending bases by
// stripping that path from the end.
InjectiveMap nakayama(const ProjectiveSum& src, const ProjectiveSum& dst,
                      const ModuleMap& f);

// τM = ker ν p1 for a minimal projective presentation. The input must carry
// no projective direct summand (ProjectiveSummandError otherwise); τ0 = 0.
Representation tau(const Representation& m);

struct StripResult {
  Representation stable;
  std::vector<int> stripped_tops;  // vertices of peeled projective summands
};
StripResult strip_projectives(const Representation& m);
bool is_projective_module(const Representation& m);
// Convenience: tau after stripping; projectives map to 0.
Representation tau_stable(const Representation& m);

std::vector<ModuleMap> hom_space(const Representation& m, const Representation& n);
int hom_dim(const Representation& m, const Representation& n);
// Hom modulo maps factoring through a projective.
int stable_hom_dim(const Representation& m, const Representation& n);

// dim Ext^i(M, N) via the minimal projective resolution of M, i >= 1.
int ext_dim(const Representation& m, const Representation& n, int i, int depth_cap = 64);

Representation regular_representation(AlgebraPtr algebra);  // ⊕_x P(x)

struct SampleOptions {
  std::uint64_t seed = 1;
  int trials = 8;
  std::int64_t coefficient_bound = 1'000'000;
};
struct IsoResult {
  bool isomorphic;
  std::optional<ModuleMap> certificate;  // present exactly when isomorphic
};
// Positive answers carry an exact, verified certificate. Negative answers
// are sampled: the failure probability of each trial is at most
// total_dim / (2 * coefficient_bound) when an isomorphism exists.
IsoResult is_isomorphic(const Representation& m, const Representation& n,
                        const SampleOptions& opts = {});

struct ProjDim {
  enum class Kind { Finite, Infinite, AtLeast };
  Kind kind = Kind::Finite;
  int value = 0;   // the dimension, or the cap for AtLeast
  bool exact = true;
  bool finite() const { return kind == Kind::Finite; }
};
ProjDim proj_dimension(const Representation& m, int level_cap = 64);
ProjDim global_dimension(const AlgebraPtr& algebra, int level_cap = 64);

// Ext^i(M, Λ) = 0 for 1 <= i <= d; every module passes when d = 0.
bool gp_membership_exact(const Representation& m, int gorenstein_dim);

// Stable-category test: Ω^{m+1} τ M ≅ M, stripping projective summands after
// every functor application. Projectives pass by definition.
bool omega_tau_test(const Representation& m, int cy_m, const SampleOptions& opts = {});

// Inverse of Ω on the stable GP category: cokernel of a left projective
// approximation, stripped, verified by the round trip Ω(ΣM) ≅ M.
Representation cosyzygy_gp(const Representation& m, int gorenstein_dim,
                           const SampleOptions& opts = {});

}  // namespace qgp
