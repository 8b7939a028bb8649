#pragma once

// Finite-dimensional representations of a bound quiver over exact rationals,
// module maps between them, and the elementary sub/quotient constructions.
// A representation stores one matrix per arrow mapping the source-vertex
// space to the target-vertex space (columns indexed by the source basis);
// the composite along every relation vanishes, checked at construction.

#include <span>
#include <vector>

#include "quivergp/linalg.hpp"
#include "quivergp/path_algebra.hpp"

namespace qgp {

class Representation {
 public:
  static Representation make(AlgebraPtr algebra, std::vector<int> dims,
                             std::vector<RMatrix> matrices);
  static Representation zero(AlgebraPtr algebra);

  const AlgebraPtr& algebra_ptr() const { return algebra_; }
  const PathAlgebra& algebra() const { return *algebra_; }
  const Quiver& quiver() const { return algebra_->quiver(); }

  int dim(int v) const { return dims_[v]; }
  const std::vector<int>& dims() const { return dims_; }
  int total_dim() const;
  bool is_zero_module() const { return total_dim() == 0; }
  const RMatrix& matrix(int arrow) const { return matrices_[arrow]; }

  bool operator==(const Representation& other) const;

 private:
  Representation() = default;
  AlgebraPtr algebra_;
  std::vector<int> dims_;
  std::vector<RMatrix> matrices_;
};

// Action of a path on the representation: the composite matrix, applying the
// first arrow of the path first.
RMatrix path_action(const Representation& m, const Path& p);
RVector path_action(const Representation& m, const Path& p, const RVector& v);

class ModuleMap {
 public:
  // Validates the commuting squares target_a * f_src = f_tgt * source_a.
  static ModuleMap make(Representation source, Representation target,
                        std::vector<RMatrix> blocks);
  static ModuleMap zero(Representation source, Representation target);
  static ModuleMap identity(const Representation& m);

  const Representation& source() const { return source_; }
  const Representation& target() const { return target_; }
  const RMatrix& block(int v) const { return blocks_[v]; }

  bool is_zero() const;
  bool is_injective() const;
  bool is_surjective() const;
  bool is_isomorphism() const;

 private:
  ModuleMap() = default;
  Representation source_, target_;
  std::vector<RMatrix> blocks_;
};

ModuleMap compose(const ModuleMap& outer, const ModuleMap& inner);  // outer ∘ inner
ModuleMap linear_combination(std::span<const ModuleMap> maps,
                             std::span<const Rational> coeffs);

struct SubObject {
  Representation object;
  ModuleMap inclusion;  // object -> ambient
};
struct QuotObject {
  Representation object;
  ModuleMap projection;  // ambient -> object
};

SubObject kernel_of(const ModuleMap& f);
QuotObject cokernel_of(const ModuleMap& f);

// rad M = sum of all arrow images; top M = M / rad M; soc M = joint kernel
// of all arrow actions.
SubObject radical_of(const Representation& m);
QuotObject top_of(const Representation& m);
SubObject socle_of(const Representation& m);

// P(x): basis = relation-avoiding paths starting at x, arrows act by right
// extension. I(x): basis = relation-avoiding paths ending at x, arrows act
// by stripping the leading arrow. S(x): one-dimensional at x.
Representation projective(AlgebraPtr algebra, int vertex);
Representation injective(AlgebraPtr algebra, int vertex);
Representation simple(AlgebraPtr algebra, int vertex);

// The cyclic module generated by a basis path p: the submodule of P(source p)
// spanned by the right extensions of p; projective iff nothing kills p.
Representation path_module(AlgebraPtr algebra, int path_id);

Representation direct_sum(const Representation& a, const Representation& b);

}  // namespace qgp
