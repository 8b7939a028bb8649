#pragma once

// Structural analysis of a monomial bound quiver: the relation-cycle
// decomposition, the stably-3-Calabi-Yau arithmetic, potentials and cyclic
// derivatives, gentleness with saturated cycles and critical paths, the
// Gorenstein dimension, and the Jacobian / 2-CY-tilted classification.

#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "quivergp/homological.hpp"
#include "quivergp/path_algebra.hpp"
#include "quivergp/rational.hpp"

namespace qgp {

struct CycleComponent {
  std::vector<int> cycle;       // arrows, canonical (lexicographically minimal) rotation
  int cycle_length = 0;         // n_i
  int relation_length = 0;      // r_i
  std::vector<Path> relations;  // F_i, all windows, one per starting arrow
};

struct RelationCycleDecomposition {
  std::vector<CycleComponent> components;
};

struct StructureFailure {
  std::string kind;  // conflicting-successor | open-chain | arrow-reuse |
                     // unequal-lengths | missing-window
  std::string detail;
  std::vector<Path> witnesses;
};

using DecompositionResult = std::variant<RelationCycleDecomposition, StructureFailure>;
DecompositionResult relation_cycle_decomposition(const BoundQuiver& a);

struct CyFailure {
  int component;
  int cycle_length;
  int relation_length;
};
// r_i = b_i n_i - 1 with b_i a positive integer, per component.
using StablyThreeCYResult = std::variant<std::vector<int>, CyFailure>;
StablyThreeCYResult stably_3cy_test(const RelationCycleDecomposition& dec);

struct PotentialTerm {
  std::vector<int> cycle;  // canonical rotation
  Rational coeff;
  int exponent;
};
struct Potential {
  std::vector<PotentialTerm> terms;  // sorted by cycle, then exponent
};
Potential build_potential(const RelationCycleDecomposition& dec, const std::vector<int>& b);
std::string format_potential(const Potential& w, const Quiver& q);

// The cyclic derivative: for every occurrence of the arrow in the expanded
// cycle power, the rotated remainder, like terms combined.
std::vector<std::pair<Rational, Path>> cyclic_derivative(const Potential& w, int arrow,
                                                         const Quiver& q);

struct JacobianMatch {
  int arrow;
  Path relation;
  Rational scalar;  // leading coefficient divided out (valid in char 0)
};
struct JacobianReport {
  bool matches = false;
  std::vector<JacobianMatch> matched;
  std::vector<Path> missing;  // relations no derivative produces
  std::vector<Path> extra;    // derivative paths outside the relation set
};
// Throws NonMonomialDerivativeError when a derivative is not a single path.
JacobianReport jacobian_check(const BoundQuiver& a, const Potential& w);

struct GentleProfile {
  bool is_gentle = false;
  bool is_string = false;
  std::vector<std::string> violations;
  std::vector<std::vector<int>> saturated_cycles;  // canonical rotations
  std::vector<int> gentle_arrows;
  std::vector<Path> critical_paths;  // maximal ones, each with >= 1 relation
  int n_lambda = 0;
};
GentleProfile gentle_profile(const BoundQuiver& a);

struct GorensteinInfo {
  ProjDim dimension;            // proj.dim of the injective cogenerator
  bool via_critical_paths = false;
  int n_lambda = 0;
  std::vector<ProjDim> injective_pd;  // per vertex, when computed homologically
};
GorensteinInfo gorenstein_info(const AlgebraPtr& algebra);
// Throws NotGorensteinError unless the dimension is exactly finite.
int gorenstein_dimension(const AlgebraPtr& algebra);

struct RelationShapeReport {
  bool ok = false;
  std::vector<Path> violating;  // relations on neither a saturated 3-cycle nor a loop square
};
// Pre: profile.is_gentle (NotGentleError otherwise).
RelationShapeReport gentle_2cy_relation_shape(const BoundQuiver& a,
                                              const GentleProfile& profile);

enum class Verdict { Jacobian2CYTilted, Not2CYTilted };

struct Classification {
  Verdict verdict = Verdict::Not2CYTilted;
  std::string failed_stage;  // "", "decomposition", "gorenstein-dimension", "stably-3cy"
  DecompositionResult decomposition;
  GorensteinInfo gorenstein;
  std::optional<std::vector<int>> exponents;
  std::optional<CyFailure> cy_failure;
  std::optional<Potential> potential;
  std::optional<JacobianReport> jacobian;
};
// Jacobian2CYTilted iff the decomposition succeeds, the Gorenstein dimension
// is exactly <= 1, and the stably-3-CY arithmetic holds; the constructed
// potential is then attached with jacobian_check asserted true.
Classification classify(const AlgebraPtr& algebra);

struct SingularityInvariants {
  std::vector<std::pair<int, int>> pairs;  // (r_i - 1, n_i)
  long long total = 0;                     // sum (r_i - 1) * n_i
};
SingularityInvariants singularity_invariants(const RelationCycleDecomposition& dec);

// Canonical (lexicographically minimal) rotation of a cyclic arrow word.
std::vector<int> canonical_rotation(std::vector<int> cycle);

}  // namespace qgp
