#pragma once

// Combinatorial (m+2)-angulations of marked surfaces as clockwise face lists,
// the derived bound quiver (arrows between clockwise-adjacent internal arcs,
// quadratic relations from clockwise-consecutive internal triples), builders
// for disk and annulus fixtures, and the structural property report.

#include <string>
#include <utility>
#include <vector>

#include "quivergp/gorenstein.hpp"
#include "quivergp/quiver.hpp"

namespace qgp {

struct Side {
  std::string label;
  bool internal = false;
  bool operator==(const Side&) const = default;
};

struct Face {
  std::vector<Side> sides;  // clockwise
  bool operator==(const Face&) const = default;
};

struct Angulation {
  int m = 1;
  std::vector<Face> faces;
  bool operator==(const Angulation&) const = default;
};

// Validates: every face has m+2 sides, every internal label occurs in exactly
// two faces and at most once per face, every boundary label exactly once.
Angulation validate_angulation(Angulation t);
Angulation parse_angulation(const std::string& json_text);
std::string serialize_angulation(const Angulation& t);

// Vertices = internal arcs; and for sides j at position p, i at position p+1
// of one face (both internal), an arrow i -> j. Clockwise-consecutive
// internal triples (k, j, i) put the quadratic (i->j)(j->k) into the ideal.
BoundQuiver bound_quiver_from_angulation(const Angulation& t);

struct AngulationReport {
  bool ok = false;
  bool gentle = false;
  std::vector<int> saturated_cycle_lengths;
  int max_offcycle_chain = 0;  // consecutive relations outside saturated cycles
  ProjDim gorenstein;          // computed dimension, expected <= m
  std::vector<std::string> violations;
};
AngulationReport verify_angulation_properties(const AlgebraPtr& algebra, int m);
// Throws PropertyViolationError when the report is not ok.
void check_angulation_properties(const AlgebraPtr& algebra, int m);

// Disk: a convex polygon with vertices 0..n-1 clockwise, boundary segment i
// joining i to i+1 (mod n), arcs as noncrossing corner pairs.
Angulation polygon_fixture(int n_vertices, int m,
                           const std::vector<std::pair<int, int>>& arcs);

// Annulus: `outer` marked points clockwise on the outer boundary, `inner`
// points on the inner boundary; arcs join boundary points. At least one
// bridging arc is required (the surface is cut along the first one); arcs
// with identical endpoint pairs are rejected.
struct AnnulusArc {
  bool from_outer = true;
  int from = 0;
  bool to_outer = true;
  int to = 0;
};
Angulation annulus_fixture(int outer, int inner, int m,
                           const std::vector<AnnulusArc>& arcs);

// All (m+2)-angulations of the n-gon, as arc sets (empty result when n has
// the wrong residue). Drives the exhaustive fixture families.
std::vector<std::vector<std::pair<int, int>>> enumerate_polygon_angulations(int n, int m);

}  // namespace qgp
