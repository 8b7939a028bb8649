#include "quivergp/angulation.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "json.hpp"

namespace qgp {

Angulation validate_angulation(Angulation t) {
  std::vector<std::string> violations;
  if (t.m < 1) violations.push_back("m must be a positive integer");
  std::map<std::string, int> internal_count, boundary_count;
  for (std::size_t f = 0; f < t.faces.size(); ++f) {
    const Face& face = t.faces[f];
    if (t.m >= 1 && static_cast<int>(face.sides.size()) != t.m + 2) {
      violations.push_back("face " + std::to_string(f) + " has " +
                           std::to_string(face.sides.size()) + " sides, expected " +
                           std::to_string(t.m + 2));
    }
    std::set<std::string> seen_internal;
    for (const Side& s : face.sides) {
      if (s.internal) {
        if (!seen_internal.insert(s.label).second) {
          violations.push_back("internal arc '" + s.label + "' bounds face " +
                               std::to_string(f) + " twice (self-folded)");
        }
        ++internal_count[s.label];
      } else {
        ++boundary_count[s.label];
      }
    }
  }
  for (const auto& [label, count] : internal_count) {
    if (count != 2) {
      violations.push_back("internal arc '" + label + "' occurs in " +
                           std::to_string(count) + " faces, expected 2");
    }
    if (boundary_count.count(label)) {
      violations.push_back("label '" + label + "' is both internal and boundary");
    }
  }
  for (const auto& [label, count] : boundary_count) {
    if (count != 1) {
      violations.push_back("boundary segment '" + label + "' occurs in " +
                           std::to_string(count) + " faces, expected 1");
    }
  }
  if (!violations.empty()) {
    throw ValidationError("invalid angulation: " + violations.front(), violations);
  }
  return t;
}

Angulation parse_angulation(const std::string& json_text) {
  nlohmann::json doc = nlohmann::json::parse(json_text, nullptr, false);
  if (doc.is_discarded()) throw SchemaError("document is not valid JSON");
  if (!doc.is_object() || !doc.contains("m") || !doc.contains("faces")) {
    throw SchemaError("angulation document needs 'm' and 'faces'");
  }
  if (!doc["m"].is_number_integer()) throw SchemaError("'m' must be an integer");
  if (!doc["faces"].is_array()) throw SchemaError("'faces' must be an array");
  Angulation t;
  t.m = doc["m"].get<int>();
  for (const auto& face_doc : doc["faces"]) {
    if (!face_doc.is_object() || !face_doc.contains("sides") || !face_doc["sides"].is_array()) {
      throw SchemaError("each face needs a 'sides' array");
    }
    Face face;
    for (const auto& side_doc : face_doc["sides"]) {
      if (!side_doc.is_object() || !side_doc.contains("id") || !side_doc.contains("internal") ||
          !side_doc["id"].is_string() || !side_doc["internal"].is_boolean()) {
        throw SchemaError("each side needs a string 'id' and boolean 'internal'");
      }
      face.sides.push_back(Side{side_doc["id"].get<std::string>(),
                                side_doc["internal"].get<bool>()});
    }
    t.faces.push_back(std::move(face));
  }
  return validate_angulation(std::move(t));
}

std::string serialize_angulation(const Angulation& t) {
  nlohmann::ordered_json doc;
  doc["m"] = t.m;
  doc["faces"] = nlohmann::ordered_json::array();
  for (const Face& f : t.faces) {
    nlohmann::ordered_json sides = nlohmann::ordered_json::array();
    for (const Side& s : f.sides) {
      sides.push_back({{"id", s.label}, {"internal", s.internal}});
    }
    doc["faces"].push_back({{"sides", sides}});
  }
  return doc.dump(2) + "\n";
}

BoundQuiver bound_quiver_from_angulation(const Angulation& t) {
  std::set<std::string> arcs;
  for (const Face& f : t.faces) {
    for (const Side& s : f.sides) {
      if (s.internal) arcs.insert(s.label);
    }
  }
  std::vector<std::string> vertices(arcs.begin(), arcs.end());

  // Arrows: i -> j when side i follows side j clockwise within a face.
  std::vector<std::array<std::string, 3>> arrows;
  std::map<std::pair<std::string, std::string>, int> multiplicity;
  std::vector<std::vector<std::string>> relations_by_name;
  auto arrow_name = [&](const std::string& i, const std::string& j) {
    const int count = ++multiplicity[{i, j}];
    std::string name = i + ">" + j;
    if (count > 1) name += "#" + std::to_string(count);
    return name;
  };
  for (const Face& f : t.faces) {
    const int k = static_cast<int>(f.sides.size());
    std::vector<std::string> face_arrow(k);  // arrow from side p+1 to side p, if any
    for (int p = 0; p < k; ++p) {
      const Side& sj = f.sides[p];
      const Side& si = f.sides[(p + 1) % k];
      if (!sj.internal || !si.internal) continue;
      const std::string name = arrow_name(si.label, sj.label);
      face_arrow[p] = name;
      arrows.push_back({name, si.label, sj.label});
    }
    for (int p = 0; p < k; ++p) {
      // Triple (k_side, j_side, i_side) at positions p, p+1, p+2: the
      // composition (i->j)(j->k) is a zero-relation.
      const std::string& jk = face_arrow[p];
      const std::string& ij = face_arrow[(p + 1) % k];
      if (jk.empty() || ij.empty()) continue;
      relations_by_name.push_back({ij, jk});
    }
  }

  Quiver quiver = Quiver::make(std::move(vertices), std::move(arrows));
  std::vector<Path> relations;
  for (const auto& rel : relations_by_name) {
    relations.push_back(
        Path::of({quiver.arrow_index(rel[0]), quiver.arrow_index(rel[1])}, quiver));
  }
  return BoundQuiver::make(std::move(quiver), std::move(relations));
}

AngulationReport verify_angulation_properties(const AlgebraPtr& algebra, int m) {
  const BoundQuiver& bound = algebra->bound();
  const Quiver& q = algebra->quiver();
  AngulationReport report;
  GentleProfile profile = gentle_profile(bound);
  report.gentle = profile.is_gentle;
  if (!profile.is_gentle) {
    for (const auto& v : profile.violations) report.violations.push_back(v);
  }
  for (const auto& cycle : profile.saturated_cycles) {
    report.saturated_cycle_lengths.push_back(static_cast<int>(cycle.size()));
    if (static_cast<int>(cycle.size()) != m + 2) {
      std::string arrows;
      for (int a : cycle) arrows += (arrows.empty() ? "" : ".") + q.arrow(a).name;
      report.violations.push_back("saturated cycle '" + arrows + "' has length " +
                                  std::to_string(cycle.size()) + ", expected " +
                                  std::to_string(m + 2));
    }
  }

  // Longest chain of consecutive relations using no arrow of a saturated
  // cycle; in a gentle algebra relation chains stay on or off cycles.
  std::set<int> cycle_arrows;
  for (const auto& cycle : profile.saturated_cycles) {
    cycle_arrows.insert(cycle.begin(), cycle.end());
  }
  std::vector<std::vector<int>> succ(q.arrow_count());
  for (int x = 0; x < q.arrow_count(); ++x) {
    if (cycle_arrows.count(x)) continue;
    for (int y : q.arrows_from(q.arrow(x).target)) {
      if (cycle_arrows.count(y)) continue;
      if (bound.quadratic_in_ideal(x, y)) succ[x].push_back(y);
    }
  }
  std::map<int, int> longest_from;  // relations on the longest chain from arrow
  auto chain = [&](auto&& self, int at) -> int {
    auto it = longest_from.find(at);
    if (it != longest_from.end()) {
      if (it->second < 0) {
        report.violations.push_back("off-cycle relation chain through '" +
                                    q.arrow(at).name + "' closes a cycle");
        return 0;
      }
      return it->second;
    }
    longest_from[at] = -1;  // visiting
    int best = 0;
    for (int nxt : succ[at]) best = std::max(best, 1 + self(self, nxt));
    longest_from[at] = best;
    return best;
  };
  for (int a = 0; a < q.arrow_count(); ++a) {
    if (cycle_arrows.count(a)) continue;
    report.max_offcycle_chain = std::max(report.max_offcycle_chain, chain(chain, a));
  }
  if (report.max_offcycle_chain > m - 1) {
    report.violations.push_back(
        "a chain of " + std::to_string(report.max_offcycle_chain) +
        " consecutive relations avoids all saturated cycles; at most " +
        std::to_string(m - 1) + " is allowed");
  }

  GorensteinInfo info = gorenstein_info(algebra);
  report.gorenstein = info.dimension;
  if (info.dimension.kind != ProjDim::Kind::Finite || info.dimension.value > m) {
    report.violations.push_back("Gorenstein dimension exceeds m = " + std::to_string(m));
  }
  report.ok = report.violations.empty();
  return report;
}

void check_angulation_properties(const AlgebraPtr& algebra, int m) {
  AngulationReport report = verify_angulation_properties(algebra, m);
  if (!report.ok) {
    throw PropertyViolationError("angulation-derived algebra violates its structure theory",
                                 report.violations);
  }
}

namespace {

struct Region {
  std::vector<int> corners;  // clockwise
  std::vector<Side> sides;   // sides[i] joins corners[i] to corners[i+1 mod k]
};

// Split regions along chords; corners are opaque ids.
std::vector<Face> split_into_faces(Region initial,
                                   const std::vector<std::pair<std::pair<int, int>, Side>>& chords) {
  std::vector<Region> regions{std::move(initial)};
  for (const auto& [ends, side] : chords) {
    bool placed = false;
    for (std::size_t r = 0; r < regions.size() && !placed; ++r) {
      Region& region = regions[r];
      auto pa = std::find(region.corners.begin(), region.corners.end(), ends.first);
      auto pb = std::find(region.corners.begin(), region.corners.end(), ends.second);
      if (pa == region.corners.end() || pb == region.corners.end()) continue;
      int ia = static_cast<int>(pa - region.corners.begin());
      int ib = static_cast<int>(pb - region.corners.begin());
      if (ia == ib) throw ValidationError("arc endpoints coincide");
      const int k = static_cast<int>(region.corners.size());
      if ((ia + 1) % k == ib || (ib + 1) % k == ia) {
        throw ValidationError("arc '" + side.label + "' is parallel to an existing side");
      }
      if (ia > ib) std::swap(ia, ib);
      Region first, second;
      for (int i = ia; i <= ib; ++i) first.corners.push_back(region.corners[i]);
      for (int i = ia; i < ib; ++i) first.sides.push_back(region.sides[i]);
      first.sides.push_back(side);  // closes ib -> ia
      for (int i = ib; i != ia; i = (i + 1) % k) {
        second.corners.push_back(region.corners[i]);
        second.sides.push_back(region.sides[i]);
      }
      second.corners.push_back(region.corners[ia]);
      second.sides.push_back(side);  // closes ia -> ib
      regions[r] = std::move(first);
      regions.push_back(std::move(second));
      placed = true;
    }
    if (!placed) {
      throw ValidationError("arc '" + side.label +
                            "' crosses a previous arc (no region contains both endpoints)");
    }
  }
  std::vector<Face> faces;
  for (Region& region : regions) faces.push_back(Face{std::move(region.sides)});
  std::sort(faces.begin(), faces.end(), [](const Face& x, const Face& y) {
    std::vector<std::string> lx, ly;
    for (const Side& s : x.sides) lx.push_back(s.label);
    for (const Side& s : y.sides) ly.push_back(s.label);
    return lx < ly;
  });
  return faces;
}

}  // namespace

Angulation polygon_fixture(int n_vertices, int m,
                           const std::vector<std::pair<int, int>>& arcs) {
  if (n_vertices < 3) throw ValidationError("polygon needs at least 3 vertices");
  Region disk;
  for (int i = 0; i < n_vertices; ++i) {
    disk.corners.push_back(i);
    disk.sides.push_back(Side{"b" + std::to_string(i), false});
  }
  std::vector<std::pair<std::pair<int, int>, Side>> chords;
  std::set<std::pair<int, int>> seen;
  for (auto [a, b] : arcs) {
    if (a < 0 || b < 0 || a >= n_vertices || b >= n_vertices) {
      throw ValidationError("arc endpoint out of range");
    }
    if (a > b) std::swap(a, b);
    if (!seen.insert({a, b}).second) throw ValidationError("duplicate arc");
    chords.push_back({{a, b},
                      Side{"d" + std::to_string(a) + "_" + std::to_string(b), true}});
  }
  Angulation t;
  t.m = m;
  t.faces = split_into_faces(std::move(disk), chords);
  return validate_angulation(std::move(t));
}

namespace {

struct AnnulusCorner {
  bool outer;
  int index;
  int copy;  // 0 or 1; only the cut endpoints have two copies
  bool operator<(const AnnulusCorner& o) const {
    if (outer != o.outer) return outer;
    if (index != o.index) return index < o.index;
    return copy < o.copy;
  }
};

std::string annulus_point_name(bool outer, int index) {
  return (outer ? std::string("o") : std::string("i")) + std::to_string(index);
}

}  // namespace

Angulation annulus_fixture(int outer, int inner, int m,
                           const std::vector<AnnulusArc>& arcs) {
  if (outer < 1 || inner < 1) {
    throw ValidationError("annulus boundaries need at least one marked point each");
  }
  std::vector<AnnulusArc> normalized;
  std::set<std::pair<std::string, std::string>> seen;
  for (AnnulusArc arc : arcs) {
    const int limit_from = arc.from_outer ? outer : inner;
    const int limit_to = arc.to_outer ? outer : inner;
    if (arc.from < 0 || arc.from >= limit_from || arc.to < 0 || arc.to >= limit_to) {
      throw ValidationError("arc endpoint out of range");
    }
    // Bridging arcs: outer endpoint first. Peripheral: smaller index first.
    if (!arc.from_outer && arc.to_outer) {
      std::swap(arc.from_outer, arc.to_outer);
      std::swap(arc.from, arc.to);
    } else if (arc.from_outer == arc.to_outer && arc.from > arc.to) {
      std::swap(arc.from, arc.to);
    }
    auto key = std::make_pair(annulus_point_name(arc.from_outer, arc.from),
                              annulus_point_name(arc.to_outer, arc.to));
    if (!seen.insert(key).second) {
      throw ValidationError("arcs with identical endpoints are ambiguous (windings are "
                            "not modeled); angulate such surfaces via explicit face lists");
    }
    normalized.push_back(arc);
  }
  std::sort(normalized.begin(), normalized.end(), [](const AnnulusArc& x, const AnnulusArc& y) {
    auto tup = [](const AnnulusArc& a) {
      return std::tuple(!(a.from_outer && !a.to_outer), a.from, a.to_outer ? 1 : 0, a.to);
    };
    return tup(x) < tup(y);
  });
  if (normalized.empty() || !(normalized.front().from_outer && !normalized.front().to_outer)) {
    throw ValidationError("an annulus angulation needs at least one bridging arc");
  }
  const AnnulusArc cut = normalized.front();
  normalized.erase(normalized.begin());

  // Cut the annulus along `cut` into a disk. Corner ids index this list.
  std::vector<AnnulusCorner> corners;
  for (int i = 0; i < outer; ++i) corners.push_back({true, (cut.from + i) % outer, 0});
  corners.push_back({true, cut.from, 1});
  for (int i = 0; i < inner; ++i) {
    corners.push_back({false, ((cut.to - i) % inner + inner) % inner, 0});
  }
  corners.push_back({false, cut.to, 1});

  auto corner_id = [&](const AnnulusCorner& c) {
    for (std::size_t i = 0; i < corners.size(); ++i) {
      if (corners[i].outer == c.outer && corners[i].index == c.index &&
          corners[i].copy == c.copy) {
        return static_cast<int>(i);
      }
    }
    throw InternalError("annulus corner not found");
  };

  const std::string cut_label = "d_" + annulus_point_name(true, cut.from) + "_" +
                                annulus_point_name(false, cut.to);
  Region disk;
  for (std::size_t i = 0; i < corners.size(); ++i) disk.corners.push_back(static_cast<int>(i));
  // Sides: outer segments, cut copy, inner segments (reverse traversal), cut copy.
  for (int i = 0; i < outer; ++i) {
    disk.sides.push_back(Side{"bo" + std::to_string((cut.from + i) % outer), false});
  }
  disk.sides.push_back(Side{cut_label, true});
  for (int i = 0; i < inner; ++i) {
    disk.sides.push_back(
        Side{"bi" + std::to_string((((cut.to - i - 1) % inner) + inner) % inner), false});
  }
  disk.sides.push_back(Side{cut_label, true});

  // Resolve arcs to corner ids; endpoints equal to a cut endpoint are
  // ambiguous between the two copies. Deterministic backtracking: the
  // lexicographically first copy assignment under which every chord fits a
  // region wins.
  struct PendingChord {
    std::vector<int> from_choices, to_choices;
    Side side;
  };
  std::vector<PendingChord> pending;
  for (const AnnulusArc& arc : normalized) {
    PendingChord chord;
    chord.side = Side{"d_" + annulus_point_name(arc.from_outer, arc.from) + "_" +
                          annulus_point_name(arc.to_outer, arc.to),
                      true};
    auto choices = [&](bool is_outer, int idx) {
      std::vector<int> ids{corner_id({is_outer, idx, 0})};
      const bool is_cut_end =
          (is_outer && idx == cut.from) || (!is_outer && idx == cut.to);
      if (is_cut_end) ids.push_back(corner_id({is_outer, idx, 1}));
      return ids;
    };
    chord.from_choices = choices(arc.from_outer, arc.from);
    chord.to_choices = choices(arc.to_outer, arc.to);
    pending.push_back(std::move(chord));
  }

  std::vector<Face> faces;
  std::vector<std::pair<std::pair<int, int>, Side>> chosen(pending.size());
  auto attempt = [&](auto&& self, std::size_t at) -> bool {
    if (at == pending.size()) {
      try {
        faces = split_into_faces(disk, chosen);
        return true;
      } catch (const ValidationError&) {
        return false;
      }
    }
    for (int f : pending[at].from_choices) {
      for (int t : pending[at].to_choices) {
        chosen[at] = {{f, t}, pending[at].side};
        if (self(self, at + 1)) return true;
      }
    }
    return false;
  };
  if (!attempt(attempt, 0)) {
    throw ValidationError("annulus arcs cross (no noncrossing placement exists)");
  }
  Angulation t;
  t.m = m;
  t.faces = std::move(faces);
  return validate_angulation(std::move(t));
}

namespace {

void enumerate_chain(int i, int j, int m,
                     std::vector<std::vector<std::pair<int, int>>>* out);

// All ways to angulate the sub-polygon with corners i..j closed by (i, j).
std::vector<std::vector<std::pair<int, int>>> chain_results(int i, int j, int m) {
  std::vector<std::vector<std::pair<int, int>>> out;
  enumerate_chain(i, j, m, &out);
  return out;
}

void enumerate_chain(int i, int j, int m,
                     std::vector<std::vector<std::pair<int, int>>>* out) {
  if (j == i + 1) {
    out->push_back({});
    return;
  }
  // The face containing the closing edge has corners i = c_0 < ... < c_{m+1} = j.
  std::vector<int> mids(m);
  auto choose = [&](auto&& self, int pos, int low) -> void {
    if (pos == m) {
      std::vector<int> c{i};
      c.insert(c.end(), mids.begin(), mids.end());
      c.push_back(j);
      // Each gap must itself be angulable: size residue 0 mod m.
      for (std::size_t t = 0; t + 1 < c.size(); ++t) {
        if ((c[t + 1] - c[t] - 1) % m != 0) return;
      }
      std::vector<std::vector<std::vector<std::pair<int, int>>>> gap_choices;
      for (std::size_t t = 0; t + 1 < c.size(); ++t) {
        gap_choices.push_back(chain_results(c[t], c[t + 1], m));
        if (gap_choices.back().empty()) return;
      }
      std::vector<std::pair<int, int>> face_arcs;
      for (std::size_t t = 0; t + 1 < c.size(); ++t) {
        if (c[t + 1] > c[t] + 1) face_arcs.emplace_back(c[t], c[t + 1]);
      }
      std::vector<std::pair<int, int>> acc = face_arcs;
      auto cross = [&](auto&& inner, std::size_t t) -> void {
        if (t == gap_choices.size()) {
          out->push_back(acc);
          return;
        }
        for (const auto& sub : gap_choices[t]) {
          const std::size_t mark = acc.size();
          acc.insert(acc.end(), sub.begin(), sub.end());
          inner(inner, t + 1);
          acc.resize(mark);
        }
      };
      cross(cross, 0);
      return;
    }
    for (int k = low; k < j; ++k) {
      mids[pos] = k;
      self(self, pos + 1, k + 1);
    }
  };
  choose(choose, 0, i + 1);
}

}  // namespace

std::vector<std::vector<std::pair<int, int>>> enumerate_polygon_angulations(int n, int m) {
  if (n < 3 || (n - 2) % m != 0) return {};
  // Close along the boundary edge (0, n-1); arcs never include it.
  auto results = chain_results(0, n - 1, m);
  for (auto& arcs : results) std::sort(arcs.begin(), arcs.end());
  std::sort(results.begin(), results.end());
  return results;
}

}  // namespace qgp
