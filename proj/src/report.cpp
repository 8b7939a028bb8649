#include "quivergp/report.hpp"

#include <set>
#include <sstream>

namespace qgp {

std::string input_digest(const std::string& bytes) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  std::ostringstream os;
  os << "fnv1a64:" << std::hex << h;
  return os.str();
}

Json report_header(const std::string& input_bytes) {
  Json doc;
  doc["tool_version"] = kToolVersion;
  doc["schema_version"] = kReportSchemaVersion;
  doc["input_digest"] = input_digest(input_bytes);
  return doc;
}

Json json_of_path(const Path& p, const Quiver& q) { return p.str(q); }

Json json_of_dims(const Representation& m) {
  Json out = Json::object();
  for (int v = 0; v < m.quiver().vertex_count(); ++v) {
    out[m.quiver().vertex_label(v)] = m.dim(v);
  }
  return out;
}

Json json_of_projdim(const ProjDim& pd) {
  switch (pd.kind) {
    case ProjDim::Kind::Finite:
      return pd.value;
    case ProjDim::Kind::Infinite:
      return "infinite";
    case ProjDim::Kind::AtLeast:
      return ">=" + std::to_string(pd.value) + " (cap hit, inexact)";
  }
  return Json();
}

Json json_of_gentle(const GentleProfile& profile, const Quiver& q) {
  Json out;
  out["is_gentle"] = profile.is_gentle;
  out["is_string"] = profile.is_string;
  out["violations"] = profile.violations;
  Json cycles = Json::array();
  for (const auto& cycle : profile.saturated_cycles) {
    Json names = Json::array();
    for (int a : cycle) names.push_back(q.arrow(a).name);
    cycles.push_back(names);
  }
  out["saturated_cycles"] = cycles;
  Json gentle_arrows = Json::array();
  for (int a : profile.gentle_arrows) gentle_arrows.push_back(q.arrow(a).name);
  out["gentle_arrows"] = gentle_arrows;
  Json critical = Json::array();
  for (const Path& p : profile.critical_paths) critical.push_back(p.str(q));
  out["critical_paths"] = critical;
  out["n_lambda"] = profile.n_lambda;
  return out;
}

namespace {

Json json_of_decomposition(const DecompositionResult& dec, const Quiver& q) {
  Json out;
  if (const auto* ok = std::get_if<RelationCycleDecomposition>(&dec)) {
    out["ok"] = true;
    Json comps = Json::array();
    for (const CycleComponent& c : ok->components) {
      Json comp;
      Json cycle = Json::array();
      for (int a : c.cycle) cycle.push_back(q.arrow(a).name);
      comp["cycle"] = cycle;
      comp["n"] = c.cycle_length;
      comp["r"] = c.relation_length;
      Json rels = Json::array();
      for (const Path& r : c.relations) rels.push_back(r.str(q));
      comp["relations"] = rels;
      comps.push_back(comp);
    }
    out["components"] = comps;
  } else {
    const auto& fail = std::get<StructureFailure>(dec);
    out["ok"] = false;
    out["failure"] = fail.kind;
    out["detail"] = fail.detail;
    Json witnesses = Json::array();
    for (const Path& w : fail.witnesses) witnesses.push_back(w.str(q));
    out["witnesses"] = witnesses;
  }
  return out;
}

Json json_of_classification(const Classification& cls, const Quiver& q) {
  Json out;
  out["verdict"] = cls.verdict == Verdict::Jacobian2CYTilted ? "JACOBIAN_2CY_TILTED"
                                                             : "NOT_2CY_TILTED";
  out["failed_stage"] = cls.failed_stage;
  if (cls.exponents) out["b"] = *cls.exponents;
  if (cls.cy_failure) {
    out["stably_3cy_failure"] = {{"component", cls.cy_failure->component},
                                 {"n", cls.cy_failure->cycle_length},
                                 {"r", cls.cy_failure->relation_length}};
  }
  if (cls.potential) out["potential"] = format_potential(*cls.potential, q);
  if (cls.jacobian) {
    Json jac;
    jac["matches"] = cls.jacobian->matches;
    Json matched = Json::array();
    for (const JacobianMatch& m : cls.jacobian->matched) {
      matched.push_back({{"arrow", q.arrow(m.arrow).name},
                         {"relation", m.relation.str(q)},
                         {"scalar", m.scalar.str()}});
    }
    jac["derivatives"] = matched;
    out["jacobian_check"] = jac;
  }
  return out;
}

}  // namespace

Json analyze_report(const AlgebraPtr& algebra, const std::string& input_bytes,
                    const ReportOptions& opts) {
  const Quiver& q = algebra->quiver();
  Json doc = report_header(input_bytes);
  doc["analysis"] = Json::object();
  Json& a = doc["analysis"];
  a["vertices"] = q.vertex_count();
  a["arrows"] = q.arrow_count();
  a["relations"] = static_cast<int>(algebra->bound().relations().size());
  a["basis_dimension"] = algebra->path_count();

  Classification cls = classify(algebra);
  a["decomposition"] = json_of_decomposition(cls.decomposition, q);
  a["classification"] = json_of_classification(cls, q);
  a["gentle"] = json_of_gentle(gentle_profile(algebra->bound()), q);
  a["gorenstein_dimension"] = json_of_projdim(cls.gorenstein.dimension);
  a["gorenstein_via_critical_paths"] = cls.gorenstein.via_critical_paths;
  a["global_dimension"] = json_of_projdim(global_dimension(algebra));
  if (const auto* dec = std::get_if<RelationCycleDecomposition>(&cls.decomposition)) {
    const bool one_gorenstein = cls.gorenstein.dimension.kind == ProjDim::Kind::Finite &&
                                cls.gorenstein.dimension.value <= 1;
    if (one_gorenstein) {
      SingularityInvariants inv = singularity_invariants(*dec);
      Json pairs = Json::array();
      for (auto [r1, n] : inv.pairs) pairs.push_back({r1, n});
      a["singularity_invariants"] = {{"pairs", pairs}, {"total", inv.total}};
    }
  }
  (void)opts;
  return doc;
}

Json classify_report(const AlgebraPtr& algebra, const std::string& input_bytes,
                     const ReportOptions& opts) {
  Json doc = report_header(input_bytes);
  Classification cls = classify(algebra);
  doc["decomposition"] = json_of_decomposition(cls.decomposition, algebra->quiver());
  doc["classification"] = json_of_classification(cls, algebra->quiver());
  doc["gorenstein_dimension"] = json_of_projdim(cls.gorenstein.dimension);
  (void)opts;
  return doc;
}

Json gp_report(const AlgebraPtr& algebra, const std::string& input_bytes,
               const std::string& method, int cy_m, bool cross_check,
               const ReportOptions& opts) {
  const Quiver& q = algebra->quiver();
  Json doc = report_header(input_bytes);
  doc["method"] = method;
  GentleProfile profile = gentle_profile(algebra->bound());

  SampleOptions sample;
  sample.seed = opts.seed;

  auto kalck_list = [&]() {
    std::vector<StringWalk> walks = kalck_gp_modules(algebra, profile);
    Json out = Json::array();
    for (const StringWalk& w : walks) {
      Json item;
      item["walk"] = format_walk(w, q);
      item["dims"] = json_of_dims(string_module(algebra, w));
      out.push_back(item);
    }
    return out;
  };

  // Candidate modules for the module-level methods: string modules over a
  // string algebra, path modules otherwise; deduplicated up to isomorphism.
  auto candidates = [&]() {
    std::vector<std::pair<std::string, Representation>> mods;
    if (profile.is_string) {
      StringEnumeration strings =
          enumerate_strings(algebra, 2 * algebra->path_count() + 2);
      if (strings.truncated) doc["candidates_truncated"] = true;
      doc["bands_exist"] = strings.bands_exist;
      for (const StringWalk& w : strings.walks) {
        mods.emplace_back(format_walk(w, q), string_module(algebra, w));
      }
    } else {
      for (int pid = 0; pid < algebra->path_count(); ++pid) {
        mods.emplace_back("U(" + algebra->path(pid).str(q) + ")",
                          path_module(algebra, pid));
      }
    }
    return mods;
  };

  auto run_module_method = [&](bool use_ext, int d_or_m) {
    Json out = Json::array();
    std::vector<Representation> found;
    for (auto& [name, rep] : candidates()) {
      if (is_projective_module(rep)) continue;
      bool keep = false;
      for (const Representation& prev : found) {
        if (is_isomorphic(prev, rep, sample).isomorphic) {
          keep = true;
          break;
        }
      }
      if (keep) continue;  // already reported an isomorphic candidate
      const bool member = use_ext ? gp_membership_exact(rep, d_or_m)
                                  : omega_tau_test(rep, d_or_m, sample);
      if (member) {
        found.push_back(rep);
        Json item;
        item["module"] = name;
        item["dims"] = json_of_dims(rep);
        out.push_back(item);
      }
    }
    return out;
  };

  int gorenstein = -1;
  if (method != "kalck" || cross_check) {
    gorenstein = gorenstein_dimension(algebra);
    doc["gorenstein_dimension"] = gorenstein;
  }
  if (method == "kalck") {
    if (!profile.is_gentle) {
      throw MethodInapplicableError("the kalck method requires a gentle algebra");
    }
    doc["modules"] = kalck_list();
  } else if (method == "ext") {
    doc["modules"] = run_module_method(true, gorenstein);
  } else if (method == "omega-tau") {
    const int m_used = cy_m >= 0 ? cy_m : gorenstein;
    if (m_used < gorenstein) {
      throw MethodInapplicableError("omega-tau requires m at least the Gorenstein dimension (" +
                                    std::to_string(gorenstein) + ")");
    }
    doc["m"] = m_used;
    doc["modules"] = run_module_method(false, m_used);
  } else {
    throw MethodInapplicableError("unknown method '" + method + "'");
  }

  if (cross_check) {
    Json ext_modules = run_module_method(true, gorenstein);
    const int m_used = cy_m >= 0 ? cy_m : gorenstein;
    Json omega_modules = run_module_method(false, m_used);
    std::set<std::string> ext_names, omega_names;
    for (const auto& item : ext_modules) ext_names.insert(item["dims"].dump());
    for (const auto& item : omega_modules) omega_names.insert(item["dims"].dump());
    doc["cross_check"] = Json::object();
    doc["cross_check"]["ext_count"] = ext_modules.size();
    doc["cross_check"]["omega_tau_count"] = omega_modules.size();
    bool agree = ext_names == omega_names;
    if (profile.is_gentle) {
      const std::size_t kalck_count = kalck_list().size();
      doc["cross_check"]["kalck_count"] = kalck_count;
      agree = agree && ext_names.size() == kalck_count;
    }
    doc["cross_check"]["agree"] = agree;
    if (!agree) {
      throw PropertyViolationError("Gorenstein-projective methods disagree");
    }
  }
  return doc;
}

Json verify_report(const AlgebraPtr& algebra, const std::string& input_bytes, int m,
                   const ReportOptions& opts) {
  Json doc = report_header(input_bytes);
  AngulationReport report = verify_angulation_properties(algebra, m);
  doc["m"] = m;
  doc["ok"] = report.ok;
  doc["gentle"] = report.gentle;
  doc["saturated_cycle_lengths"] = report.saturated_cycle_lengths;
  doc["max_offcycle_chain"] = report.max_offcycle_chain;
  doc["gorenstein_dimension"] = json_of_projdim(report.gorenstein);
  doc["violations"] = report.violations;
  (void)opts;
  return doc;
}

namespace {

void render_node(const Json& node, const std::string& indent, std::ostream& os) {
  if (node.is_object()) {
    for (auto it = node.begin(); it != node.end(); ++it) {
      if (it.value().is_object() || it.value().is_array()) {
        os << indent << it.key() << ":\n";
        render_node(it.value(), indent + "  ", os);
      } else {
        os << indent << it.key() << ": " << it.value().dump() << "\n";
      }
    }
  } else if (node.is_array()) {
    if (node.empty()) {
      os << indent << "(none)\n";
      return;
    }
    for (const auto& item : node) {
      if (item.is_object() || item.is_array()) {
        os << indent << "-\n";
        render_node(item, indent + "  ", os);
      } else {
        os << indent << "- " << item.dump() << "\n";
      }
    }
  } else {
    os << indent << node.dump() << "\n";
  }
}

}  // namespace

std::string render_human(const Json& doc) {
  std::ostringstream os;
  render_node(doc, "", os);
  return os.str();
}

}  // namespace qgp
