// Command-line front end: analyze / classify / gp / module / angulate / verify.
// Exit codes: 0 success, 1 internal error, 2 input or validation failure,
// 3 property violation (a structural invariant failed under `verify`).

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "quivergp/report.hpp"

namespace {

using qgp::Json;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw qgp::ValidationError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct GlobalFlags {
  std::string format = "json";
  std::uint64_t seed = 1;
  std::size_t cap = 1'000'000;
};

void emit(const Json& doc, const GlobalFlags& flags) {
  if (flags.format == "human") {
    std::cout << qgp::render_human(doc);
  } else {
    std::cout << doc.dump(2) << "\n";
  }
}

qgp::AlgebraPtr load_algebra(const std::string& path, const GlobalFlags& flags,
                             std::string* bytes) {
  *bytes = read_file(path);
  qgp::PathAlgebra::Options opts;
  opts.path_cap = flags.cap;
  return qgp::algebra_from_json(*bytes, opts);
}

qgp::Representation resolve_module(const qgp::AlgebraPtr& algebra, const std::string& spec) {
  const qgp::Quiver& q = algebra->quiver();
  auto colon = spec.find(':');
  if (spec.rfind("simple:", 0) == 0) {
    return qgp::simple(algebra, q.vertex_index(spec.substr(colon + 1)));
  }
  if (spec.rfind("proj:", 0) == 0) {
    return qgp::projective(algebra, q.vertex_index(spec.substr(colon + 1)));
  }
  if (spec.rfind("inj:", 0) == 0) {
    return qgp::injective(algebra, q.vertex_index(spec.substr(colon + 1)));
  }
  if (spec.rfind("string:", 0) == 0) {
    return qgp::string_module(algebra, qgp::parse_walk(algebra, spec.substr(colon + 1)));
  }
  if (!spec.empty() && spec[0] == '@') {
    return qgp::string_module(algebra, qgp::parse_walk(algebra, spec));
  }
  throw qgp::ValidationError(
      "module specifier must be simple:X, proj:X, inj:X, string:WALK, or @VERTEX");
}

int run(int argc, char** argv) {
  CLI::App app{"Gorenstein and Calabi-Yau structure of monomial bound quiver algebras"};
  app.require_subcommand(1);
  GlobalFlags flags;
  app.add_option("--format", flags.format, "Output format")
      ->check(CLI::IsMember({"json", "human", "dot"}))
      ->capture_default_str();
  app.add_option("--seed", flags.seed, "Seed for sampled isomorphism tests")
      ->capture_default_str();
  app.add_option("--cap", flags.cap, "Path enumeration cap")->capture_default_str();

  std::string path;
  auto* analyze = app.add_subcommand("analyze", "Full structural report for a quiver document");
  analyze->add_option("input", path, "Quiver document")->required();

  auto* classify_cmd = app.add_subcommand("classify", "Classification verdict only");
  classify_cmd->add_option("input", path, "Quiver document")->required();

  auto* gp = app.add_subcommand("gp", "Gorenstein-projective indecomposables");
  std::string method = "omega-tau";
  int cy_m = -1;
  bool cross_check = false;
  gp->add_option("input", path, "Quiver document")->required();
  gp->add_option("--method", method, "kalck | ext | omega-tau")
      ->check(CLI::IsMember({"kalck", "ext", "omega-tau"}))
      ->capture_default_str();
  gp->add_option("--m", cy_m, "Calabi-Yau exponent for omega-tau (default: Gorenstein dim)");
  gp->add_flag("--cross-check", cross_check, "Run all applicable methods and compare");

  auto* module_cmd = app.add_subcommand("module", "Apply module-calculus operations");
  std::string simple_spec, proj_spec, inj_spec, string_spec, ops, with_spec;
  int ext_i = 1;
  module_cmd->add_option("input", path, "Quiver document")->required();
  module_cmd->add_option("--simple", simple_spec, "Start from S(X)");
  module_cmd->add_option("--proj", proj_spec, "Start from P(X)");
  module_cmd->add_option("--inj", inj_spec, "Start from I(X)");
  module_cmd->add_option("--string", string_spec, "Start from the string module M(W)");
  module_cmd
      ->add_option("--op", ops,
                   "Comma-separated pipeline: tau, syzygy, cosyzygy, top, radical, "
                   "socle, strip, then optionally iso or ext")
      ->required();
  module_cmd->add_option("--with", with_spec, "Second module for iso/ext");
  module_cmd->add_option("--i", ext_i, "Ext degree (with --op ...,ext)");

  auto* angulate = app.add_subcommand("angulate", "Derive the bound quiver of an angulation");
  std::string out_path;
  angulate->add_option("input", path, "Angulation document")->required();
  angulate->add_option("--out", out_path, "Write the quiver document here instead of stdout");

  auto* verify = app.add_subcommand("verify", "Check the structural consequences for an "
                                              "angulation-derived quiver");
  int verify_m = 1;
  verify->add_option("input", path, "Quiver document")->required();
  verify->add_option("--m", verify_m, "Angulation parameter m")->required();

  CLI11_PARSE(app, argc, argv);

  qgp::ReportOptions ropts;
  ropts.seed = flags.seed;
  ropts.cap = flags.cap;

  if (analyze->parsed()) {
    std::string bytes;
    qgp::AlgebraPtr algebra = load_algebra(path, flags, &bytes);
    if (flags.format == "dot") {
      std::cout << qgp::quiver_to_dot(algebra->bound());
      return 0;
    }
    emit(qgp::analyze_report(algebra, bytes, ropts), flags);
    return 0;
  }
  if (classify_cmd->parsed()) {
    std::string bytes;
    qgp::AlgebraPtr algebra = load_algebra(path, flags, &bytes);
    emit(qgp::classify_report(algebra, bytes, ropts), flags);
    return 0;
  }
  if (gp->parsed()) {
    std::string bytes;
    qgp::AlgebraPtr algebra = load_algebra(path, flags, &bytes);
    emit(qgp::gp_report(algebra, bytes, method, cy_m, cross_check, ropts), flags);
    return 0;
  }
  if (module_cmd->parsed()) {
    std::string bytes;
    qgp::AlgebraPtr algebra = load_algebra(path, flags, &bytes);
    std::string spec;
    if (!simple_spec.empty()) spec = "simple:" + simple_spec;
    if (!proj_spec.empty()) spec = "proj:" + proj_spec;
    if (!inj_spec.empty()) spec = "inj:" + inj_spec;
    if (!string_spec.empty()) {
      spec = string_spec[0] == '@' ? string_spec : "string:" + string_spec;
    }
    if (spec.empty()) {
      throw qgp::ValidationError("one of --simple/--proj/--inj/--string is required");
    }
    qgp::Representation current = resolve_module(algebra, spec);
    qgp::SampleOptions sample;
    sample.seed = flags.seed;

    Json doc = qgp::report_header(bytes);
    doc["module"] = spec;
    doc["start_dims"] = qgp::json_of_dims(current);
    Json trail = Json::array();
    std::stringstream ss(ops);
    std::string op;
    bool done = false;
    while (std::getline(ss, op, ',')) {
      if (done) throw qgp::ValidationError("iso/ext must be the last operation");
      if (op == "tau") {
        current = qgp::tau_stable(current);
      } else if (op == "syzygy") {
        current = qgp::strip_projectives(qgp::syzygy(current)).stable;
      } else if (op == "cosyzygy") {
        current = qgp::cosyzygy_gp(current, qgp::gorenstein_dimension(algebra), sample);
      } else if (op == "top") {
        current = qgp::top_of(current).object;
      } else if (op == "radical") {
        current = qgp::radical_of(current).object;
      } else if (op == "socle") {
        current = qgp::socle_of(current).object;
      } else if (op == "strip") {
        current = qgp::strip_projectives(current).stable;
      } else if (op == "iso") {
        if (with_spec.empty()) throw qgp::ValidationError("iso needs --with");
        qgp::Representation other = resolve_module(algebra, with_spec);
        qgp::IsoResult iso = qgp::is_isomorphic(current, other, sample);
        doc["isomorphic"] = iso.isomorphic;
        done = true;
      } else if (op == "ext") {
        qgp::Representation other = with_spec.empty()
                                        ? qgp::regular_representation(algebra)
                                        : resolve_module(algebra, with_spec);
        doc["ext_i"] = ext_i;
        doc["ext_dim"] = qgp::ext_dim(current, other, ext_i);
        done = true;
      } else {
        throw qgp::ValidationError("unknown operation '" + op + "'");
      }
      trail.push_back(op);
    }
    doc["ops"] = trail;
    doc["dims"] = qgp::json_of_dims(current);
    doc["total_dim"] = current.total_dim();
    emit(doc, flags);
    return 0;
  }
  if (angulate->parsed()) {
    const std::string bytes = read_file(path);
    qgp::Angulation t = qgp::parse_angulation(bytes);
    qgp::BoundQuiver bq = qgp::bound_quiver_from_angulation(t);
    qgp::PathAlgebra::Options opts;
    opts.path_cap = flags.cap;
    qgp::AlgebraPtr algebra = qgp::PathAlgebra::build(bq, opts);
    // The derived algebra must satisfy its own structure theory.
    qgp::check_angulation_properties(algebra, t.m);
    const std::string quiver_doc = qgp::serialize_quiver(bq);
    if (flags.format == "dot") {
      std::cout << qgp::quiver_to_dot(bq);
    } else if (!out_path.empty()) {
      std::ofstream out(out_path, std::ios::binary);
      out << quiver_doc;
      emit(qgp::verify_report(algebra, bytes, t.m, ropts), flags);
    } else {
      std::cout << quiver_doc;
    }
    return 0;
  }
  if (verify->parsed()) {
    std::string bytes;
    qgp::AlgebraPtr algebra = load_algebra(path, flags, &bytes);
    Json doc = qgp::verify_report(algebra, bytes, verify_m, ropts);
    emit(doc, flags);
    if (!doc["ok"].get<bool>()) return 3;
    return 0;
  }
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const qgp::PropertyViolationError& e) {
    std::cerr << "property violation: " << e.what() << "\n";
    for (const auto& w : e.witnesses()) std::cerr << "  witness: " << w << "\n";
    return 3;
  } catch (const qgp::ValidationError& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    for (const auto& v : e.violations()) std::cerr << "  " << v << "\n";
    return 2;
  } catch (const qgp::SchemaError& e) {
    std::cerr << "schema error: " << e.what() << "\n";
    return 2;
  } catch (const qgp::MethodInapplicableError& e) {
    std::cerr << "method not applicable: " << e.what() << "\n";
    return 2;
  } catch (const qgp::NotGentleError& e) {
    std::cerr << "not gentle: " << e.what() << "\n";
    return 2;
  } catch (const qgp::NotGorensteinError& e) {
    std::cerr << "not Gorenstein: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
}
