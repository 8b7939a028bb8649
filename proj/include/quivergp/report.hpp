#pragma once

// Machine-readable (ordered JSON) and human-readable reports for the CLI.
// Reports are deterministic for a given input and flag set.

#include <cstdint>
#include <string>

#include "json.hpp"
#include "quivergp/angulation.hpp"
#include "quivergp/gorenstein.hpp"
#include "quivergp/strings.hpp"

namespace qgp {

inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr int kReportSchemaVersion = 1;

using Json = nlohmann::ordered_json;

std::string input_digest(const std::string& bytes);  // fnv1a-64, hex

struct ReportOptions {
  std::uint64_t seed = 1;
  std::size_t cap = 1'000'000;
};

Json report_header(const std::string& input_bytes);

Json analyze_report(const AlgebraPtr& algebra, const std::string& input_bytes,
                    const ReportOptions& opts);
Json classify_report(const AlgebraPtr& algebra, const std::string& input_bytes,
                     const ReportOptions& opts);
Json gp_report(const AlgebraPtr& algebra, const std::string& input_bytes,
               const std::string& method, int cy_m, bool cross_check,
               const ReportOptions& opts);
Json verify_report(const AlgebraPtr& algebra, const std::string& input_bytes, int m,
                   const ReportOptions& opts);

// Shared pieces.
Json json_of_path(const Path& p, const Quiver& q);
Json json_of_dims(const Representation& m);
Json json_of_gentle(const GentleProfile& profile, const Quiver& q);
Json json_of_projdim(const ProjDim& pd);

std::string render_human(const Json& doc);

}  // namespace qgp
