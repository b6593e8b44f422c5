#pragma once

#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "lelong/covercheck.hpp"
#include "lelong/harness.hpp"

namespace lelong {

// Field order is kept as written so output is stable byte for byte.
using Json = nlohmann::ordered_json;

/// Instance document:
///   {"lines": [[a,b,c],...], "conics": [[6 coeffs],...], "weights": [...], "alpha": "p/q"}
/// Every rational is a "p/q" string or a JSON integer. Weights follow the
/// lines, then the conics. "conics" and "alpha" are optional.
struct InstanceFile {
  DivisorCurrent current;
  std::optional<Rational> alpha;
};

/// Throws Parse with the offending field ("weights[3]", "lines[0][2]").
/// When alpha is present and require_unit_mass holds, the mass must be 1.
InstanceFile parse_instance(const Json& doc, bool require_unit_mass = true);
Json instance_to_json(const DivisorCurrent& t, const std::optional<Rational>& alpha);

/// {"points": [[x,y,z], ...]}
std::vector<ProjPoint> parse_points(const Json& doc);
Json points_to_json(std::span<const ProjPoint> points);

/// Reads and parses JSON text; syntax errors report line and column.
Json read_json_file(const std::filesystem::path& path);
Json parse_json_text(const std::string& text);
/// Writes to a temporary sibling and renames it into place.
void write_text_file(const std::filesystem::path& path, const std::string& text);

Json to_json(const Rational& r);
Json to_json(const ProjPoint& p);
Json to_json(const Curve& c);
Json to_json(const Witness& w);
Json to_json(const LevelSet& e);
Json to_json(const CoverVerdict& v);

Rational rational_from_json(const Json& j, const std::string& where);
ProjPoint point_from_json(const Json& j, const std::string& where);
Curve curve_from_json(const Json& j, const std::string& where);
Witness witness_from_json(const Json& j, const std::string& where);
LevelSet level_set_from_json(const Json& j, const std::string& where);
CoverVerdict verdict_from_json(const Json& j, const std::string& where);

/// Level set plus ν at every isolated point.
Json level_set_report(const DivisorCurrent& t, const LevelSet& e);

/// Report of the conic cover check on a valid instance.
Json check_report(const TheoremInstance& inst, const TheoremReport& report);

/// Counters, histograms and full counterexample payloads; wall time is not
/// part of the document so reruns produce identical files.
Json run_report_to_json(const RunReport& r);
RunReport run_report_from_json(const Json& j);

}  // namespace lelong
