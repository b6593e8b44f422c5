#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lelong/currents.hpp"

namespace lelong {

/// The four extremal configurations:
///   FourLines        four lines in general position, uniform weights 1/4;
///                    the cover must omit exactly one point.
///   Cevians          a triangle plus the three lines joining its vertices to
///                    a generic point, weights 1/6; lowering the threshold to
///                    a non-strict bound breaks the cover.
///   Triangle         three lines with weight 1/3; only three heavy points and
///                    the level set contains whole lines.
///   CollinearTriple  seven lines with weights in 180ths; three collinear
///                    heavy points and no conic through eight of nine points.
enum class ExampleId { FourLines, Cevians, Triangle, CollinearTriple };

inline constexpr std::array<ExampleId, 4> kAllExamples{ExampleId::FourLines, ExampleId::Cevians,
                                                        ExampleId::Triangle, ExampleId::CollinearTriple};

std::string_view example_name(ExampleId id);
/// Accepts the names above in kebab case ("four-lines", "collinear-triple").
std::optional<ExampleId> parse_example_id(std::string_view name);

struct LabeledPoint {
  std::string label;
  ProjPoint point;
  Rational expected_lelong;
};

struct LabeledLine {
  std::string label;
  ProjLine line;
  std::vector<std::string> expected_points;  // labels incident to this line
};

struct NamedExample {
  ExampleId id;
  DivisorCurrent current;
  Rational alpha;
  std::vector<LabeledPoint> points;
  std::vector<LabeledLine> lines;

  const ProjPoint& point(std::string_view label) const;
  const ProjLine& line(std::string_view label) const;
};

/// Builds the configuration from fixed rational seeds; the incidence
/// structure is produced by joins and meets so it holds by construction.
/// Seeds that create extra incidences are skipped; throws DegenerateSeed if
/// every seed fails.
NamedExample build_example(ExampleId id);

/// Same as build_example but starting from seed number `seed` of the
/// built-in list. Throws DegenerateSeed if that seed is not generic.
NamedExample build_example_with_seed(ExampleId id, std::size_t seed);

/// Full incidence table matches the expected one: every expected incidence
/// holds, no other labeled point lies on a labeled line, labels are distinct.
bool incidence_audit(const NamedExample& ex);

struct FactResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

/// Recomputes every stated fact of the example from its current.
std::vector<FactResult> verify_example(const NamedExample& ex);

}  // namespace lelong
