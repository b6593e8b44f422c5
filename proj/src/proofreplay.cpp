#include "lelong/proofreplay.hpp"

#include <algorithm>

namespace lelong {

namespace {

void check_alpha_prime(const Rational& alpha_prime) {
  if (alpha_prime <= Rational(2, 5)) {
    throw Error(ErrorCode::BadAlphaPrime, "alpha' must exceed 2/5, got " + to_string(alpha_prime));
  }
}

void check_unit_mass(const DivisorCurrent& t) {
  if (const Rational m = mass(t); m != 1) throw Error(ErrorCode::NonUnitMass, "mass is " + to_string(m));
}

AuxCurrentReport evaluate(const DivisorCurrent& t, DivisorCurrent r, std::span<const ProjPoint> probes) {
  AuxCurrentReport report{std::move(r), {}};
  const Rational bound(2, 5);
  for (const auto& p : probes) {
    BoundEntry e{p, lelong_number(t, p), lelong_number(report.constructed, p), bound};
    e.exceeds = e.constructed > e.bound;
    report.entries.push_back(std::move(e));
  }
  return report;
}

}  // namespace

bool AuxCurrentReport::all_exceed() const {
  return std::all_of(entries.begin(), entries.end(), [](const BoundEntry& e) { return e.exceeds; });
}

Rational beta_prime(const Rational& alpha_prime) { return Rational(2, 3) * (1 - alpha_prime); }

Rational threshold_a(const Rational& alpha_prime) {
  check_alpha_prime(alpha_prime);
  return (4 * alpha_prime - 1) / 3;
}

AuxCurrentReport aux_three_lines(const DivisorCurrent& t, const ProjPoint& p1, const ProjPoint& p2,
                                 const ProjPoint& p3, const Rational& alpha_prime,
                                 std::span<const ProjPoint> probes) {
  check_alpha_prime(alpha_prime);
  check_unit_mass(t);
  const std::array<ProjPoint, 3> pts{p1, p2, p3};
  if (p1 == p2 || p1 == p3 || p2 == p3 || subset_on_curve_of_degree(pts, 1)) {
    throw Error(ErrorCode::CollinearPoints, "the three points must span a triangle");
  }
  const Rational line_weight = (5 * alpha_prime - 2) / (15 * alpha_prime);
  std::vector<Component> lines{{line_weight, Curve(line_through(p1, p2))},
                               {line_weight, Curve(line_through(p1, p3))},
                               {line_weight, Curve(line_through(p2, p3))}};
  DivisorCurrent r = add(DivisorCurrent(std::move(lines)), scale(t, 2 / (5 * alpha_prime)));
  return evaluate(t, std::move(r), probes);
}

AuxCurrentReport aux_single_line(const DivisorCurrent& t, const ProjLine& l, const Rational& alpha_prime,
                                 std::span<const ProjPoint> probes) {
  check_alpha_prime(alpha_prime);
  check_unit_mass(t);
  const Rational line_weight = (5 * alpha_prime - 2) / (5 * alpha_prime);
  DivisorCurrent r = add(DivisorCurrent({{line_weight, Curve(l)}}), scale(t, 2 / (5 * alpha_prime)));
  return evaluate(t, std::move(r), probes);
}

RescaleReport residual_rescale(const DivisorCurrent& t, const ProjLine& l, std::span<const ProjPoint> probes,
                               const std::optional<Rational>& alpha_prime) {
  check_unit_mass(t);
  if (alpha_prime) check_alpha_prime(*alpha_prime);
  const Curve line(l);
  RescaleReport report;
  report.a = generic_lelong_along(t, line);
  if (report.a == 1) throw Error(ErrorCode::FullWeightLine, "the line carries all the mass");
  report.rescaled = scale(siu_subtract(t, line, report.a), 1 / (1 - report.a));
  if (alpha_prime) report.a_above_threshold = report.a > threshold_a(*alpha_prime);

  for (const auto& p : probes) {
    RescaleEntry e{p, lelong_number(t, p), lelong_number(report.rescaled, p), 0, false, false, 0, false, false};
    e.on_line = incidence(p, l);
    e.closed_form = (e.original - report.a * (e.on_line ? 1 : 0)) / (1 - report.a);
    if (alpha_prime) {
      const Rational bp = beta_prime(*alpha_prime);
      e.ratio_bound = bp / (1 - report.a);
      e.bound_applies = !e.on_line && e.original > bp;
      e.exceeds_ratio_bound = e.rescaled > e.ratio_bound;
      e.exceeds_half = e.rescaled > Rational(1, 2);
    }
    report.entries.push_back(std::move(e));
  }
  return report;
}

}  // namespace lelong
