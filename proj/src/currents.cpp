#include "lelong/currents.hpp"

#include <algorithm>

namespace lelong {

DivisorCurrent::DivisorCurrent(std::vector<Component> components) {
  for (auto& c : components) {
    c.weight.canonicalize();
    if (c.weight < 0) throw Error(ErrorCode::NegativeWeight, "weight " + to_string(c.weight) + " on " + describe(c.curve));
  }
  std::stable_sort(components.begin(), components.end(),
                   [](const Component& a, const Component& b) { return a.curve < b.curve; });
  for (auto& c : components) {
    if (!components_.empty() && components_.back().curve == c.curve) {
      components_.back().weight += c.weight;
    } else {
      components_.push_back(std::move(c));
    }
  }
  std::erase_if(components_, [](const Component& c) { return c.weight == 0; });
}

Rational mass(const DivisorCurrent& t) {
  Rational total = 0;
  for (const auto& c : t.components()) total += c.weight * c.curve.degree();
  return total;
}

Rational lelong_number(const DivisorCurrent& t, const ProjPoint& p) {
  Rational total = 0;
  for (const auto& c : t.components()) {
    if (const int m = multiplicity(p, c.curve); m != 0) total += c.weight * m;
  }
  return total;
}

Rational generic_lelong_along(const DivisorCurrent& t, const Curve& c) {
  for (const auto& comp : t.components()) {
    if (comp.curve == c) return comp.weight;
  }
  return 0;
}

DivisorCurrent siu_subtract(const DivisorCurrent& t, const Curve& c, const Rational& a) {
  const Rational w = generic_lelong_along(t, c);
  if (a < 0 || a > w) {
    throw Error(ErrorCode::WeightExceeded,
                "cannot remove " + to_string(a) + " of " + describe(c) + " with weight " + to_string(w));
  }
  std::vector<Component> comps = t.components();
  for (auto& comp : comps) {
    if (comp.curve == c) comp.weight -= a;
  }
  return DivisorCurrent(std::move(comps));
}

DivisorCurrent scale(const DivisorCurrent& t, const Rational& c) {
  if (c < 0) throw Error(ErrorCode::NegativeScale, "scale factor " + to_string(c));
  std::vector<Component> comps = t.components();
  for (auto& comp : comps) comp.weight *= c;
  return DivisorCurrent(std::move(comps));
}

DivisorCurrent add(const DivisorCurrent& t1, const DivisorCurrent& t2) {
  std::vector<Component> comps = t1.components();
  comps.insert(comps.end(), t2.components().begin(), t2.components().end());
  return DivisorCurrent(std::move(comps));
}

DivisorCurrent transform(const ProjTransform& m, const DivisorCurrent& t) {
  std::vector<Component> comps;
  comps.reserve(t.components().size());
  for (const auto& c : t.components()) comps.push_back({c.weight, m(c.curve)});
  return DivisorCurrent(std::move(comps));
}

std::vector<ProjPoint> candidate_points(const DivisorCurrent& t) {
  const auto& comps = t.components();
  std::vector<ProjPoint> pts;
  for (std::size_t i = 0; i < comps.size(); ++i) {
    for (std::size_t j = i + 1; j < comps.size(); ++j) {
      const auto meet = intersect(comps[i].curve, comps[j].curve);
      pts.insert(pts.end(), meet.begin(), meet.end());
    }
  }
  return unique_points(pts);
}

bool LevelSet::contains(const ProjPoint& p) const {
  if (std::find(isolated_points.begin(), isolated_points.end(), p) != isolated_points.end()) return true;
  return std::any_of(component_curves.begin(), component_curves.end(),
                     [&](const Curve& c) { return incidence(p, c); });
}

LevelSet level_set(const DivisorCurrent& t, const Rational& threshold, bool strict) {
  if (threshold <= 0) throw Error(ErrorCode::NonpositiveThreshold, "threshold " + to_string(threshold));
  LevelSet out;
  out.threshold = threshold;
  out.strict = strict;
  for (const auto& c : t.components()) {
    if (passes(c.weight, threshold, strict)) out.component_curves.push_back(c.curve);
  }
  for (const auto& p : candidate_points(t)) {
    if (!passes(lelong_number(t, p), threshold, strict)) continue;
    const bool on_curve = std::any_of(out.component_curves.begin(), out.component_curves.end(),
                                      [&](const Curve& c) { return incidence(p, c); });
    if (!on_curve) out.isolated_points.push_back(p);
  }
  return out;
}

}  // namespace lelong
