#pragma once

#include <vector>

#include "lelong/projgeom.hpp"
#include "lelong/rational.hpp"

namespace lelong {

struct Component {
  Rational weight;
  Curve curve;

  friend bool operator==(const Component&, const Component&) = default;
};

/// Finite nonnegative combination Σ w_i [C_i] of lines and irreducible
/// conics. Components are kept sorted by curve, duplicates merged and
/// zero-weight entries dropped, so two equal currents compare equal.
class DivisorCurrent {
 public:
  DivisorCurrent() = default;
  /// Throws NegativeWeight on any weight < 0.
  explicit DivisorCurrent(std::vector<Component> components);

  const std::vector<Component>& components() const { return components_; }
  bool empty() const { return components_.empty(); }

  friend bool operator==(const DivisorCurrent&, const DivisorCurrent&) = default;

 private:
  std::vector<Component> components_;
};

/// Σ weight · degree.
Rational mass(const DivisorCurrent& t);

/// Σ weight · multiplicity of p on the component.
Rational lelong_number(const DivisorCurrent& t, const ProjPoint& p);

/// Coefficient of c in t (0 when absent).
Rational generic_lelong_along(const DivisorCurrent& t, const Curve& c);

/// t - a[c]. Throws WeightExceeded unless 0 <= a <= generic_lelong_along(t, c).
DivisorCurrent siu_subtract(const DivisorCurrent& t, const Curve& c, const Rational& a);

/// c · t. Throws NegativeScale when c < 0.
DivisorCurrent scale(const DivisorCurrent& t, const Rational& c);
DivisorCurrent add(const DivisorCurrent& t1, const DivisorCurrent& t2);

DivisorCurrent transform(const ProjTransform& m, const DivisorCurrent& t);

/// Every pairwise intersection point of distinct components, sorted and
/// deduplicated. These are the only points where ν can exceed the weight of
/// the components through them. Throws IrrationalIntersection when some pair
/// of components meets outside the rational points.
std::vector<ProjPoint> candidate_points(const DivisorCurrent& t);

inline bool passes(const Rational& value, const Rational& threshold, bool strict) {
  return strict ? value > threshold : value >= threshold;
}

/// {p : ν(t, p) >= threshold} (or > when strict), split into whole component
/// curves and the finitely many remaining points.
struct LevelSet {
  Rational threshold;
  bool strict = false;
  std::vector<Curve> component_curves;
  std::vector<ProjPoint> isolated_points;

  bool contains(const ProjPoint& p) const;
  bool finite() const { return component_curves.empty(); }

  friend bool operator==(const LevelSet&, const LevelSet&) = default;
};

/// Throws NonpositiveThreshold when threshold <= 0.
LevelSet level_set(const DivisorCurrent& t, const Rational& threshold, bool strict);

}  // namespace lelong
