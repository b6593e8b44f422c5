#pragma once

#include <optional>
#include <span>
#include <vector>

#include "lelong/currents.hpp"

namespace lelong {

/// Lower bound the mixed current must beat at a probe point.
struct BoundEntry {
  ProjPoint point;
  Rational original;     // ν(T, point)
  Rational constructed;  // ν(R, point)
  Rational bound;
  bool exceeds = false;  // constructed > bound
};

/// A unit-mass current R built from T and auxiliary lines, evaluated at
/// caller-chosen probe points.
struct AuxCurrentReport {
  DivisorCurrent constructed;
  std::vector<BoundEntry> entries;

  /// Recomputed from `constructed` on every call.
  bool mass_check() const { return mass(constructed) == 1; }
  bool all_exceed() const;
};

/// (2/3)(1 - alpha_prime), the medium-point bound paired with alpha_prime.
Rational beta_prime(const Rational& alpha_prime);

/// (4 alpha_prime - 1)/3: the weight a heavy line must carry once the
/// intersection count is balanced. Throws BadAlphaPrime unless > 2/5.
Rational threshold_a(const Rational& alpha_prime);

/// R = ((5α'-2)/(15α')) ([L12] + [L13] + [L23]) + (2/(5α')) T, where Ljk
/// joins pj and pk; every probe is held against the bound 2/5.
/// Throws BadAlphaPrime, NonUnitMass or CollinearPoints.
AuxCurrentReport aux_three_lines(const DivisorCurrent& t, const ProjPoint& p1, const ProjPoint& p2,
                                 const ProjPoint& p3, const Rational& alpha_prime,
                                 std::span<const ProjPoint> probes);

/// R = ((5α'-2)/(5α')) [L] + (2/(5α')) T, probes held against 2/5.
AuxCurrentReport aux_single_line(const DivisorCurrent& t, const ProjLine& l, const Rational& alpha_prime,
                                 std::span<const ProjPoint> probes);

struct RescaleEntry {
  ProjPoint point;
  Rational original;     // ν(T, x)
  Rational rescaled;     // ν(S, x), evaluated on S
  Rational closed_form;  // (ν(T, x) - a·mult_x(L)) / (1 - a)
  bool on_line = false;
  /// Set when alpha_prime was supplied, x is off L and ν(T, x) > β'.
  bool bound_applies = false;
  Rational ratio_bound;  // β' / (1 - a)
  bool exceeds_ratio_bound = false;
  bool exceeds_half = false;
};

struct RescaleReport {
  Rational a;  // generic Lelong number of T along L
  DivisorCurrent rescaled;
  /// a > threshold_a(alpha_prime); false when no alpha_prime was given.
  bool a_above_threshold = false;
  std::vector<RescaleEntry> entries;

  bool mass_check() const { return mass(rescaled) == 1; }
};

/// S = (T - a[L]) / (1 - a) with a the weight of L in T.
/// Throws NonUnitMass, FullWeightLine (a = 1) or BadAlphaPrime.
RescaleReport residual_rescale(const DivisorCurrent& t, const ProjLine& l, std::span<const ProjPoint> probes,
                               const std::optional<Rational>& alpha_prime = std::nullopt);

}  // namespace lelong
