#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "lelong/currents.hpp"
#include "lelong/projgeom.hpp"

namespace lelong {

/// Line predicates produce a line witness, conic predicates a (possibly
/// degenerate) quadratic form.
using Witness = std::variant<ProjLine, Conic>;

struct Covered {
  Witness witness;
  std::optional<ProjPoint> omitted;
};

/// Either a level-set curve that no admissible witness can contain, or a
/// minimal set of isolated points that no witness covers up to one omission
/// (after the forced curve components are taken into the witness).
using Obstruction = std::variant<Curve, std::vector<ProjPoint>>;

struct NotCoverable {
  Obstruction obstruction;
};

using CoverVerdict = std::variant<Covered, NotCoverable>;

inline bool is_covered(const CoverVerdict& v) { return std::holds_alternative<Covered>(v); }

/// Is there a line L with |E \ L| <= 1?
CoverVerdict line_cover_check(const LevelSet& e);

/// Is there a conic C, possibly reducible, with |E \ C| <= 1? Level-set
/// curves are forced into the witness, since a curve that is not a component
/// of C meets it in at most four points.
CoverVerdict conic_cover_check(const LevelSet& e);

/// Number of level-set points off the witness, or nullopt when some
/// level-set curve is not a component of it (infinitely many points missed).
std::optional<std::size_t> uncovered_count(const LevelSet& e, const Witness& w);

/// Re-checks a NotCoverable verdict from scratch: a curve obstruction must be
/// a level-set curve whose forced degree overflows the witness degree, a
/// point obstruction must be level-set points that stay uncoverable under
/// every single omission.
bool obstruction_holds(const LevelSet& e, const NotCoverable& verdict, int witness_degree);

/// Whether the conic contains the whole curve.
bool contains_curve(const Conic& q, const Curve& c);

/// (2/3)(1 - alpha). Throws AlphaOutOfRange unless alpha > 2/5.
Rational beta_of(const Rational& alpha);

/// Data for the four-heavy-point conic cover statement: a unit-mass current,
/// alpha > 2/5 and at least four points with ν >= alpha.
class TheoremInstance {
 public:
  /// Validates every hypothesis; throws InvalidInstance (or AlphaOutOfRange).
  TheoremInstance(DivisorCurrent t, Rational alpha, std::vector<ProjPoint> heavy_points);

  /// Collects the heavy points of t itself: isolated points of the non-strict
  /// level set at alpha plus four points on each heavy line. Throws
  /// InvalidInstance when fewer than four exist.
  static TheoremInstance from_current(DivisorCurrent t, Rational alpha);

  const DivisorCurrent& current() const { return current_; }
  const Rational& alpha() const { return alpha_; }
  const Rational& beta() const { return beta_; }
  const std::vector<ProjPoint>& heavy_points() const { return heavy_; }

 private:
  DivisorCurrent current_;
  Rational alpha_;
  Rational beta_;
  std::vector<ProjPoint> heavy_;
};

/// Heavy points of t at alpha found structurally (see from_current); does not
/// throw on too few.
std::vector<ProjPoint> heavy_points(const DivisorCurrent& t, const Rational& alpha);

struct TheoremReport {
  LevelSet level;  // strict level set at beta
  CoverVerdict verdict;
  /// Whether a Covered witness happens to pass through all heavy points.
  bool witness_through_heavy = false;
};

/// Computes E = level_set(T, beta, strict) and decides the conic cover. A
/// NotCoverable verdict on a valid instance is a counterexample report.
TheoremReport four_point_conic_check(const TheoremInstance& inst);

struct SharpnessReport {
  Rational beta;
  std::size_t strict_points = 0;
  std::size_t nonstrict_points = 0;
  int nonstrict_m2 = 0;
  bool strict_coverable = false;
  bool nonstrict_coverable = false;
  /// True iff the non-strict level set is finite with m_2 < |E| - 1.
  bool sharp = false;
};

/// Shows that the threshold beta cannot be lowered to a non-strict bound.
SharpnessReport beta_sharpness_check(const DivisorCurrent& t, const Rational& alpha);

}  // namespace lelong
