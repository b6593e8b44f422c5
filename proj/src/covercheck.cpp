#include "lelong/covercheck.hpp"

#include <algorithm>

#include "lelong/linalg.hpp"

namespace lelong {

namespace {

// Curves forced into every witness, with the leftover degree budget.
struct Forced {
  std::vector<Curve> curves;
  int budget = 0;
  std::optional<Curve> overflow;  // first curve that does not fit
};

Forced force_components(const LevelSet& e, int witness_degree) {
  Forced f;
  int used = 0;
  for (const auto& c : e.component_curves) {
    used += c.degree();
    if (used > witness_degree) {
      f.overflow = c;
      return f;
    }
    f.curves.push_back(c);
  }
  f.budget = witness_degree - used;
  return f;
}

bool on_forced(const Forced& f, const ProjPoint& p) {
  return std::any_of(f.curves.begin(), f.curves.end(), [&](const Curve& c) { return incidence(p, c); });
}

std::optional<ProjLine> line_through_all(std::span<const ProjPoint> pts) {
  Matrix m(3);
  for (const auto& p : pts) m.push_row(veronese_row(p, 1));
  const auto ns = nullspace(m);
  if (ns.empty()) return std::nullopt;
  return ProjLine(ns[0][0], ns[0][1], ns[0][2]);
}

std::optional<Conic> conic_through_all(std::span<const ProjPoint> pts) {
  const auto space = conic_space(pts);
  if (space.empty()) return std::nullopt;
  return Conic(space[0]);
}

// Witness of the given degree containing the forced curves and every point
// of `rest`, if one exists.
std::optional<Witness> complete_witness(const Forced& f, std::span<const ProjPoint> rest, int witness_degree) {
  if (f.budget == 0) {
    if (!rest.empty()) return std::nullopt;
    if (witness_degree == 1) return Witness{f.curves[0].line()};
    if (f.curves.size() == 1) return Witness{f.curves[0].conic()};
    return Witness{Conic::line_pair(f.curves[0].line(), f.curves[1].line())};
  }
  if (witness_degree == 1) {
    auto l = line_through_all(rest);
    if (!l) return std::nullopt;
    return Witness{*l};
  }
  if (f.budget == 1) {
    const ProjLine& forced = f.curves[0].line();
    if (rest.empty()) return Witness{Conic::line_pair(forced, forced)};
    auto l = line_through_all(rest);
    if (!l) return std::nullopt;
    return Witness{Conic::line_pair(forced, *l)};
  }
  auto q = conic_through_all(rest);
  if (!q) return std::nullopt;
  return Witness{*q};
}

std::optional<Covered> search(const Forced& f, std::span<const ProjPoint> uncovered, int witness_degree) {
  if (auto w = complete_witness(f, uncovered, witness_degree)) return Covered{*w, std::nullopt};
  std::vector<ProjPoint> rest;
  for (std::size_t skip = 0; skip < uncovered.size(); ++skip) {
    rest.clear();
    for (std::size_t i = 0; i < uncovered.size(); ++i) {
      if (i != skip) rest.push_back(uncovered[i]);
    }
    if (auto w = complete_witness(f, rest, witness_degree)) return Covered{*w, uncovered[skip]};
  }
  return std::nullopt;
}

// Greedily drops points while the remainder stays uncoverable; the result is
// an inclusion-minimal uncoverable subset.
std::vector<ProjPoint> minimal_obstruction(const Forced& f, std::vector<ProjPoint> pts, int witness_degree) {
  for (std::size_t i = 0; i < pts.size();) {
    std::vector<ProjPoint> trial = pts;
    trial.erase(trial.begin() + static_cast<std::ptrdiff_t>(i));
    if (!search(f, trial, witness_degree)) {
      pts = std::move(trial);
    } else {
      ++i;
    }
  }
  return pts;
}

CoverVerdict cover_check(const LevelSet& e, int witness_degree) {
  const Forced f = force_components(e, witness_degree);
  if (f.overflow) return NotCoverable{*f.overflow};
  std::vector<ProjPoint> uncovered;
  for (const auto& p : unique_points(e.isolated_points)) {
    if (!on_forced(f, p)) uncovered.push_back(p);
  }
  if (auto c = search(f, uncovered, witness_degree)) return *c;
  return NotCoverable{minimal_obstruction(f, std::move(uncovered), witness_degree)};
}

Triple line_point_sum(const Triple& u, const Triple& v) { return {u[0] + v[0], u[1] + v[1], u[2] + v[2]}; }

}  // namespace

CoverVerdict line_cover_check(const LevelSet& e) { return cover_check(e, 1); }

CoverVerdict conic_cover_check(const LevelSet& e) { return cover_check(e, 2); }

bool contains_curve(const Conic& q, const Curve& c) {
  if (c.is_conic()) return q == c.conic();
  Matrix m(3);
  m.push_row({c.line()[0], c.line()[1], c.line()[2]});
  const auto ns = nullspace(m);
  const Triple u{ns[0][0], ns[0][1], ns[0][2]};
  const Triple v{ns[1][0], ns[1][1], ns[1][2]};
  // A quadratic form vanishing at three points of a line vanishes on it.
  return q.eval(u) == 0 && q.eval(v) == 0 && q.eval(line_point_sum(u, v)) == 0;
}

std::optional<std::size_t> uncovered_count(const LevelSet& e, const Witness& w) {
  for (const auto& c : e.component_curves) {
    const bool inside = std::holds_alternative<ProjLine>(w) ? (c.is_line() && c.line() == std::get<ProjLine>(w))
                                                            : contains_curve(std::get<Conic>(w), c);
    if (!inside) return std::nullopt;
  }
  std::size_t missed = 0;
  for (const auto& p : unique_points(e.isolated_points)) {
    const bool hit = std::holds_alternative<ProjLine>(w) ? incidence(p, std::get<ProjLine>(w))
                                                         : incidence(p, std::get<Conic>(w));
    if (!hit) ++missed;
  }
  return missed;
}

bool obstruction_holds(const LevelSet& e, const NotCoverable& verdict, int witness_degree) {
  if (const auto* curve = std::get_if<Curve>(&verdict.obstruction)) {
    if (std::find(e.component_curves.begin(), e.component_curves.end(), *curve) == e.component_curves.end()) {
      return false;
    }
    int total = 0;
    for (const auto& c : e.component_curves) total += c.degree();
    return total > witness_degree;
  }
  const auto& pts = std::get<std::vector<ProjPoint>>(verdict.obstruction);
  if (pts.size() < 2) return false;
  for (const auto& p : pts) {
    if (std::find(e.isolated_points.begin(), e.isolated_points.end(), p) == e.isolated_points.end()) return false;
  }
  const Forced f = force_components(e, witness_degree);
  if (f.overflow) return false;
  return !search(f, unique_points(pts), witness_degree).has_value();
}

Rational beta_of(const Rational& alpha) {
  if (alpha <= Rational(2, 5)) throw Error(ErrorCode::AlphaOutOfRange, "alpha must exceed 2/5, got " + to_string(alpha));
  return Rational(2, 3) * (1 - alpha);
}

std::vector<ProjPoint> heavy_points(const DivisorCurrent& t, const Rational& alpha) {
  const LevelSet heavy = level_set(t, alpha, false);
  std::vector<ProjPoint> pts = heavy.isolated_points;
  for (const auto& c : heavy.component_curves) {
    if (c.is_line()) {
      Matrix m(3);
      m.push_row({c.line()[0], c.line()[1], c.line()[2]});
      const auto ns = nullspace(m);
      const Triple u{ns[0][0], ns[0][1], ns[0][2]};
      const Triple v{ns[1][0], ns[1][1], ns[1][2]};
      pts.emplace_back(u);
      pts.emplace_back(v);
      for (const Rational& s : {Rational(1), Rational(-1)}) {
        pts.emplace_back(Triple{u[0] + s * v[0], u[1] + s * v[1], u[2] + s * v[2]});
      }
    } else {
      // Rational points of a heavy conic are only known where other
      // components cross it.
      for (const auto& p : candidate_points(t)) {
        if (incidence(p, c)) pts.push_back(p);
      }
    }
  }
  return unique_points(pts);
}

TheoremInstance::TheoremInstance(DivisorCurrent t, Rational alpha, std::vector<ProjPoint> heavy)
    : current_(std::move(t)), alpha_(std::move(alpha)), heavy_(unique_points(heavy)) {
  beta_ = beta_of(alpha_);
  if (const Rational m = mass(current_); m != 1) {
    throw Error(ErrorCode::InvalidInstance, "current must have mass 1, has " + to_string(m));
  }
  if (heavy_.size() < 4) {
    throw Error(ErrorCode::InvalidInstance,
                "need at least 4 points with Lelong number >= " + to_string(alpha_) + ", found " +
                    std::to_string(heavy_.size()));
  }
  for (const auto& p : heavy_) {
    if (lelong_number(current_, p) < alpha_) {
      throw Error(ErrorCode::InvalidInstance, describe(p) + " has Lelong number below alpha");
    }
  }
}

TheoremInstance TheoremInstance::from_current(DivisorCurrent t, Rational alpha) {
  beta_of(alpha);
  auto heavy = lelong::heavy_points(t, alpha);
  return TheoremInstance(std::move(t), std::move(alpha), std::move(heavy));
}

TheoremReport four_point_conic_check(const TheoremInstance& inst) {
  TheoremReport report{level_set(inst.current(), inst.beta(), true), NotCoverable{std::vector<ProjPoint>{}}, false};
  report.verdict = conic_cover_check(report.level);
  if (const auto* c = std::get_if<Covered>(&report.verdict)) {
    const auto& q = std::get<Conic>(c->witness);
    report.witness_through_heavy = std::all_of(inst.heavy_points().begin(), inst.heavy_points().end(),
                                               [&](const ProjPoint& p) { return incidence(p, q); });
  }
  return report;
}

SharpnessReport beta_sharpness_check(const DivisorCurrent& t, const Rational& alpha) {
  SharpnessReport r;
  r.beta = beta_of(alpha);
  const LevelSet strict = level_set(t, r.beta, true);
  const LevelSet loose = level_set(t, r.beta, false);
  r.strict_points = strict.isolated_points.size();
  r.nonstrict_points = loose.isolated_points.size();
  r.strict_coverable = is_covered(conic_cover_check(strict));
  r.nonstrict_coverable = is_covered(conic_cover_check(loose));
  if (loose.finite()) {
    r.nonstrict_m2 = m_j(loose.isolated_points, 2);
    r.sharp = static_cast<std::size_t>(r.nonstrict_m2) + 1 < r.nonstrict_points;
  }
  return r;
}

}  // namespace lelong
